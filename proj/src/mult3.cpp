#include "kunzsg/mult3.hpp"

#include <algorithm>

#include "kunzsg/semigroup.hpp"

namespace kunzsg::mult3 {
namespace {

bool first_gap_special(Kunz3 x) { return 2 * x.x1 >= x.x2 + 2; }
bool second_gap_special(Kunz3 x) { return 2 * x.x2 >= x.x1 + 1; }

// to_kunz() throws InvalidKunz naming the violated inequality
void require_valid(Kunz3 x)
{
    if (!x.valid()) (void)x.to_kunz();
}

KunzVector generated(std::initializer_list<Int> gens)
{
    const std::vector<Int> list(gens);
    return from_generators(list).kunz();
}

}  // namespace

Kunz3 Kunz3::from(const KunzVector& v)
{
    if (v.multiplicity() != 3) {
        throw Error(ErrorCode::MultiplicityMismatch,
                    "expected multiplicity 3, got " + std::to_string(v.multiplicity()));
    }
    return {v.at_class(1), v.at_class(2)};
}

KunzVector Kunz3::to_kunz() const { return KunzVector(3, {x1, x2}); }

bool Kunz3::valid() const noexcept
{
    return x1 >= 1 && x2 >= 1 && 2 * x1 >= x2 && 2 * x2 >= x1 - 1;
}

SpecialGapSet sg3(Kunz3 x)
{
    require_valid(x);
    std::vector<SpecialGap> out;
    if (x.x1 == 1 && x.x2 == 1) return {};
    // either condition forces the corresponding coordinate to be at least 2
    if (first_gap_special(x)) out.push_back({3 * x.x1 - 2, 1, x.x1});
    if (second_gap_special(x)) out.push_back({3 * x.x2 - 1, 2, x.x2});
    return SpecialGapSet(std::move(out));
}

bool is_irreducible3(Kunz3 x)
{
    require_valid(x);
    if (x.x1 == 1 && x.x2 == 1) return true;
    if (2 * x.x1 >= x.x2 + 2 && 2 * x.x2 <= x.x1) return true;
    return 2 * x.x2 >= x.x1 + 1 && 2 * x.x1 <= x.x2 + 1;
}

std::vector<Kunz3> irreducible_undercoordinates3(Kunz3 x)
{
    if (is_irreducible3(x)) {
        throw Error(ErrorCode::InputIsIrreducible,
                    "(" + std::to_string(x.x1) + "," + std::to_string(x.x2)
                        + ") is irreducible");
    }
    std::vector<Kunz3> out{{1, 1}};
    if (x.x1 >= 2) out.push_back({2, 1});
    if (x.x2 >= 2) out.push_back({1, 2});
    // keeps 3x_1 - 2 as Frobenius number
    out.push_back({x.x1, x.x1 % 2 != 0 ? (x.x1 - 1) / 2 : x.x1 / 2});
    // keeps 3x_2 - 1 as Frobenius number
    out.push_back({x.x2 % 2 == 0 ? x.x2 / 2 : (x.x2 + 1) / 2, x.x2});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Decomposition decompose3(Kunz3 x)
{
    const auto input = x.to_kunz();
    if (is_irreducible3(x)) return {input, {input}, true};

    const Int a = x.x1;
    const Int b = x.x2;
    const KunzVector first = a % 2 != 0 ? generated({3, (3 * a + 1) / 2})
                                        : generated({3, 3 * a + 1, (3 * a + 4) / 2});
    const KunzVector second = b % 2 == 0 ? generated({3, (3 * b + 2) / 2})
                                         : generated({3, (3 * b + 5) / 2, 3 * b + 2});
    return {input, {first, second}, true};
}

Decomposability3 classify3_decomposability(Kunz3 x)
{
    const bool odd_frobenius = x.to_kunz().frobenius() % 2 != 0;
    if (is_irreducible3(x)) return {odd_frobenius, !odd_frobenius};
    const bool x1_odd = x.x1 % 2 != 0;
    const bool x2_odd = x.x2 % 2 != 0;
    return {x1_odd && !x2_odd, !x1_odd && x2_odd};
}

}  // namespace kunzsg::mult3
