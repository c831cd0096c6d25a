#include "kunzsg/gas.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>

namespace kunzsg::gas {
namespace {

Int ceil_ratio(Int a, Int b) { return (a + b - 1) / b; }

// Frobenius number where a closed formula is known.
std::optional<Int> frobenius_formula(const GasSpec& s)
{
    if (s.m == 3 && s.k == 1) return 6 * s.h + 2 * s.d - 3;
    if (s.m == 3 && s.k == 2 && s.h == 1) return 2 * s.d;
    if (s.m == 4 && s.k == 1) return 4 * (3 * s.h - 1) + 3 * s.d;
    if (s.m == 4 && s.k == 2) return 4 * (2 * s.h - 1) + 3 * s.d;
    return std::nullopt;
}

}  // namespace

void GasSpec::validate() const
{
    auto fail = [](const std::string& why) { throw Error(ErrorCode::InvalidSpec, why); };
    if (m != 3 && m != 4) fail("multiplicity must be 3 or 4, got " + std::to_string(m));
    if (h < 1) fail("h must be at least 1");
    if (d < 1) fail("d must be at least 1");
    if (k < 1 || k > m - 1) {
        fail("k must lie in [1, " + std::to_string(m - 1) + "], got " + std::to_string(k));
    }
    if (const Int g = std::gcd(d, Int{m}); g != 1) {
        fail("gcd(" + std::to_string(d) + "," + std::to_string(m) + ") = " + std::to_string(g)
             + ", expected 1");
    }
}

std::vector<Int> GasSpec::generators() const
{
    validate();
    std::vector<Int> gens{m};
    const Int base = checked::mul(m, h);
    for (int j = 1; j <= k; ++j) gens.push_back(checked::add(base, checked::mul(j, d)));
    return gens;
}

KunzVector gas_kunz(const GasSpec& s)
{
    s.validate();
    const Int h = s.h;
    const Int D = s.quotient();
    const Int r = s.d % s.m;
    auto up = [&](Int j) { return h * ceil_ratio(j, s.k); };

    if (s.m == 3) {
        if (r == 1) return KunzVector(3, {up(1) + D, up(2) + 2 * D});
        return KunzVector(3, {up(2) + 2 * D + 1, up(1) + D});
    }
    // m = 4; d is odd, so d mod 4 is 1 or 3
    if (r == 1) return KunzVector(4, {up(1) + D, up(2) + 2 * D, up(3) + 3 * D});
    return KunzVector(4, {up(3) + 3 * D + 2, up(2) + 2 * D + 1, up(1) + D});
}

GasBuild gas_build(const GasSpec& spec)
{
    const auto gens = spec.generators();
    auto built = from_generators(gens);
    auto closed = gas_kunz(spec);
    if (closed != built.kunz()) {
        throw std::logic_error("closed-form Kunz vector " + closed.to_string()
                               + " disagrees with generators " + built.kunz().to_string());
    }
    return {std::move(built), std::move(closed)};
}

GasClassification gas_classify(const GasSpec& spec)
{
    spec.validate();
    bool irreducible = false;
    if (spec.m == 3) {
        irreducible = spec.k == 1 || (spec.k == 2 && spec.h == 1);
    } else {
        irreducible = spec.k == 1 || spec.k == 2;
    }
    const Int f = frobenius_formula(spec).value_or(gas_kunz(spec).frobenius());
    const bool odd = f % 2 != 0;
    return {irreducible, irreducible && odd, irreducible && !odd, f};
}

}  // namespace kunzsg::gas
