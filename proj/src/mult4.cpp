#include "kunzsg/mult4.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "cover.hpp"
#include "kunzsg/semigroup.hpp"

namespace kunzsg::mult4 {
namespace {

Int floor_div(Int a, Int b)
{
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Int ceil_div(Int a, Int b) { return -floor_div(-a, b); }

void require_valid(Kunz4 x)
{
    if (!x.valid()) (void)x.to_kunz();
}

Int gap_of(Kunz4 x, int cls) { return 4 * (x.at(cls) - 1) + cls; }

// Covering pool and its minimum covers, shared by the three decompose entry
// points.
std::vector<KunzVector> covering_pool(Kunz4 x, const SpecialGapSet& sg)
{
    std::vector<KunzVector> pool;
    for (auto& v : irreducible_undercoordinates4(x)) {
        if (sg.coverage_mask(v) != 0) pool.push_back(std::move(v));
    }
    return pool;
}

}  // namespace

Kunz4 Kunz4::from(const KunzVector& v)
{
    if (v.multiplicity() != 4) {
        throw Error(ErrorCode::MultiplicityMismatch,
                    "expected multiplicity 4, got " + std::to_string(v.multiplicity()));
    }
    return {v.at_class(1), v.at_class(2), v.at_class(3)};
}

KunzVector Kunz4::to_kunz() const { return KunzVector(4, {x1, x2, x3}); }

bool Kunz4::valid() const noexcept
{
    return x1 >= 1 && x2 >= 1 && x3 >= 1 && 2 * x1 >= x2 && x1 + x2 >= x3
           && x2 + x3 >= x1 - 1 && 2 * x3 >= x2 - 1;
}

SpecialGapSet sg4(Kunz4 x)
{
    require_valid(x);
    std::vector<SpecialGap> out;
    // class 1: 2h_1 falls in class 2
    if (x.x1 >= 2 && x.x1 + x.x2 > x.x3 && 2 * x.x1 >= x.x2 + 2) {
        out.push_back({gap_of(x, 1), 1, x.x1});
    }
    // class 2: 2h_2 is a multiple of 4
    if (x.x2 >= 2 && x.x1 + x.x2 > x.x3 && x.x2 + x.x3 > x.x1 - 1) {
        out.push_back({gap_of(x, 2), 2, x.x2});
    }
    // class 3: 2h_3 falls in class 2
    if (x.x3 >= 2 && x.x2 + x.x3 > x.x1 - 1 && 2 * x.x3 >= x.x2 + 1) {
        out.push_back({gap_of(x, 3), 3, x.x3});
    }
    return SpecialGapSet(std::move(out));
}

Irreducibility4 is_irreducible4(Kunz4 x)
{
    const bool four = sg4(x).size() <= 1;
    const Int genus = x.x1 + x.x2 + x.x3;
    const Int f = x.to_kunz().frobenius();
    return {four, four && genus == (f + 2) / 2};
}

std::vector<Int> Family4::offset(Int param) const
{
    std::vector<Int> y(3, 0);
    y[static_cast<std::size_t>(free_index - 1)] = param;
    y[static_cast<std::size_t>(paired_index - 1)] = pair_sum - param;
    return y;
}

KunzVector Family4::instantiate(Kunz4 x, Int param) const
{
    const auto y = offset(param);
    return KunzVector::trusted(4, {x.x1 - y[0], x.x2 - y[1], x.x3 - y[2]});
}

std::vector<KunzVector> Family4::members(Kunz4 x) const
{
    std::vector<KunzVector> out;
    for (Int p = lo; p <= hi; ++p) out.push_back(instantiate(x, p));
    std::sort(out.begin(), out.end());
    return out;
}

Family4 candidate_family4(Kunz4 x, int cls)
{
    if (cls < 1 || cls > 3) {
        throw Error(ErrorCode::NotASpecialGap, "residue class must be 1, 2 or 3");
    }
    const auto sg = sg4(x);
    const Int h = gap_of(x, cls);
    if (!sg.contains(h)) {
        throw Error(ErrorCode::NotASpecialGap,
                    std::to_string(h) + " is not a special gap larger than 4");
    }

    Family4 f{cls, h, 0, 0, 0, -1, 0};
    switch (cls) {
    case 1:
        f.free_index = 2;
        f.paired_index = 3;
        if (x.x1 == 2) {
            // {0,4,6,7,->}
            f.lo = f.hi = x.x2 - 1;
            f.pair_sum = x.x2 + x.x3 - 2;
        } else {
            // x'_2 + x'_3 = x_1 - 1 and 3x'_2 <= 2x_1 - 1
            const Int lo2 = std::max<Int>(1, x.x1 - 1 - x.x3);
            const Int hi2 = std::min({x.x2, x.x1 - 2, floor_div(2 * x.x1 - 1, 3)});
            f.lo = x.x2 - hi2;
            f.hi = x.x2 - lo2;
            f.pair_sum = x.x2 + x.x3 - x.x1 + 1;
        }
        break;
    case 2:
        f.free_index = 1;
        f.paired_index = 3;
        if (x.x2 == 2) {
            f.lo = f.hi = x.x1 - 1;
            f.pair_sum = x.x1 + x.x3 - 2;
        } else {
            // x'_1 + x'_3 = x_2 and x_2 <= 2x'_1 <= x_2 + 1
            const Int lo1 = std::max({Int{1}, ceil_div(x.x2, 2), x.x2 - x.x3});
            const Int hi1 = std::min({x.x1, x.x2 - 1, floor_div(x.x2 + 1, 2)});
            f.lo = x.x1 - hi1;
            f.hi = x.x1 - lo1;
            f.pair_sum = x.x1 - x.x2 + x.x3;
        }
        break;
    default:
        f.free_index = 1;
        f.paired_index = 2;
        if (x.x3 == 2) {
            f.lo = f.hi = x.x1 - 1;
            f.pair_sum = x.x1 + x.x2 - 2;
        } else {
            // x'_1 + x'_2 = x_3 and 3x'_1 >= x_3
            const Int lo1 = std::max({Int{1}, ceil_div(x.x3, 3), x.x3 - x.x2});
            const Int hi1 = std::min(x.x1, x.x3 - 1);
            f.lo = x.x1 - hi1;
            f.hi = x.x1 - lo1;
            f.pair_sum = x.x1 + x.x2 - x.x3;
        }
        break;
    }
    return f;
}

std::vector<KunzVector> irreducible_undercoordinates4(Kunz4 x)
{
    require_valid(x);
    std::vector<KunzVector> out;
    auto push = [&](Int a, Int b, Int c) { out.push_back(KunzVector::trusted(4, {a, b, c})); };

    push(1, 1, 1);
    if (x.x1 >= 2) push(2, 1, 1);

    // Frobenius in class 1: x'_1 = t, x'_2 + x'_3 = t - 1
    for (Int t = 3; t <= x.x1; ++t) {
        const Int lo = std::max<Int>(1, t - 1 - x.x3);
        const Int hi = std::min({x.x2, t - 2, floor_div(2 * t - 1, 3)});
        for (Int p = lo; p <= hi; ++p) push(t, p, t - 1 - p);
    }
    // Frobenius in class 2: x'_2 = t, x'_1 + x'_3 = t
    for (Int t = 2; t <= x.x2; ++t) {
        const Int lo = std::max({Int{1}, ceil_div(t, 2), t - x.x3});
        const Int hi = std::min({x.x1, t - 1, floor_div(t + 1, 2)});
        for (Int p = lo; p <= hi; ++p) push(p, t, t - p);
    }
    // Frobenius in class 3: x'_3 = t, x'_1 + x'_2 = t
    for (Int t = 2; t <= x.x3; ++t) {
        const Int lo = std::max({Int{1}, ceil_div(t, 3), t - x.x2});
        const Int hi = std::min(x.x1, t - 1);
        for (Int p = lo; p <= hi; ++p) push(p, t - p, t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void for_each_minimum_cover(Kunz4 x, const std::function<void(Decomposition)>& fn)
{
    const auto input = x.to_kunz();
    const auto sg = sg4(x);
    if (sg.size() <= 1) {
        fn({input, {input}, true});
        return;
    }
    const auto pool = covering_pool(x, sg);
    std::vector<std::uint32_t> masks;
    for (const auto& v : pool) masks.push_back(sg.coverage_mask(v));
    detail::MaskCover cover(sg.full_mask(), masks);
    if (cover.min_size() < 0) throw std::logic_error("no cover for " + input.to_string());
    cover.for_each_cover([&](const std::vector<std::size_t>& items) {
        Decomposition d{input, {}, true};
        for (auto i : items) d.factors.push_back(pool[i]);
        sort_factors(d.factors);
        if (intersect(d.factors) != input) {
            throw std::logic_error("factors do not intersect to " + input.to_string());
        }
        fn(std::move(d));
    });
}

}  // namespace

Decomposition decompose4_first(Kunz4 x)
{
    std::optional<Decomposition> best;
    for_each_minimum_cover(x, [&](Decomposition d) {
        if (!best || decomposition_less(d, *best)) best = std::move(d);
    });
    return std::move(*best);
}

std::vector<Decomposition> decompose4_all(Kunz4 x)
{
    std::vector<Decomposition> out;
    for_each_minimum_cover(x, [&](Decomposition d) { out.push_back(std::move(d)); });
    std::sort(out.begin(), out.end(), decomposition_less);
    return out;
}

Int count_decompositions4(Kunz4 x)
{
    const auto sg = sg4(x);
    if (sg.size() <= 1) return 1;
    const auto pool = covering_pool(x, sg);
    std::vector<std::uint32_t> masks;
    for (const auto& v : pool) masks.push_back(sg.coverage_mask(v));
    return detail::MaskCover(sg.full_mask(), masks).count();
}

}  // namespace kunzsg::mult4
