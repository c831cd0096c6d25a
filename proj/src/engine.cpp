#include "kunzsg/engine.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

#include "cover.hpp"
#include "kunzsg/parallel.hpp"
#include "kunzsg/semigroup.hpp"

namespace kunzsg {
namespace {

void require_proper(const KunzVector& x)
{
    if (x.multiplicity() < 2) {
        throw Error(ErrorCode::DegenerateMultiplicity,
                    "operation requires multiplicity at least 2");
    }
}

Int ceil_half(Int v) { return v >= 0 ? (v + 1) / 2 : -((-v) / 2); }

// Depth-first walk over x' with 1 <= x'_i <= x_i, assigning classes in
// increasing order and rejecting a prefix as soon as one of its Kunz
// inequalities fails.
class UnderWalker {
public:
    UnderWalker(const KunzVector& x, std::vector<bool> pinned, std::optional<Int> genus)
        : x_(x), m_(x.multiplicity()), pinned_(std::move(pinned)), genus_(genus),
          current_(static_cast<std::size_t>(m_ - 1), 0)
    {
        // suffix sums of the box bounds, for genus pruning
        suffix_max_.assign(static_cast<std::size_t>(m_), 0);
        suffix_min_.assign(static_cast<std::size_t>(m_), 0);
        for (int r = m_ - 1; r >= 1; --r) {
            const auto k = static_cast<std::size_t>(r - 1);
            suffix_max_[k] = suffix_max_[k + 1] + x.at_class(r);
            suffix_min_[k] = suffix_min_[k + 1] + (pinned_[k] ? x.at_class(r) : 1);
        }
    }

    void run(const std::function<void(const std::vector<Int>&)>& emit)
    {
        emit_ = &emit;
        step(1, 0);
    }

private:
    Int at(int r) const { return r == 0 ? 0 : current_[static_cast<std::size_t>(r - 1)]; }

    bool prefix_ok(int k) const
    {
        // inequalities whose largest index is k
        for (int i = 1; i <= k; ++i) {
            for (int j = i; j <= k; ++j) {
                const int s = i + j;
                if (s < m_) {
                    if (std::max(j, s) == k && at(i) + at(j) < at(s)) return false;
                } else if (s > m_) {
                    if (std::max(j, s - m_) == k && at(i) + at(j) < at(s - m_) - 1) return false;
                }
            }
        }
        return true;
    }

    void step(int r, Int partial)
    {
        if (r == m_) {
            if (!genus_ || partial == *genus_) (*emit_)(current_);
            return;
        }
        const auto k = static_cast<std::size_t>(r - 1);
        const Int hi = x_.at_class(r);
        const Int lo = pinned_[k] ? hi : 1;
        for (Int v = lo; v <= hi; ++v) {
            if (genus_) {
                const Int rest_min = suffix_min_[k + 1];
                const Int rest_max = suffix_max_[k + 1];
                if (partial + v + rest_min > *genus_) break;
                if (partial + v + rest_max < *genus_) continue;
            }
            current_[k] = v;
            if (prefix_ok(r)) step(r + 1, partial + v);
        }
        current_[k] = 0;
    }

    const KunzVector& x_;
    int m_;
    std::vector<bool> pinned_;
    std::optional<Int> genus_;
    std::vector<Int> current_;
    std::vector<Int> suffix_max_;
    std::vector<Int> suffix_min_;
    const std::function<void(const std::vector<Int>&)>* emit_ = nullptr;
};

std::vector<Int> offset_of(const KunzVector& x, const KunzVector& under)
{
    std::vector<Int> y(x.coord_vector());
    const auto c = under.coords();
    for (std::size_t i = 0; i < y.size(); ++i) y[i] -= c[i];
    return y;
}

// Frobenius ascending, then by offset x - x' ascending, which is the Kunz
// vector descending since every factor sits below the same x.
struct FactorKey {
    Int frobenius;
    const KunzVector* kunz;

    friend bool operator<(const FactorKey& a, const FactorKey& b)
    {
        if (a.frobenius != b.frobenius) return a.frobenius < b.frobenius;
        return *b.kunz < *a.kunz;
    }
};

// Minimum covers of SG_m(x) drawn from `pool`, as sorted decompositions.
std::vector<Decomposition> covers_from(const KunzVector& x, const SpecialGapSet& sg,
                                       const std::vector<KunzVector>& pool, bool all)
{
    std::vector<std::uint32_t> masks;
    masks.reserve(pool.size());
    for (const auto& v : pool) masks.push_back(sg.coverage_mask(v));
    detail::MaskCover cover(sg.full_mask(), masks);

    std::vector<Decomposition> out;
    if (cover.min_size() < 0) return out;

    std::optional<Decomposition> best;
    cover.for_each_cover([&](const std::vector<std::size_t>& items) {
        Decomposition d{x, {}, true};
        for (auto i : items) d.factors.push_back(pool[i]);
        sort_factors(d.factors);
        if (intersect(d.factors) != x) {
            throw std::logic_error("cover of special gaps does not intersect to the input "
                                   + x.to_string());
        }
        if (all) {
            out.push_back(std::move(d));
        } else if (!best || decomposition_less(d, *best)) {
            best = std::move(d);
        }
    });
    if (!all) {
        if (best) out.push_back(std::move(*best));
        return out;
    }
    std::sort(out.begin(), out.end(), decomposition_less);
    return out;
}

}  // namespace

SpecialGapSet::SpecialGapSet(std::vector<SpecialGap> entries) : entries_(std::move(entries))
{
    std::sort(entries_.begin(), entries_.end(),
              [](const SpecialGap& a, const SpecialGap& b) { return a.gap < b.gap; });
}

std::vector<Int> SpecialGapSet::values() const
{
    std::vector<Int> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.gap);
    return out;
}

bool SpecialGapSet::contains(Int h) const noexcept { return index_of(h) >= 0; }

int SpecialGapSet::index_of(Int h) const noexcept
{
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (entries_[k].gap == h) return static_cast<int>(k);
    }
    return -1;
}

std::uint32_t SpecialGapSet::coverage_mask(const KunzVector& over) const
{
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (!kunzsg::contains(over, entries_[k].gap)) mask |= std::uint32_t{1} << k;
    }
    return mask;
}

std::vector<Int> SpecialGapSet::covered(std::uint32_t mask) const
{
    std::vector<Int> out;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (mask & (std::uint32_t{1} << k)) out.push_back(entries_[k].gap);
    }
    return out;
}

SpecialGapSet special_gaps_over_m(const KunzVector& x)
{
    require_proper(x);
    const int m = x.multiplicity();
    std::vector<SpecialGap> found;
    for (int i = 1; i < m; ++i) {
        const Int xi = x.at_class(i);
        if (xi < 2) continue;
        bool special = true;
        for (int j = 1; j < m && special; ++j) {
            const int s = i + j;
            if (s < m) {
                special = xi + x.at_class(j) > x.at_class(s);
            } else if (s > m) {
                special = xi + x.at_class(j) > x.at_class(s - m) - 1;
            }
        }
        if (!special) continue;
        const Int h = checked::add(checked::mul(m, xi - 1), i);
        const Int doubled = checked::mul(2, h);
        const Int r = doubled % m;
        // class 0: 2h is a multiple of m, always in S
        if (r != 0 && doubled < x.apery(static_cast<int>(r))) continue;
        found.push_back({h, i, xi});
    }
    return SpecialGapSet(std::move(found));
}

std::vector<Int> special_gaps_all(const KunzVector& x)
{
    require_proper(x);
    const auto gens = minimal_generators(x);
    std::vector<Int> out;
    for (Int h : gaps(x)) {
        if (!contains(x, checked::mul(2, h))) continue;
        const bool closed = std::all_of(gens.begin(), gens.end(),
                                        [&](Int g) { return contains(x, h + g); });
        if (closed) out.push_back(h);
    }
    return out;
}

bool m_irreducible_by_genus(const KunzVector& x)
{
    require_proper(x);
    const Int m = x.multiplicity();
    const Int g = x.genus();
    return g == m - 1 || g == m || g == ceil_half(x.frobenius() + 1);
}

Classification classify(const KunzVector& x)
{
    require_proper(x);
    Classification c;
    const Int f = x.frobenius();
    const bool odd = (f % 2) != 0;
    c.m_irreducible = special_gaps_over_m(x).size() <= 1;
    c.irreducible = x.genus() == ceil_half(f + 1);
    c.symmetric = c.irreducible && odd;
    c.pseudosymmetric = c.irreducible && !odd;
    c.m_symmetric = c.m_irreducible && odd;
    c.m_pseudosymmetric = c.m_irreducible && !odd;
    return c;
}

CandidateFamily irreducible_candidates(const KunzVector& x, Int h)
{
    require_proper(x);
    const auto sg = special_gaps_over_m(x);
    if (!sg.contains(h)) {
        throw Error(ErrorCode::NotASpecialGap,
                    std::to_string(h) + " is not a special gap larger than the multiplicity of "
                        + x.to_string());
    }
    const int m = x.multiplicity();
    if (h == 2 * m) throw std::logic_error("2m can never be a special gap");
    const int zero_class = static_cast<int>(h % m);
    const Int genus = h > 2 * m ? ceil_half(h + 1) : Int{m};

    std::vector<bool> pinned(static_cast<std::size_t>(m - 1), false);
    pinned[static_cast<std::size_t>(zero_class - 1)] = true;

    CandidateFamily family{h, zero_class, {}};
    UnderWalker walker(x, pinned, genus);
    walker.run([&](const std::vector<Int>& coords) {
        auto under = KunzVector::trusted(m, coords);
        if (under.frobenius() != h) return;
        if (!validate_kunz(m, coords).ok() || !classify(under).m_irreducible) {
            throw std::logic_error("candidate " + under.to_string()
                                   + " failed re-validation for special gap "
                                   + std::to_string(h));
        }
        auto cov = sg.covered(sg.coverage_mask(under));
        family.candidates.push_back({offset_of(x, under), std::move(under), std::move(cov)});
    });
    return family;
}

std::vector<KunzVector> irreducible_undercoordinates(const KunzVector& x)
{
    require_proper(x);
    const int m = x.multiplicity();
    std::vector<KunzVector> out;
    UnderWalker walker(x, std::vector<bool>(static_cast<std::size_t>(m - 1), false), std::nullopt);
    walker.run([&](const std::vector<Int>& coords) {
        auto under = KunzVector::trusted(m, coords);
        if (m_irreducible_by_genus(under)) out.push_back(std::move(under));
    });
    return out;
}

std::vector<KunzVector> covering_undercoordinates(const KunzVector& x)
{
    require_proper(x);
    const int m = x.multiplicity();
    const auto sg = special_gaps_over_m(x);
    std::set<KunzVector> found;
    for (const auto& entry : sg.entries()) {
        std::vector<bool> pinned(static_cast<std::size_t>(m - 1), false);
        pinned[static_cast<std::size_t>(entry.residue - 1)] = true;
        UnderWalker walker(x, pinned, std::nullopt);
        walker.run([&](const std::vector<Int>& coords) {
            auto under = KunzVector::trusted(m, coords);
            if (m_irreducible_by_genus(under)) found.insert(std::move(under));
        });
    }
    return {found.begin(), found.end()};
}

Decomposition first_minimal_decomposition(const KunzVector& x)
{
    require_proper(x);
    const auto sg = special_gaps_over_m(x);
    if (sg.size() <= 1) return {x, {x}, true};
    auto covers = covers_from(x, sg, covering_undercoordinates(x), false);
    if (covers.empty()) throw std::logic_error("no decomposition found for " + x.to_string());
    return std::move(covers.front());
}

std::vector<Decomposition> all_minimal_decompositions(const KunzVector& x)
{
    require_proper(x);
    const auto sg = special_gaps_over_m(x);
    if (sg.size() <= 1) return {{x, {x}, true}};
    return covers_from(x, sg, covering_undercoordinates(x), true);
}

Int count_minimal_decompositions(const KunzVector& x)
{
    require_proper(x);
    const auto sg = special_gaps_over_m(x);
    if (sg.size() <= 1) return 1;
    const auto pool = covering_undercoordinates(x);
    std::vector<std::uint32_t> masks;
    masks.reserve(pool.size());
    for (const auto& v : pool) masks.push_back(sg.coverage_mask(v));
    return detail::MaskCover(sg.full_mask(), masks).count();
}

IsoVerdict iso_decomposability(const KunzVector& x, Parity parity)
{
    require_proper(x);
    const bool want_odd = parity == Parity::Odd;
    const char* word = want_odd ? "odd" : "even";
    auto has_parity = [&](const KunzVector& v) { return (v.frobenius() % 2 != 0) == want_odd; };

    const auto sg = special_gaps_over_m(x);
    if (sg.size() <= 1) {
        if (has_parity(x)) return {true, Decomposition{x, {x}, true}, {}};
        return {false, std::nullopt,
                std::string("m-irreducible with Frobenius number that is not ") + word};
    }

    std::vector<KunzVector> pool;
    for (auto& v : covering_undercoordinates(x)) {
        if (has_parity(v)) pool.push_back(std::move(v));
    }
    std::uint32_t reach = 0;
    for (const auto& v : pool) reach |= sg.coverage_mask(v);
    if (reach != sg.full_mask()) {
        const auto missing = sg.covered(sg.full_mask() & ~reach);
        return {false, std::nullopt,
                "special gap " + std::to_string(missing.front())
                    + " lies in every m-irreducible oversemigroup with " + word
                    + " Frobenius number"};
    }
    auto covers = covers_from(x, sg, pool, false);
    auto witness = std::move(covers.front());
    // minimal only relative to the restricted pool
    witness.minimal = witness.factors.size() == first_minimal_decomposition(x).factors.size();
    return {true, std::move(witness), {}};
}

std::vector<KunzVector> enumerate_kunz(int multiplicity, Int bound)
{
    if (multiplicity < 2) {
        throw Error(ErrorCode::DegenerateMultiplicity, "enumeration requires multiplicity >= 2");
    }
    if (bound < 1) throw Error(ErrorCode::BoundsExceeded, "bound must be at least 1");
    auto top = KunzVector::trusted(
        multiplicity, std::vector<Int>(static_cast<std::size_t>(multiplicity - 1), bound));
    std::vector<KunzVector> out;
    UnderWalker walker(top, std::vector<bool>(static_cast<std::size_t>(multiplicity - 1), false),
                       std::nullopt);
    walker.run([&](const std::vector<Int>& coords) {
        out.push_back(KunzVector::trusted(multiplicity, coords));
    });
    return out;
}

std::vector<KunzVector> enumerate_kunz_parallel(int multiplicity, Int bound)
{
    if (multiplicity < 2) {
        throw Error(ErrorCode::DegenerateMultiplicity, "enumeration requires multiplicity >= 2");
    }
    if (bound < 1) throw Error(ErrorCode::BoundsExceeded, "bound must be at least 1");
    if (multiplicity == 2) return enumerate_kunz(multiplicity, bound);

    // one slab per value of x_1; slabs are concatenated in order
    std::vector<std::vector<KunzVector>> slabs(static_cast<std::size_t>(bound));
    parallel_for(Int{0}, bound, [&](Int k) {
        std::vector<Int> upper(static_cast<std::size_t>(multiplicity - 1), bound);
        upper[0] = k + 1;
        auto top = KunzVector::trusted(multiplicity, upper);
        std::vector<bool> pinned(upper.size(), false);
        pinned[0] = true;
        UnderWalker walker(top, pinned, std::nullopt);
        auto& slab = slabs[static_cast<std::size_t>(k)];
        walker.run([&](const std::vector<Int>& coords) {
            slab.push_back(KunzVector::trusted(multiplicity, coords));
        });
    });
    std::vector<KunzVector> out;
    for (auto& slab : slabs) {
        std::move(slab.begin(), slab.end(), std::back_inserter(out));
    }
    return out;
}

void sort_factors(std::vector<KunzVector>& factors)
{
    std::sort(factors.begin(), factors.end(), [](const KunzVector& a, const KunzVector& b) {
        return FactorKey{a.frobenius(), &a} < FactorKey{b.frobenius(), &b};
    });
}

bool decomposition_less(const Decomposition& a, const Decomposition& b)
{
    return std::lexicographical_compare(
        a.factors.begin(), a.factors.end(), b.factors.begin(), b.factors.end(),
        [](const KunzVector& p, const KunzVector& q) {
            return FactorKey{p.frobenius(), &p} < FactorKey{q.frobenius(), &q};
        });
}

}  // namespace kunzsg
