#include "kunzsg/oracle.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

namespace kunzsg::oracle {
namespace {

std::vector<Int> apery_generators(const KunzVector& x)
{
    const Int m = x.multiplicity();
    std::vector<Int> gens{m};
    const auto c = x.coords();
    for (std::size_t i = 0; i < c.size(); ++i) {
        gens.push_back(m * c[i] + static_cast<Int>(i + 1));
    }
    return gens;
}

// Element table and its recovered Kunz vector; throws nothing for valid
// generator lists.
KunzVector kunz_from_table(const ElementTable& t)
{
    const Int m = t.multiplicity();
    std::vector<Int> coords;
    for (Int r = 1; r < m; ++r) {
        Int n = r;
        while (!t.contains(n)) n += m;
        coords.push_back((n - r) / m);
    }
    return KunzVector::trusted(static_cast<int>(m), std::move(coords));
}

std::vector<Int> special_from_table(const ElementTable& t)
{
    const Int f = t.frobenius();
    const Int m = t.multiplicity();
    std::vector<Int> out;
    for (Int h : t.gaps()) {
        if (!t.contains(2 * h)) continue;
        bool closed = true;
        // beyond f + m every sum lands above the Frobenius number
        for (Int s = 1; s <= f + m && closed; ++s) {
            if (t.contains(s) && !t.contains(h + s)) closed = false;
        }
        if (closed) out.push_back(h);
    }
    return out;
}

std::vector<Int> special_above_m(const KunzVector& x)
{
    auto all = brute_special_gaps(x);
    std::vector<Int> out;
    for (Int h : all) {
        if (h > x.multiplicity()) out.push_back(h);
    }
    return out;
}

}  // namespace

ElementTable ElementTable::generated_by(std::span<const Int> gens)
{
    if (gens.empty()) throw Error(ErrorCode::EmptyGenerators, "generator set is empty");
    Int g = 0;
    for (Int v : gens) {
        if (v < 1) throw Error(ErrorCode::InvalidGenerator, "generators must be positive");
        g = std::gcd(g, v);
    }
    if (g != 1) throw Error(ErrorCode::NonCoprimeGenerators, "generators are not coprime");

    const Int smallest = *std::min_element(gens.begin(), gens.end());
    Int bound = 2 * *std::max_element(gens.begin(), gens.end());
    for (;;) {
        ElementTable t;
        t.bound_ = bound;
        t.member_.assign(static_cast<std::size_t>(bound + 1), false);
        t.member_[0] = true;
        for (Int n = 1; n <= bound; ++n) {
            for (Int v : gens) {
                if (v <= n && t.member_[static_cast<std::size_t>(n - v)]) {
                    t.member_[static_cast<std::size_t>(n)] = true;
                    break;
                }
            }
        }
        bool tail_full = true;
        for (Int n = bound - smallest + 1; n <= bound; ++n) {
            if (!t.member_[static_cast<std::size_t>(n)]) tail_full = false;
        }
        if (tail_full) {
            const Int want = t.frobenius() + 2 * t.multiplicity() + 2;
            if (bound >= want) return t;
            bound = want;
            continue;
        }
        bound = checked::mul(bound, 2);
    }
}

ElementTable ElementTable::of(const KunzVector& x)
{
    const auto gens = apery_generators(x);
    return generated_by(gens);
}

bool ElementTable::contains(Int n) const noexcept
{
    if (n < 0) return false;
    if (n > bound_) return true;
    return member_[static_cast<std::size_t>(n)];
}

std::vector<Int> ElementTable::gaps() const
{
    std::vector<Int> out;
    for (Int n = 0; n <= bound_; ++n) {
        if (!member_[static_cast<std::size_t>(n)]) out.push_back(n);
    }
    return out;
}

Int ElementTable::frobenius() const
{
    for (Int n = bound_; n >= 0; --n) {
        if (!member_[static_cast<std::size_t>(n)]) return n;
    }
    return -1;
}

Int ElementTable::multiplicity() const
{
    for (Int n = 1; n <= bound_; ++n) {
        if (member_[static_cast<std::size_t>(n)]) return n;
    }
    return 1;
}

std::vector<Int> brute_gaps(std::span<const Int> gens)
{
    return ElementTable::generated_by(gens).gaps();
}

std::vector<Int> brute_special_gaps(const KunzVector& x)
{
    return special_from_table(ElementTable::of(x));
}

KunzVector brute_kunz(std::span<const Int> gens)
{
    return kunz_from_table(ElementTable::generated_by(gens));
}

std::vector<KunzVector> enumerate_oversemigroups(const KunzVector& x)
{
    const int m = x.multiplicity();
    const auto top = x.coords();
    std::vector<KunzVector> out;
    if (m < 2) return {x};
    std::vector<Int> cur(top.size(), 1);
    for (;;) {
        const auto candidate = KunzVector::trusted(m, cur);
        // x' is a Kunz vector iff the semigroup it generates has exactly the
        // Apery elements it claims
        if (kunz_from_table(ElementTable::of(candidate)) == candidate) out.push_back(candidate);

        std::size_t k = cur.size();
        while (k > 0) {
            --k;
            if (cur[k] < top[k]) {
                ++cur[k];
                std::fill(cur.begin() + static_cast<std::ptrdiff_t>(k) + 1, cur.end(), 1);
                break;
            }
            if (k == 0) return out;
        }
        if (cur.empty()) return out;
    }
}

std::vector<KunzVector> oversemigroups_by_adjunction(const KunzVector& x)
{
    const int m = x.multiplicity();
    std::set<KunzVector> seen{x};
    std::deque<KunzVector> queue{x};
    while (!queue.empty()) {
        const auto cur = queue.front();
        queue.pop_front();
        const auto table = ElementTable::of(cur);
        for (Int h : special_from_table(table)) {
            if (h < m) continue;  // would lower the multiplicity
            auto gens = apery_generators(cur);
            gens.push_back(h);
            auto next = brute_kunz(gens);
            if (seen.insert(next).second) queue.push_back(next);
        }
    }
    return {seen.begin(), seen.end()};
}

bool brute_m_irreducible(const KunzVector& x) { return special_above_m(x).size() <= 1; }

bool brute_irreducible(const KunzVector& x) { return brute_special_gaps(x).size() <= 1; }

BruteDecompositions brute_minimal_decompositions(const KunzVector& x)
{
    const auto target = special_above_m(x);
    if (target.size() <= 1) return {1, {{x}}};

    struct Item {
        KunzVector kunz;
        std::vector<Int> covered;
    };
    std::vector<Item> items;
    for (const auto& over : enumerate_oversemigroups(x)) {
        if (!brute_m_irreducible(over)) continue;
        const auto table = ElementTable::of(over);
        std::vector<Int> covered;
        for (Int h : target) {
            if (!table.contains(h)) covered.push_back(h);
        }
        if (!covered.empty()) items.push_back({over, std::move(covered)});
    }

    BruteDecompositions result;
    const std::size_t n = items.size();
    for (std::size_t k = 1; k <= target.size() && result.decompositions.empty(); ++k) {
        // all k-subsets by index vector
        std::vector<std::size_t> idx(k);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        if (k > n) break;
        for (;;) {
            std::set<Int> uni;
            for (auto i : idx) uni.insert(items[i].covered.begin(), items[i].covered.end());
            if (uni.size() == target.size()) {
                std::vector<KunzVector> d;
                for (auto i : idx) d.push_back(items[i].kunz);
                std::sort(d.begin(), d.end());
                result.decompositions.push_back(std::move(d));
            }
            std::size_t pos = k;
            while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!result.decompositions.empty()) result.min_size = static_cast<int>(k);
    }
    std::sort(result.decompositions.begin(), result.decompositions.end());
    return result;
}

bool brute_iso_decomposable(const KunzVector& x, bool odd)
{
    const auto target = special_above_m(x);
    if (target.size() <= 1) {
        return (ElementTable::of(x).frobenius() % 2 != 0) == odd;
    }
    std::set<Int> uni;
    for (const auto& over : enumerate_oversemigroups(x)) {
        if (!brute_m_irreducible(over)) continue;
        const auto table = ElementTable::of(over);
        if ((table.frobenius() % 2 != 0) != odd) continue;
        for (Int h : target) {
            if (!table.contains(h)) uni.insert(h);
        }
    }
    return uni.size() == target.size();
}

}  // namespace kunzsg::oracle
