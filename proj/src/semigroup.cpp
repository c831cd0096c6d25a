#include "kunzsg/semigroup.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace kunzsg {
namespace {

constexpr Int kUnreached = std::numeric_limits<Int>::max();

// Least element of <gens> in each residue class mod `modulus`, by relaxation
// over residue classes until nothing improves.
std::vector<Int> least_per_class(std::span<const Int> gens, Int modulus)
{
    std::vector<Int> w(static_cast<std::size_t>(modulus), kUnreached);
    w[0] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (Int r = 0; r < modulus; ++r) {
            const Int base = w[static_cast<std::size_t>(r)];
            if (base == kUnreached) continue;
            for (Int g : gens) {
                const Int next = (r + g) % modulus;
                const Int value = checked::add(base, g);
                if (value < w[static_cast<std::size_t>(next)]) {
                    w[static_cast<std::size_t>(next)] = value;
                    changed = true;
                }
            }
        }
    }
    return w;
}

}  // namespace

Semigroup::Semigroup(KunzVector kunz)
    : kunz_(std::move(kunz)),
      frobenius_(kunz_.frobenius()),
      genus_(kunz_.genus()),
      generators_(minimal_generators(kunz_))
{
}

bool Semigroup::contains(Int n) const { return kunzsg::contains(kunz_, n); }

Semigroup from_generators(std::span<const Int> gens)
{
    if (gens.empty()) throw Error(ErrorCode::EmptyGenerators, "generator set is empty");
    Int g = 0;
    for (Int v : gens) {
        if (v < 1) {
            throw Error(ErrorCode::InvalidGenerator,
                        "generators must be positive, got " + std::to_string(v));
        }
        g = std::gcd(g, v);
    }
    if (g != 1) {
        throw Error(ErrorCode::NonCoprimeGenerators,
                    "generators have gcd " + std::to_string(g) + ", expected 1");
    }

    std::vector<Int> sorted(gens.begin(), gens.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());

    const Int m = sorted.front();
    if (m > std::numeric_limits<int>::max()) {
        throw Error(ErrorCode::Overflow, "multiplicity too large");
    }
    const auto w = least_per_class(sorted, m);
    std::vector<Int> coords;
    coords.reserve(static_cast<std::size_t>(m - 1));
    for (Int r = 1; r < m; ++r) coords.push_back((w[static_cast<std::size_t>(r)] - r) / m);
    return Semigroup(KunzVector(static_cast<int>(m), std::move(coords)));
}

std::vector<Int> apery_set(const Semigroup& s, Int element)
{
    if (element < 1 || !s.contains(element)) {
        throw Error(ErrorCode::NotAnElement,
                    std::to_string(element) + " is not a nonzero element of the semigroup");
    }
    if (s.multiplicity() == 1) {
        std::vector<Int> w(static_cast<std::size_t>(element));
        std::iota(w.begin(), w.end(), Int{0});
        return w;
    }
    return least_per_class(s.generators(), element);
}

Semigroup semigroup_of(const KunzVector& x) { return Semigroup(x); }

bool contains(const KunzVector& x, Int n)
{
    if (n < 0) return false;
    const Int m = x.multiplicity();
    const Int r = n % m;
    return r == 0 || n >= x.apery(static_cast<int>(r));
}

std::pair<Int, Int> frobenius_genus(const KunzVector& x)
{
    return {x.frobenius(), x.genus()};
}

KunzVector intersect(const KunzVector& a, const KunzVector& b)
{
    if (a.multiplicity() != b.multiplicity()) {
        throw Error(ErrorCode::MultiplicityMismatch,
                    "cannot intersect multiplicities " + std::to_string(a.multiplicity())
                        + " and " + std::to_string(b.multiplicity()));
    }
    std::vector<Int> coords(a.coord_vector());
    const auto other = b.coords();
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] = std::max(coords[i], other[i]);
    return KunzVector::trusted(a.multiplicity(), std::move(coords));
}

KunzVector intersect(std::span<const KunzVector> parts)
{
    if (parts.empty()) {
        throw Error(ErrorCode::MultiplicityMismatch, "intersection of zero semigroups");
    }
    KunzVector acc = parts.front();
    for (const auto& p : parts.subspan(1)) acc = intersect(acc, p);
    return acc;
}

std::vector<Int> minimal_generators(const KunzVector& x)
{
    const int m = x.multiplicity();
    if (m == 1) return {1};
    std::vector<Int> gens{m};
    for (int i = 1; i < m; ++i) {
        const Int wi = x.apery(i);
        bool decomposable = false;
        for (int j = 1; j < m && !decomposable; ++j) {
            if (j == i) continue;
            const int k = ((i - j) % m + m) % m;
            if (k != 0 && x.apery(j) + x.apery(k) == wi) decomposable = true;
        }
        if (!decomposable) gens.push_back(wi);
    }
    std::sort(gens.begin(), gens.end());
    return gens;
}

std::vector<Int> gaps(const KunzVector& x)
{
    const int m = x.multiplicity();
    std::vector<Int> out;
    out.reserve(static_cast<std::size_t>(x.genus()));
    for (int r = 1; r < m; ++r) {
        const Int w = x.apery(r);
        for (Int n = r; n < w; n += m) out.push_back(n);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace kunzsg
