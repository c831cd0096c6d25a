#pragma once

#include <span>
#include <utility>
#include <vector>

#include "kunzsg/kunz_vector.hpp"

namespace kunzsg {

/// A numerical semigroup normalized to its Kunz-coordinates vector, with the
/// usual descriptors computed once at construction.
class Semigroup {
public:
    explicit Semigroup(KunzVector kunz);

    const KunzVector& kunz() const noexcept { return kunz_; }
    int multiplicity() const noexcept { return kunz_.multiplicity(); }
    Int frobenius() const noexcept { return frobenius_; }
    Int genus() const noexcept { return genus_; }
    const std::vector<Int>& generators() const noexcept { return generators_; }

    bool contains(Int n) const;

    friend bool operator==(const Semigroup& a, const Semigroup& b)
    {
        return a.kunz_ == b.kunz_;
    }

private:
    KunzVector kunz_;
    Int frobenius_;
    Int genus_;
    std::vector<Int> generators_;
};

/// Semigroup generated by `gens`; m = min(gens).
/// Throws EmptyGenerators, InvalidGenerator (< 1), NonCoprimeGenerators.
Semigroup from_generators(std::span<const Int> gens);

/// (w_0 = 0, w_1, ..., w_{s-1}) with w_i the least element of S congruent to
/// i mod s. Throws NotAnElement unless s >= 1 lies in S.
std::vector<Int> apery_set(const Semigroup& s, Int element);

/// Semigroup generated by m and m*x_i + i. Validity is enforced by KunzVector.
Semigroup semigroup_of(const KunzVector& x);

bool contains(const KunzVector& x, Int n);

/// (Frobenius, genus) by Selmer's formulas.
std::pair<Int, Int> frobenius_genus(const KunzVector& x);

/// Kunz vector of the intersection: componentwise maximum.
KunzVector intersect(const KunzVector& a, const KunzVector& b);
KunzVector intersect(std::span<const KunzVector> parts);

std::vector<Int> minimal_generators(const KunzVector& x);

/// Sorted gap list; its length is the genus.
std::vector<Int> gaps(const KunzVector& x);

}  // namespace kunzsg
