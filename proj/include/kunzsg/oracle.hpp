#pragma once

// Brute-force reference implementations. Nothing here calls the engine or the
// closed-form modules; semigroups are materialized as membership bitmaps and
// every notion is checked from its definition.

#include <span>
#include <vector>

#include "kunzsg/kunz_vector.hpp"

namespace kunzsg::oracle {

/// Membership bitmap for 0..bound of the semigroup generated by `gens`.
/// Every integer above bound is an element.
class ElementTable {
public:
    /// Doubles the bound until the last min(gens) entries are all present.
    /// Throws EmptyGenerators / InvalidGenerator / NonCoprimeGenerators.
    static ElementTable generated_by(std::span<const Int> gens);

    /// Table of the semigroup with Apery elements m*x_i + i (plus m).
    static ElementTable of(const KunzVector& x);

    Int bound() const noexcept { return bound_; }
    bool contains(Int n) const noexcept;
    std::vector<Int> gaps() const;
    Int frobenius() const;
    Int multiplicity() const;

private:
    Int bound_ = 0;
    std::vector<bool> member_;
};

std::vector<Int> brute_gaps(std::span<const Int> gens);

/// Gaps h with 2h in S and h + n in S for every minimal generator n.
std::vector<Int> brute_special_gaps(const KunzVector& x);

/// Kunz vector recovered from a bitmap: least element of each class mod m.
KunzVector brute_kunz(std::span<const Int> gens);

/// All Kunz vectors x' with 1 <= x' <= x, by box scan.
std::vector<KunzVector> enumerate_oversemigroups(const KunzVector& x);

/// Oversemigroups reached from x by adjoining special gaps one at a time.
std::vector<KunzVector> oversemigroups_by_adjunction(const KunzVector& x);

bool brute_m_irreducible(const KunzVector& x);

/// At most one special gap of any size.
bool brute_irreducible(const KunzVector& x);

struct BruteDecompositions {
    int min_size = 0;
    /// Each decomposition sorted lexicographically; list sorted too.
    std::vector<std::vector<KunzVector>> decompositions;
};

/// Exhaustive minimum covers of the special gaps above m by gap sets of
/// m-irreducible oversemigroups.
BruteDecompositions brute_minimal_decompositions(const KunzVector& x);

/// Whether the special gaps above m are covered by m-irreducible
/// oversemigroups whose Frobenius numbers all have the given parity.
bool brute_iso_decomposable(const KunzVector& x, bool odd);

}  // namespace kunzsg::oracle
