#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kunzsg/kunz_vector.hpp"

namespace kunzsg {

/// A special gap h = m(x_i - 1) + i larger than the multiplicity.
struct SpecialGap {
    Int gap;
    int residue;
    Int coord;

    friend bool operator==(const SpecialGap&, const SpecialGap&) = default;
};

/// SG_m(S): special gaps larger than m, sorted by value; at most one per
/// residue class.
class SpecialGapSet {
public:
    SpecialGapSet() = default;
    explicit SpecialGapSet(std::vector<SpecialGap> entries);

    const std::vector<SpecialGap>& entries() const noexcept { return entries_; }
    std::vector<Int> values() const;
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    bool contains(Int h) const noexcept;

    /// Position of h in entries(), or -1.
    int index_of(Int h) const noexcept;

    /// Bit k is set when entries()[k] is a gap of `over`, which must be an
    /// undercoordinate of the vector this set was computed from.
    std::uint32_t coverage_mask(const KunzVector& over) const;
    std::uint32_t full_mask() const noexcept { return (std::uint32_t{1} << size()) - 1; }
    std::vector<Int> covered(std::uint32_t mask) const;

private:
    std::vector<SpecialGap> entries_;
};

struct Classification {
    bool m_irreducible = false;
    bool irreducible = false;
    bool symmetric = false;
    bool pseudosymmetric = false;
    bool m_symmetric = false;
    bool m_pseudosymmetric = false;

    friend bool operator==(const Classification&, const Classification&) = default;
};

struct Candidate {
    std::vector<Int> offset;  // y, with kunz = x - y
    KunzVector kunz;
    std::vector<Int> coverage;  // members of SG_m(x) that stay gaps of kunz
};

/// All m-irreducible undercoordinates whose Frobenius number is one fixed
/// special gap.
struct CandidateFamily {
    Int target;
    int zero_class;
    std::vector<Candidate> candidates;
};

struct Decomposition {
    KunzVector input;
    std::vector<KunzVector> factors;
    bool minimal = false;
};

enum class Parity { Odd, Even };

struct IsoVerdict {
    bool decomposable = false;
    std::optional<Decomposition> witness;
    std::string reason;
};

// Every function below rejects multiplicity 1 with DegenerateMultiplicity.

/// SG_m by the closed formula on Kunz coordinates.
SpecialGapSet special_gaps_over_m(const KunzVector& x);

/// Every special gap (including those below m) by definition.
std::vector<Int> special_gaps_all(const KunzVector& x);

Classification classify(const KunzVector& x);

/// Genus test for m-irreducibility: g in {m-1, m, ceil((F+1)/2)}.
bool m_irreducible_by_genus(const KunzVector& x);

/// Solutions of the undercoordinate system with y_{h mod m} = 0, Frobenius h
/// and the matching genus; sorted lexicographically by kunz.
/// Throws NotASpecialGap.
CandidateFamily irreducible_candidates(const KunzVector& x, Int h);

/// Every m-irreducible undercoordinate x' <= x, lexicographic order.
std::vector<KunzVector> irreducible_undercoordinates(const KunzVector& x);

/// m-irreducible undercoordinates keeping at least one special gap of x
/// (the only ones that can appear in a minimal decomposition).
std::vector<KunzVector> covering_undercoordinates(const KunzVector& x);

/// Minimum-size decompositions into m-irreducible semigroups. Factors are
/// ordered by Frobenius number, then by offset x - x' (so larger Kunz vectors
/// come first); decompositions compare factor by factor in that order.
Decomposition first_minimal_decomposition(const KunzVector& x);
std::vector<Decomposition> all_minimal_decompositions(const KunzVector& x);
Int count_minimal_decompositions(const KunzVector& x);

/// Decomposition into m-irreducible factors whose Frobenius numbers all have
/// the requested parity.
IsoVerdict iso_decomposability(const KunzVector& x, Parity parity);

/// Valid Kunz vectors with 1 <= x_i <= bound in lexicographic order.
std::vector<KunzVector> enumerate_kunz(int multiplicity, Int bound);

/// Same result as enumerate_kunz, with the first coordinate split across
/// OpenMP threads.
std::vector<KunzVector> enumerate_kunz_parallel(int multiplicity, Int bound);

/// Factor ordering used by every decomposition routine.
void sort_factors(std::vector<KunzVector>& factors);
bool decomposition_less(const Decomposition& a, const Decomposition& b);

}  // namespace kunzsg
