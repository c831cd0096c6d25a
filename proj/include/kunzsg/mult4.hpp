#pragma once

#include <vector>

#include "kunzsg/engine.hpp"

namespace kunzsg::mult4 {

/// Kunz coordinates (x_1, x_2, x_3) of a multiplicity-4 semigroup.
struct Kunz4 {
    Int x1;
    Int x2;
    Int x3;

    static Kunz4 from(const KunzVector& v);
    KunzVector to_kunz() const;
    bool valid() const noexcept;
    Int at(int cls) const noexcept { return cls == 1 ? x1 : cls == 2 ? x2 : x3; }

    friend auto operator<=>(const Kunz4&, const Kunz4&) = default;
};

SpecialGapSet sg4(Kunz4 x);

struct Irreducibility4 {
    bool four_irreducible;
    bool irreducible;

    friend bool operator==(const Irreducibility4&, const Irreducibility4&) = default;
};

Irreducibility4 is_irreducible4(Kunz4 x);

/// One-parameter family of 4-irreducible undercoordinates x - y whose
/// Frobenius number is the special gap of class `target_class`.
///
/// y_target = 0, y_free ranges over [lo, hi] and y_paired = pair_sum - y_free.
struct Family4 {
    int target_class;
    Int target_gap;
    int free_index;
    int paired_index;
    Int lo;
    Int hi;
    Int pair_sum;

    Int size() const noexcept { return hi >= lo ? hi - lo + 1 : 0; }
    std::vector<Int> offset(Int param) const;
    KunzVector instantiate(Kunz4 x, Int param) const;
    std::vector<KunzVector> members(Kunz4 x) const;
};

/// Throws NotASpecialGap unless h_cls = 4(x_cls - 1) + cls is in SG_4(x).
Family4 candidate_family4(Kunz4 x, int cls);

/// Every 4-irreducible undercoordinate of x, lexicographic order. Built from
/// closed-form intervals indexed by the Frobenius class and its coordinate.
std::vector<KunzVector> irreducible_undercoordinates4(Kunz4 x);

Decomposition decompose4_first(Kunz4 x);
std::vector<Decomposition> decompose4_all(Kunz4 x);
Int count_decompositions4(Kunz4 x);

}  // namespace kunzsg::mult4
