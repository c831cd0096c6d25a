#pragma once

#include <vector>

#include "kunzsg/engine.hpp"

namespace kunzsg::mult3 {

/// Kunz coordinates (x_1, x_2) of a multiplicity-3 semigroup.
struct Kunz3 {
    Int x1;
    Int x2;

    /// Throws InvalidKunz unless 2x_1 >= x_2, 2x_2 >= x_1 - 1 and both >= 1.
    static Kunz3 from(const KunzVector& v);
    KunzVector to_kunz() const;
    bool valid() const noexcept;

    friend auto operator<=>(const Kunz3&, const Kunz3&) = default;
};

SpecialGapSet sg3(Kunz3 x);

/// Irreducible and 3-irreducible coincide at multiplicity 3.
bool is_irreducible3(Kunz3 x);

/// The ordinary semigroup, the two genus-3 semigroups below x, and the
/// irreducible undercoordinates keeping one of the two special gaps.
/// Throws InputIsIrreducible.
std::vector<Kunz3> irreducible_undercoordinates3(Kunz3 x);

/// The unique minimal decomposition; factor order is class-1 gap first.
/// Irreducible input yields itself.
Decomposition decompose3(Kunz3 x);

struct Decomposability3 {
    bool sym_decomposable;
    bool psym_decomposable;

    friend bool operator==(const Decomposability3&, const Decomposability3&) = default;
};

Decomposability3 classify3_decomposability(Kunz3 x);

}  // namespace kunzsg::mult3
