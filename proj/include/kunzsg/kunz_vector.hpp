#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "kunzsg/error.hpp"

namespace kunzsg {

/// One failed inequality of the Kunz system.
///
/// `Positivity`: x_i >= 1.  `Additive`: x_i + x_j >= x_{i+j} for i+j < m.
/// `Wrapped`: x_i + x_j >= x_{i+j-m} - 1 for i+j > m.  Indices are residue
/// classes (1-based), with i <= j.
struct Violation {
    enum class Kind { Positivity, Additive, Wrapped };

    Kind kind;
    int i;
    int j;
    int target;  // i+j or i+j-m; equals i for Positivity

    std::string describe() const;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct KunzVerdict {
    std::vector<Violation> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Checks the Kunz inequalities for an (m-1)-vector. Only a length mismatch
/// throws (InvalidKunz); inequality failures are returned in the verdict.
KunzVerdict validate_kunz(int multiplicity, std::span<const Int> coords);

/// Kunz-coordinates vector of a numerical semigroup of multiplicity m.
///
/// coords()[i-1] = (w_i - i) / m where w_i is the Apery element of class i.
/// Always satisfies the Kunz system. Multiplicity 1 (the semigroup of all
/// naturals) is representable with empty coordinates.
class KunzVector {
public:
    /// Validates and throws ErrorCode::InvalidKunz naming the first violated
    /// inequality.
    KunzVector(int multiplicity, std::vector<Int> coords);

    /// Skips validation; callers guarantee the Kunz system holds.
    static KunzVector trusted(int multiplicity, std::vector<Int> coords);

    /// {0, m, ->}: all coordinates equal to one.
    static KunzVector ordinary(int multiplicity);

    int multiplicity() const noexcept { return m_; }
    std::span<const Int> coords() const noexcept { return coords_; }
    const std::vector<Int>& coord_vector() const noexcept { return coords_; }

    /// Coordinate of residue class r in [0, m); class 0 is always 0.
    Int at_class(Int r) const noexcept
    {
        return r == 0 ? 0 : coords_[static_cast<std::size_t>(r - 1)];
    }

    /// Apery element m * x_r + r of class r (0 for r = 0).
    Int apery(int r) const;

    Int genus() const noexcept;
    Int frobenius() const;

    bool is_ordinary() const noexcept;

    std::string to_string() const;

    friend bool operator==(const KunzVector&, const KunzVector&) = default;
    friend auto operator<=>(const KunzVector& a, const KunzVector& b)
    {
        if (auto c = a.m_ <=> b.m_; c != 0) return c;
        return a.coords_ <=> b.coords_;
    }

private:
    struct TrustedTag {};
    KunzVector(TrustedTag, int multiplicity, std::vector<Int> coords)
        : m_(multiplicity), coords_(std::move(coords)) {}

    int m_;
    std::vector<Int> coords_;
};

/// Componentwise order: a <= b in every coordinate (same multiplicity).
bool componentwise_leq(const KunzVector& a, const KunzVector& b);

}  // namespace kunzsg
