#pragma once

#include <vector>

#include "kunzsg/engine.hpp"
#include "kunzsg/semigroup.hpp"

namespace kunzsg::gas {

/// <m, mh + d, mh + 2d, ..., mh + kd> with m in {3, 4}, gcd(d, m) = 1 and
/// 1 <= k <= m - 1.
struct GasSpec {
    int m;
    Int h;
    Int d;
    int k;

    /// Throws InvalidSpec on any violated constraint.
    void validate() const;
    std::vector<Int> generators() const;
    /// (d - d mod m) / m
    Int quotient() const noexcept { return (d - d % m) / m; }
};

/// Kunz vector from the closed-form case table on (k, d mod m).
KunzVector gas_kunz(const GasSpec& spec);

struct GasBuild {
    Semigroup semigroup;
    KunzVector closed_form;
};

/// Builds from the generators and checks the closed form against it; a
/// disagreement throws std::logic_error.
GasBuild gas_build(const GasSpec& spec);

struct GasClassification {
    bool irreducible;
    bool symmetric;
    bool pseudosymmetric;
    Int frobenius;

    friend bool operator==(const GasClassification&, const GasClassification&) = default;
};

/// Closed-form verdict on (m, h, k) with Frobenius number by Selmer.
GasClassification gas_classify(const GasSpec& spec);

}  // namespace kunzsg::gas
