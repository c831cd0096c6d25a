#pragma once

#include <string>
#include <vector>

#include "kunzsg/engine.hpp"

namespace kunzsg {

struct CheckTally {
    std::string name;
    std::size_t checked = 0;
    std::size_t failed = 0;
};

struct CrossReport {
    int multiplicity = 0;
    Int bound = 0;
    std::size_t vectors = 0;
    std::vector<CheckTally> checks;
    /// "<kunz>: <check>: <detail>", in corpus order.
    std::vector<std::string> failures;
    /// Disagreements with the printed formulas; informational only.
    std::vector<std::string> notes;

    bool ok() const noexcept { return failures.empty(); }
};

/// Engine, closed forms and oracle compared on every vector of
/// enumerate_kunz(m, bound). Needs 2 <= m <= 6 and 1 <= bound <= 8, otherwise
/// BoundsExceeded.
CrossReport cross_validate(int multiplicity, Int bound);

/// Same report computed on one thread.
CrossReport cross_validate_serial(int multiplicity, Int bound);

/// One zeroed tally per check, in report order.
std::vector<CheckTally> empty_tallies();

/// Failures for a single vector, tallied into `checks` (names must match).
std::vector<std::string> check_vector(const KunzVector& x, std::vector<CheckTally>& checks);

}  // namespace kunzsg
