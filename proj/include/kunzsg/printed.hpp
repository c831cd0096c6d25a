#pragma once

// Multiplicity-4 formulas exactly as they were first printed. None of these
// are used for computation; cross_validate diffs them against the engine and
// reports the disagreements as informational notes.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "kunzsg/mult4.hpp"

namespace kunzsg::printed {

using Triple = std::array<Int, 3>;

/// The case table for SG_4, first matching row wins; no row matching gives
/// nullopt.
std::optional<std::vector<Int>> sg4_table(mult4::Kunz4 x);

/// x - y over the printed y-interval for the special gap of class `cls`.
/// Rows are taken literally, so coordinates may be < 1.
std::vector<Triple> family4_rows(mult4::Kunz4 x, int cls);

/// Count formula for |SG_4| = 2; nullopt otherwise.
std::optional<Int> count4_formula(mult4::Kunz4 x);

/// One line per disagreement kind over the corpus, with a sample vector.
std::vector<std::string> corpus_notes(const std::vector<KunzVector>& corpus);

/// Fixed facts about the printed worked examples, each checked by brute force.
struct ExampleFact {
    std::string label;
    bool printed_value_holds;
    std::string detail;
};
std::vector<ExampleFact> example_facts();

}  // namespace kunzsg::printed
