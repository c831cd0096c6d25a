#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "kunzsg/engine.hpp"

namespace kunzsg::cli {

inline constexpr const char* kSchemaVersion = "1";

enum Exit : int { Ok = 0, VerifyFailed = 1, Usage = 2 };

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Semigroup descriptor as emitted under "result" by analyze.
nlohmann::json describe(const KunzVector& x);

/// Rebuilds the Kunz vector from a descriptor.
KunzVector kunz_from_descriptor(const nlohmann::json& j);

/// "4,31,53" and "4:13,15,7"; throws Error(InvalidGenerator / InvalidKunz).
std::vector<Int> parse_list(const std::string& text);
KunzVector parse_kunz(const std::string& text);

}  // namespace kunzsg::cli
