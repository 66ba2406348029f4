#pragma once

/// @file report_json.hpp
/// @brief JSON form of witness and suite reports. Every rational is written as
/// a "p/q" (or integer) string; reading a report back and calling `recheck`
/// re-verifies it without rerunning the search.

#include "nowhere/suites.hpp"
#include "nowhere/verifier.hpp"

#include "json.hpp"

namespace nowhere {

nlohmann::ordered_json to_json(const WitnessReport& report);
nlohmann::ordered_json to_json(const SuiteReport& report);

/// Inverse of to_json(WitnessReport); throws ParseError on malformed input.
WitnessReport witness_from_json(const nlohmann::ordered_json& j);

}  // namespace nowhere
