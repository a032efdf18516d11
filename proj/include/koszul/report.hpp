#pragma once

#include <optional>
#include <string>
#include <vector>

// vendored single-header nlohmann/json
#include "json.hpp"

namespace koszul {

using Json = nlohmann::ordered_json;  // insertion-ordered, deterministic dump

// Flatten the run report into CSV, one row per instance, fixed column list;
// array cells are ';'-joined, missing sections stay empty.
std::string report_to_csv(const Json& run_report);

}  // namespace koszul
