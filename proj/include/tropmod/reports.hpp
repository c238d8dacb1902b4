#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"
#include "tropmod/fan.hpp"

namespace tropmod::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "tropmod/1";
inline constexpr const char* kVersion = "0.1.0";

std::string graph_hash(const StabilityGraph& g);

// One JSON document per command; byte-stable for a fixed input and version
// (no timestamps or timings inside the document).
Json classify_report(const StabilityGraph& g, VerifyLevel level);
Json fan_report(const StabilityGraph& g);
Json tropicalize_report(const StabilityGraph& g, const std::string& family_text);
Json survey_report(int n, long long limit, VerifyLevel level, uint64_t seed);

std::string render_text(const Json& report);
std::string render_tsv(const Json& report);
// 1-skeleton of the boundary complex.
std::string render_dot(const StabilityGraph& g);
// Golden-file fan format: one ray per line, then one cone per line.
std::string render_fan_plain(const WeightedFan& f);

}  // namespace tropmod::cli
