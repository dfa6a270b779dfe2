#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

#include "degenlab/degeneration.hpp"

namespace degenlab {

// Field elements appear only inside element strings, with rationals as p/q.
nlohmann::json report_to_json(const SubmodulePoint& c, const DegenerationReport& r, CheckMode mode, uint64_t seed);
nlohmann::json invariants_to_json(const SubmodulePoint& c, uint64_t seed);
nlohmann::json curve_to_json(const CurveFamily& curve);

const char* to_string(CheckMode m);

// Two-space indented, keys sorted, trailing newline.
std::string dump_report(const nlohmann::json& j);

}  // namespace degenlab
