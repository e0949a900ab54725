#pragma once

// JSON report envelope shared by all CLI subcommands.
//
// Every report carries { schema, tool, command, config, results, warnings,
// timing_seconds }.  Numbers are emitted with shortest-round-trip formatting,
// so parsing the report back recovers the exact double.

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "volcp/changepoint.hpp"
#include "volcp/cusum.hpp"
#include "volcp/global_test.hpp"
#include "volcp/local_test.hpp"

namespace volcp {

using json = nlohmann::json;

inline constexpr int report_schema_version = 1;
inline constexpr const char* tool_name = "volcp";
inline constexpr const char* tool_version = "1.0.0";

void to_json(json& j, const cusum_report& r);
void to_json(json& j, const local_test_report& r);
void to_json(json& j, const psi_diamond_report& r);
void to_json(json& j, const bandwidth_result& r);
void to_json(json& j, const global_test_report& r);
void to_json(json& j, const index_run& r);
void to_json(json& j, const round_info& r);
void to_json(json& j, const change_point_result& r);

// Wraps command-specific results into the versioned envelope.
json make_envelope(const std::string& command, json config, json results,
                   const std::vector<std::string>& warnings,
                   double timing_seconds);

// Writes doc to out_path, or to stdout when out_path is empty or "-".
void write_report(const json& doc, const std::string& out_path);

}  // namespace volcp
