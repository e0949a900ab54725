#include "volcp/report.hpp"

#include <fstream>
#include <iostream>

#include "volcp/errors.hpp"

namespace volcp {

namespace {

void put_optional(json& j, const char* key, const std::optional<double>& v) {
  if (v)
    j[key] = *v;
  else
    j[key] = nullptr;
}

}  // namespace

void to_json(json& j, const cusum_report& r) {
  j = json{{"statistic", r.t_stat},
           {"p_value", r.p_value},
           {"critical_value", r.critical_value},
           {"reject", r.reject},
           {"argmax_m", r.argmax_m},
           {"quarticity_normalizer", r.gamma_hat_sq},
           {"level", r.level}};
}

void to_json(json& j, const local_test_report& r) {
  j = json{{"raw_stat", r.raw_stat},
           {"rescaled_stat", r.rescaled_stat},
           {"critical_value", r.critical_value},
           {"reject", r.reject},
           {"argmax_index", r.argmax_index},
           {"k", r.k},
           {"m", r.m},
           {"level", r.level}};
  put_optional(j, "p_value", r.p_value);
}

void to_json(json& j, const psi_diamond_report& r) {
  j = json{{"reject", r.reject},
           {"k", r.k},
           {"m", r.m},
           {"v_star", r.v_star},
           {"threshold", r.threshold},
           {"argmax_index", r.argmax_index}};
}

void to_json(json& j, const bandwidth_result& r) {
  j = json{{"k", r.k}, {"m", r.m}, {"iterations", r.iterations}};
}

void to_json(json& j, const global_test_report& r) {
  j = json{{"raw_stat", r.raw_stat},
           {"scaled_stat", r.scaled_stat},
           {"critical_value", r.critical_value},
           {"reject", r.reject},
           {"argmax_m", r.argmax_m},
           {"spot_window", r.big_k},
           {"level", r.level}};
  put_optional(j, "p_value", r.p_value);
}

void to_json(json& j, const index_run& r) {
  j = json{{"lo", r.lo}, {"hi", r.hi}};
}

void to_json(json& j, const round_info& r) {
  j = json{{"round", r.round},
           {"v_star", r.v_star},
           {"threshold", r.threshold},
           {"reject", r.reject},
           {"tested_runs", r.tested_runs},
           {"short_runs", r.short_runs}};
  if (r.reject) {
    j["argmax_index"] = r.argmax_index;
    j["estimate"] = r.estimate;
    j["removed"] = r.removed;
  }
}

void to_json(json& j, const change_point_result& r) {
  j = json{{"change_points", r.theta_hats},
           {"change_indices", r.change_indices},
           {"clean_runs", r.clean_runs},
           {"iterations", r.iterations},
           {"k", r.k},
           {"m", r.m},
           {"threshold", r.threshold},
           {"rounds", r.rounds}};
}

json make_envelope(const std::string& command, json config, json results,
                   const std::vector<std::string>& warnings,
                   double timing_seconds) {
  return json{{"schema", report_schema_version},
              {"tool", json{{"name", tool_name}, {"version", tool_version}}},
              {"command", command},
              {"config", std::move(config)},
              {"results", std::move(results)},
              {"warnings", warnings},
              {"timing_seconds", timing_seconds}};
}

void write_report(const json& doc, const std::string& out_path) {
  const std::string text = doc.dump(2);
  if (out_path.empty() || out_path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail(errc::invalid_input, "cannot open output file: " + out_path);
  out << text << '\n';
  if (!out) fail(errc::invalid_input, "failed writing output file: " + out_path);
}

}  // namespace volcp
