#pragma once

// CSV ingestion for observation series.  Expected layout: optional header
// `time,price` or `time,logprice`, then one `t,value` row per observation.
// Timestamps are used only to verify equidistant sampling; the horizon is
// rescaled to [0,1].

#include <string>
#include <vector>

#include "volcp/series.hpp"

namespace volcp {

struct csv_series {
  log_price_series series;
  bool log_applied = false;  // natural log was taken on the value column
  std::vector<std::string> warnings;
};

// force_log: take logs regardless of the header (for raw-price files
// without one).  Errors carry 1-based line numbers.
csv_series read_price_csv(const std::string& path, bool force_log = false);

// Same parser over in-memory text (exposed for tests).
csv_series parse_price_csv(const std::string& text, bool force_log = false);

// Two-column table writer used by the path and report emitters.
void write_csv(const std::string& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns);

// One CSV row with 17-significant-digit numbers.
std::string csv_row(const std::vector<double>& values);

}  // namespace volcp
