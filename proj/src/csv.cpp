#include "volcp/csv.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "volcp/errors.hpp"

namespace volcp {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return s;
}

bool parse_double(const std::string& s, double& out) {
  if (s.empty()) return false;
  char* end = nullptr;
  out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size();
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(trim(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  fields.push_back(trim(cur));
  return fields;
}

}  // namespace

csv_series parse_price_csv(const std::string& text, bool force_log) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  bool seen_content = false;
  bool header_says_raw = false;
  bool header_says_log = false;
  std::vector<double> times;
  std::vector<double> values;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const std::vector<std::string> fields = split_fields(stripped);
    if (fields.size() < 2)
      fail(errc::invalid_input, "line " + std::to_string(lineno) +
                                    ": expected `time,value`, got '" +
                                    stripped + "'");
    if (!seen_content) {
      seen_content = true;
      double probe;
      if (!parse_double(fields[1], probe)) {
        const std::string name = lower(fields[1]);
        if (name == "price") {
          header_says_raw = true;
        } else if (name == "logprice" || name == "log_price" ||
                   name == "log-price") {
          header_says_log = true;
        } else {
          fail(errc::invalid_input,
               "line " + std::to_string(lineno) + ": unrecognized value column '" +
                   fields[1] + "' (expected price or logprice)");
        }
        continue;
      }
    }
    double t;
    double v;
    if (!parse_double(fields[0], t) || !std::isfinite(t))
      fail(errc::invalid_input, "line " + std::to_string(lineno) +
                                    ": bad time value '" + fields[0] + "'");
    if (!parse_double(fields[1], v) || !std::isfinite(v))
      fail(errc::invalid_input, "line " + std::to_string(lineno) +
                                    ": bad observation value '" + fields[1] +
                                    "'");
    times.push_back(t);
    values.push_back(v);
  }

  if (values.size() < 3)
    fail(errc::invalid_input,
         "need at least 3 observation rows, got " +
             std::to_string(values.size()));
  (void)header_says_log;

  const bool take_log = force_log || header_says_raw;
  if (take_log) {
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!(values[i] > 0.0))
        fail(errc::invalid_input,
             "row " + std::to_string(i + 1) +
                 ": price must be positive to take logs");
      values[i] = std::log(values[i]);
    }
  }

  // Timestamps are only checked for an equidistant grid; deviations up to
  // 10% of the median spacing pass.
  std::vector<double> gaps(times.size() - 1);
  for (std::size_t i = 0; i + 1 < times.size(); ++i)
    gaps[i] = times[i + 1] - times[i];
  std::vector<double> sorted = gaps;
  std::sort(sorted.begin(), sorted.end());
  const double median = sorted[sorted.size() / 2];
  if (!(median > 0.0))
    fail(errc::invalid_input, "timestamps must be strictly increasing");
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (std::abs(gaps[i] - median) > 0.1 * median)
      fail(errc::invalid_input,
           "sampling not equidistant: gap after row " + std::to_string(i + 1) +
               " is " + std::to_string(gaps[i]) + " vs median spacing " +
               std::to_string(median));
  }

  return csv_series{log_price_series(std::move(values)), take_log, {}};
}

csv_series read_price_csv(const std::string& path, bool force_log) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(errc::invalid_input, "cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_price_csv(buf.str(), force_log);
}

std::string csv_row(const std::vector<double>& values) {
  std::string row;
  char buf[64];
  for (std::size_t i = 0; i < values.size(); ++i) {
    std::snprintf(buf, sizeof(buf), "%.17g", values[i]);
    if (i) row.push_back(',');
    row += buf;
  }
  return row;
}

void write_csv(const std::string& path,
               const std::vector<std::string>& header,
               const std::vector<std::vector<double>>& columns) {
  if (columns.empty()) fail(errc::invalid_input, "no columns to write");
  const std::size_t rows = columns.front().size();
  for (const auto& c : columns)
    if (c.size() != rows)
      fail(errc::invalid_input, "csv columns have unequal lengths");

  std::ofstream outf(path, std::ios::binary);
  if (!outf) fail(errc::invalid_input, "cannot open output file '" + path + "'");
  for (std::size_t i = 0; i < header.size(); ++i) {
    if (i) outf << ',';
    outf << header[i];
  }
  outf << '\n';
  std::vector<double> row(columns.size());
  for (std::size_t rI = 0; rI < rows; ++rI) {
    for (std::size_t c = 0; c < columns.size(); ++c) row[c] = columns[c][rI];
    outf << csv_row(row) << '\n';
  }
  if (!outf) fail(errc::invalid_input, "failed writing '" + path + "'");
}

}  // namespace volcp
