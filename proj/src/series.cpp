#include "volcp/series.hpp"

#include <cmath>
#include <cstdio>
#include <utility>

#include "volcp/errors.hpp"

namespace volcp {

log_price_series::log_price_series(std::vector<double> values)
    : values_(std::move(values)) {
  if (values_.size() < 3)
    fail(errc::invalid_input,
         "log_price_series: need at least 3 observations, got " +
             std::to_string(values_.size()));
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i]))
      fail(errc::invalid_input,
           "log_price_series: non-finite value at index " + std::to_string(i));
  }
}

std::vector<double> log_price_series::increments() const {
  std::vector<double> d(values_.size() - 1);
  for (std::size_t i = 1; i < values_.size(); ++i)
    d[i - 1] = values_[i] - values_[i - 1];
  return d;
}

std::optional<std::string> validate_block_config(std::size_t n, std::size_t k) {
  if (k < 2)
    fail(errc::block_too_small,
         "block length k=" + std::to_string(k) + " must be at least 2");
  if (k > n / 2)
    fail(errc::block_too_large, "block length k=" + std::to_string(k) +
                                    " exceeds n/2=" + std::to_string(n / 2));
  const double lo = std::pow(static_cast<double>(n), 1.0 / 3.0);
  const double hi = std::pow(static_cast<double>(n), 3.0 / 4.0);
  const double kd = static_cast<double>(k);
  if (kd < lo || kd > hi) {
    char buf[160];
    std::snprintf(buf, sizeof(buf),
                  "block length k=%zu is outside the guideline range "
                  "[n^(1/3), n^(3/4)] = [%.1f, %.1f] for n=%zu",
                  k, lo, hi, n);
    return std::string(buf);
  }
  return std::nullopt;
}

}  // namespace volcp
