#pragma once

// Observation container for a log-price path sampled on the equidistant grid
// i/n, i = 0..n, over the unit interval.  All statistics consume the n
// increments D_i = x[i] - x[i-1].

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace volcp {

class log_price_series {
 public:
  // values are log prices at t = i/n; requires >= 3 points, all finite.
  explicit log_price_series(std::vector<double> values);

  // n: number of increments (points - 1).
  std::size_t n() const { return values_.size() - 1; }

  const std::vector<double>& values() const { return values_; }

  // D_i = x[i] - x[i-1], i = 1..n, stored at index i-1.
  std::vector<double> increments() const;

 private:
  std::vector<double> values_;
};

// Block length sanity for an n-increment sample.
//   error   : k < 2 (block_too_small) or k > floor(n/2) (block_too_large)
//   warning : k outside [n^{1/3}, n^{3/4}], returned as guidance text
std::optional<std::string> validate_block_config(std::size_t n, std::size_t k);

}  // namespace volcp
