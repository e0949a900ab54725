#pragma once

// Test for a permanent change of the volatility's regularity:
//
//   Q_{n,i} = n^2 [ ((D_i)^2 - (D_{i-1})^2)^2 - (2/3)((D_i)^4 + (D_{i-1})^4) ]
//   V+  = (n-1)^{-1/2} max_m |sum_{i=2..m} (Q_{n,i} - mean Q)|
//
// The bootstrap referral draws i.i.d. normals weighted by the fourth-power
// spot volatility over blocks of length K and rejects when
// sqrt(3/80) * V+ exceeds the simulated quantile.  The standardized variant
// divides each Q_{n,i} by the spot estimate two increments back and refers
// sqrt(3/80) * Vbar+ to the Kolmogorov-Smirnov law.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "volcp/blockstats.hpp"

namespace volcp {

enum class global_mode { bootstrap, standardized_ks };

struct global_test_config {
  std::size_t big_k = 0;  // spot window; 0 selects floor(sqrt(n))
  std::size_t bootstrap_b = 2000;
  global_mode mode = global_mode::bootstrap;
  double level = 0.05;
  std::uint64_t seed = 0;
  int workers = 1;
  // Zeroes out increments above the threshold before forming Q;
  // experimental jump robustness.
  std::optional<truncation_rule> truncation;
};

// Q_{n,i} for i = 2..n, stored at index i-2 (length n-1).
std::vector<double> q_stats(const std::vector<double>& increments);

struct cusum_q_result {
  double v_dagger = 0.0;
  std::vector<double> path;   // centered partial sums at m = 2..n
  std::size_t argmax_m = 2;   // smallest m attaining the max
};

// Requires n >= 3.
cusum_q_result cusum_q(const std::vector<double>& increments);

// Empirical (1-level) quantile of the weighted-bridge maximum over
// config.bootstrap_b draws; requires bootstrap_b >= 100.
double bootstrap_quantile(const std::vector<double>& increments,
                          const global_test_config& config);

struct global_test_report {
  global_mode mode = global_mode::bootstrap;
  double raw_stat = 0.0;     // V+ or Vbar+
  double scaled_stat = 0.0;  // sqrt(3/80) * raw
  double critical_value = 0.0;
  std::optional<double> p_value;  // standardized mode only
  bool reject = false;
  std::size_t argmax_m = 0;
  std::size_t big_k = 0;
  double level = 0.05;
};

// Bootstrap-mode test; config.mode must be bootstrap.
global_test_report psi_dagger(const std::vector<double>& increments,
                              const global_test_config& config);

struct standardized_vbar_result {
  double vbar = 0.0;
  double scaled = 0.0;   // sqrt(3/80) * vbar
  double p_value = 1.0;  // 1 - ks_cdf(scaled)
  std::size_t argmax_m = 0;
};

// Raises zero_spot_vol when a denominator spot estimate is 0.
standardized_vbar_result standardized_vbar(const std::vector<double>& increments,
                                           std::size_t K);

// Dispatches on config.mode.
global_test_report run_global_test(const std::vector<double>& increments,
                                   const global_test_config& config);

}  // namespace volcp
