#pragma once

// Volatility change-point location via the difference scan
//
//   V<>_{n,i} = k^{-1/2} |sum_{j=i-k+1..i} n(D_j)^2 - sum_{j=i+1..i+k} n(D_j)^2|
//
// for i = k..n-k.  The single-change estimator takes the scan argmax; the
// multiple-change routine alternates a threshold test on the residual index
// set with estimation and exclusion of a radius-r neighborhood.

#include <cstddef>
#include <optional>
#include <vector>

#include "volcp/blockstats.hpp"
#include "volcp/local_test.hpp"

namespace volcp {

// Inclusive range of 1-based increment indices.
struct index_run {
  std::size_t lo = 0;
  std::size_t hi = 0;
};

// Length n+1, indexed by boundary i; zero outside [k, n-k].
std::vector<double> v_diamond_series(
    const std::vector<double>& increments, std::size_t k,
    const std::optional<truncation_rule>& truncation = std::nullopt);

struct single_estimate {
  double theta = 0.0;            // argmax / n
  std::size_t argmax_index = 0;  // smallest boundary index on ties
  double v_diamond = 0.0;
};

single_estimate estimate_single(
    const std::vector<double>& increments, std::size_t k,
    const std::optional<truncation_rule>& truncation = std::nullopt);

struct round_info {
  std::size_t round = 0;
  double v_star = 0.0;
  double threshold = 0.0;
  bool reject = false;
  std::size_t argmax_index = 0;       // set when reject
  double estimate = 0.0;              // set when reject
  index_run removed{};                // set when reject
  std::vector<index_run> tested_runs;
  std::vector<index_run> short_runs;  // too short for any window this round
};

struct change_point_result {
  std::vector<double> theta_hats;          // sorted change times
  std::vector<std::size_t> change_indices; // matching boundary indices
  std::vector<index_run> clean_runs;       // residual index set
  std::size_t iterations = 0;              // rounds executed
  std::size_t k = 0;
  std::size_t m = 0;
  double threshold = 0.0;
  std::vector<round_info> rounds;
};

// Iterated test-estimate-exclude detection.  Uses config.block.k when set,
// otherwise the self-selected bandwidth from (regularity_a, lipschitz_l);
// threshold constant config.c_diamond.  Requires k <= r <= n/4; raises
// max_iterations past 50 detection rounds.
change_point_result detect_multiple(const std::vector<double>& increments,
                                    const local_test_config& config,
                                    std::size_t r);

}  // namespace volcp
