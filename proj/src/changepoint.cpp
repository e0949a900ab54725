#include "volcp/changepoint.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "volcp/errors.hpp"
#include "volcp/series.hpp"

namespace volcp {

namespace {

// V<> over one contiguous slice; values use the full-sample scale n even
// when the slice is shorter (rolling_rv normalizes by the slice length, so
// rescale by n/slice_n).  Returns (value, boundary index) pairs in slice
// coordinates via the callback.
template <typename F>
void scan_slice(const std::vector<double>& slice, std::size_t k,
                const std::optional<truncation_rule>& truncation,
                double full_n, F&& visit) {
  const rolling_windows w = rolling_rv(slice, k, truncation);
  const double scale = std::sqrt(static_cast<double>(k)) * full_n /
                       static_cast<double>(slice.size());
  for (std::size_t t = 0; t < w.left.size(); ++t)
    visit(w.first_index + t, scale * std::abs(w.left[t] - w.right[t]));
}

}  // namespace

std::vector<double> v_diamond_series(
    const std::vector<double>& increments, std::size_t k,
    const std::optional<truncation_rule>& truncation) {
  const std::size_t n = increments.size();
  std::vector<double> out(n + 1, 0.0);
  scan_slice(increments, k, truncation, static_cast<double>(n),
             [&](std::size_t i, double v) { out[i] = v; });
  return out;
}

single_estimate estimate_single(
    const std::vector<double>& increments, std::size_t k,
    const std::optional<truncation_rule>& truncation) {
  const std::size_t n = increments.size();
  single_estimate best;
  double best_v = -1.0;
  scan_slice(increments, k, truncation, static_cast<double>(n),
             [&](std::size_t i, double v) {
               if (v > best_v) {
                 best_v = v;
                 best.argmax_index = i;
               }
             });
  best.v_diamond = best_v;
  best.theta =
      static_cast<double>(best.argmax_index) / static_cast<double>(n);
  return best;
}

change_point_result detect_multiple(const std::vector<double>& increments,
                                    const local_test_config& config,
                                    std::size_t r) {
  const std::size_t n = increments.size();
  if (!(config.c_diamond > 2.0))
    fail(errc::invalid_input, "threshold constant must exceed 2");

  change_point_result res;
  if (config.block.k > 0) {
    validate_block_config(n, config.block.k);
    res.k = config.block.k;
    res.m = n / res.k;
  } else {
    const bandwidth_result bw =
        psi_diamond_bandwidth(n, config.regularity_a, config.lipschitz_l);
    res.k = bw.k;
    res.m = bw.m;
  }
  if (r < res.k || r > n / 4)
    fail(errc::invalid_input,
         "separation radius r=" + std::to_string(r) +
             " must satisfy k <= r <= n/4 (k=" + std::to_string(res.k) +
             ", n=" + std::to_string(n) + ")");
  res.threshold = 2.0 * config.c_diamond *
                  std::sqrt(2.0 * std::log(static_cast<double>(res.m)) /
                            static_cast<double>(res.k));

  const std::size_t k = res.k;
  std::vector<index_run> runs{{1, n}};
  const auto slice_of = [&](const index_run& run) {
    return std::vector<double>(increments.begin() + (run.lo - 1),
                               increments.begin() + run.hi);
  };

  for (;;) {
    if (res.rounds.size() >= 50)
      fail(errc::max_iterations,
           "change-point detection did not stop within 50 rounds");
    round_info ri;
    ri.round = res.rounds.size() + 1;
    ri.threshold = res.threshold;

    std::vector<index_run> eligible;
    for (const index_run& run : runs) {
      if (run.hi - run.lo + 1 >= 2 * k)
        eligible.push_back(run);
      else
        ri.short_runs.push_back(run);
    }
    ri.tested_runs = eligible;
    if (eligible.empty()) {
      res.rounds.push_back(ri);
      break;
    }

    // Test step: maximal window ratio over all admissible windows.
    double v_star = -1.0;
    std::size_t v_star_index = 0;
    for (const index_run& run : eligible) {
      const std::vector<double> slice = slice_of(run);
      const block_config cfg{k, config.block.truncation};
      const stat_with_argmax v = v_stat_overlap(slice, cfg);
      if (v.value > v_star) {
        v_star = v.value;
        v_star_index = run.lo - 1 + v.argmax;
      }
    }
    ri.v_star = v_star;
    ri.argmax_index = v_star_index;
    if (v_star < res.threshold) {
      res.rounds.push_back(ri);
      break;
    }
    ri.reject = true;

    // Estimation step: argmax of the difference scan on the same index set.
    double best_v = -1.0;
    std::size_t best_index = 0;
    for (const index_run& run : eligible) {
      const std::vector<double> slice = slice_of(run);
      scan_slice(slice, k, config.block.truncation, static_cast<double>(n),
                 [&](std::size_t i, double v) {
                   if (v > best_v) {
                     best_v = v;
                     best_index = run.lo - 1 + i;
                   }
                 });
    }
    const double theta =
        static_cast<double>(best_index) / static_cast<double>(n);
    ri.estimate = theta;
    res.theta_hats.push_back(theta);
    res.change_indices.push_back(best_index);

    // Exclusion step: drop the radius-r neighborhood of the estimate.
    const std::size_t cut_lo = (best_index > r) ? best_index - r : 1;
    const std::size_t cut_hi = std::min(n, best_index + r);
    ri.removed = {cut_lo, cut_hi};
    std::vector<index_run> next;
    for (const index_run& run : runs) {
      if (run.hi < cut_lo || run.lo > cut_hi) {
        next.push_back(run);
        continue;
      }
      if (run.lo < cut_lo) next.push_back({run.lo, cut_lo - 1});
      if (run.hi > cut_hi) next.push_back({cut_hi + 1, run.hi});
    }
    runs = std::move(next);
    res.rounds.push_back(ri);
  }

  res.iterations = res.rounds.size();
  res.clean_runs = runs;

  std::vector<std::size_t> order(res.theta_hats.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return res.change_indices[a] < res.change_indices[b];
  });
  std::vector<double> thetas;
  std::vector<std::size_t> indices;
  for (std::size_t i : order) {
    thetas.push_back(res.theta_hats[i]);
    indices.push_back(res.change_indices[i]);
  }
  res.theta_hats = std::move(thetas);
  res.change_indices = std::move(indices);
  return res;
}

}  // namespace volcp
