#include "volcp/blockstats.hpp"

#include <cmath>
#include <string>

#include "volcp/accum.hpp"
#include "volcp/errors.hpp"
#include "volcp/series.hpp"

namespace volcp {

truncation_rule truncation_rule::explicit_threshold(double u) {
  if (!(u > 0.0))
    fail(errc::invalid_input, "truncation threshold u must be positive");
  truncation_rule r;
  r.mode_ = truncation_mode::explicit_u;
  r.u_ = u;
  return r;
}

truncation_rule truncation_rule::scaled(double c, double tau) {
  if (!(c > 0.0) || !std::isfinite(c))
    fail(errc::invalid_input, "truncation scale C must be positive finite");
  if (!(tau > 0.0 && tau <= 0.5))
    fail(errc::invalid_input, "truncation exponent tau must lie in (0, 1/2]");
  truncation_rule r;
  r.mode_ = truncation_mode::scaled;
  r.c_ = c;
  r.tau_ = tau;
  return r;
}

double truncation_rule::threshold(std::size_t n) const {
  if (mode_ == truncation_mode::explicit_u) return u_;
  const double nd = static_cast<double>(n);
  if (tau_ == 0.5) return c_ * std::sqrt(2.0 * std::log(nd)) / std::sqrt(nd);
  return c_ * std::pow(nd, -tau_);
}

namespace {

// Squared increments with the truncation indicator already applied.
std::vector<double> squared_retained(const std::vector<double>& d,
                                     const std::optional<truncation_rule>& tr) {
  std::vector<double> q(d.size());
  if (tr) {
    const double u = tr->threshold(d.size());
    for (std::size_t j = 0; j < d.size(); ++j)
      q[j] = (std::abs(d[j]) <= u) ? d[j] * d[j] : 0.0;
  } else {
    for (std::size_t j = 0; j < d.size(); ++j) q[j] = d[j] * d[j];
  }
  return q;
}

std::vector<double> block_sums(const std::vector<double>& q, std::size_t n,
                               std::size_t k) {
  const std::size_t m = n / k;
  std::vector<double> rv(m);
  const double scale = static_cast<double>(n) / static_cast<double>(k);
  for (std::size_t i = 0; i < m; ++i) {
    kahan_sum acc;
    for (std::size_t j = 0; j < k; ++j) acc.add(q[i * k + j]);
    rv[i] = scale * acc.value();
  }
  return rv;
}

}  // namespace

std::vector<double> local_rv(const std::vector<double>& increments,
                             const block_config& config) {
  validate_block_config(increments.size(), config.k);
  return block_sums(squared_retained(increments, std::nullopt),
                    increments.size(), config.k);
}

std::vector<double> local_trv(const std::vector<double>& increments,
                              const block_config& config) {
  if (!config.truncation)
    fail(errc::invalid_input, "local_trv requires a truncation rule");
  validate_block_config(increments.size(), config.k);
  const std::size_t n = increments.size();
  const std::size_t k = config.k;
  const double u = config.truncation->threshold(n);
  const std::size_t m = n / k;
  for (std::size_t i = 0; i < m; ++i) {
    bool any_kept = false;
    for (std::size_t j = 0; j < k && !any_kept; ++j)
      any_kept = std::abs(increments[i * k + j]) <= u;
    if (!any_kept)
      fail(errc::all_truncated,
           "every increment in block " + std::to_string(i) +
               " exceeds the truncation threshold u=" + std::to_string(u));
  }
  return block_sums(squared_retained(increments, config.truncation), n, k);
}

rolling_windows rolling_rv(const std::vector<double>& increments, std::size_t k,
                           const std::optional<truncation_rule>& truncation) {
  const std::size_t n = increments.size();
  if (k < 1) fail(errc::block_too_small, "rolling window k must be >= 1");
  if (2 * k > n)
    fail(errc::block_too_large, "rolling window k=" + std::to_string(k) +
                                    " needs 2k <= n=" + std::to_string(n));
  const std::vector<double> q = squared_retained(increments, truncation);
  const double scale = static_cast<double>(n) / static_cast<double>(k);

  rolling_windows out;
  out.first_index = k;
  const std::size_t count = n - 2 * k + 1;
  out.left.resize(count);
  out.right.resize(count);

  // Windows at center i (1-based increments): left = q[i-k..i-1],
  // right = q[i..i+k-1] in 0-based storage; slide both by one increment.
  kahan_sum left_acc;
  kahan_sum right_acc;
  for (std::size_t j = 0; j < k; ++j) left_acc.add(q[j]);
  for (std::size_t j = k; j < 2 * k; ++j) right_acc.add(q[j]);
  out.left[0] = scale * left_acc.value();
  out.right[0] = scale * right_acc.value();
  for (std::size_t t = 1; t < count; ++t) {
    const std::size_t i = k + t;
    left_acc.add(q[i - 1]);
    left_acc.add(-q[i - k - 1]);
    right_acc.add(q[i + k - 1]);
    right_acc.add(-q[i - 1]);
    out.left[t] = scale * left_acc.value();
    out.right[t] = scale * right_acc.value();
  }
  return out;
}

double quarticity(const std::vector<double>& increments) {
  const std::size_t n = increments.size();
  if (n < 1) fail(errc::invalid_input, "quarticity needs at least 1 increment");
  kahan_sum acc;
  for (double d : increments) acc.add(d * d * d * d);
  return (2.0 * static_cast<double>(n) / 3.0) * acc.value();
}

std::vector<double> spot_vol_quartic(const std::vector<double>& increments,
                                     std::size_t K) {
  const std::size_t n = increments.size();
  if (K < 1) fail(errc::invalid_input, "spot volatility window K must be >= 1");
  if (K > n)
    fail(errc::window_too_large, "spot volatility window K=" +
                                     std::to_string(K) +
                                     " exceeds n=" + std::to_string(n));
  const double scale =
      static_cast<double>(n) * static_cast<double>(n) / (3.0 * K);
  std::vector<double> out(n - K + 1);
  kahan_sum acc;
  for (std::size_t j = 0; j < K; ++j) {
    const double d2 = increments[j] * increments[j];
    acc.add(d2 * d2);
  }
  out[0] = scale * acc.value();
  for (std::size_t t = 1; t < out.size(); ++t) {
    const double enter2 = increments[t + K - 1] * increments[t + K - 1];
    const double leave2 = increments[t - 1] * increments[t - 1];
    acc.add(enter2 * enter2);
    acc.add(-(leave2 * leave2));
    out[t] = scale * acc.value();
  }
  return out;
}

double default_truncation_c(const std::vector<double>& increments) {
  const std::size_t n = increments.size();
  if (n < 2)
    fail(errc::invalid_input, "truncation heuristic needs >= 2 increments");
  const double root_n = std::sqrt(static_cast<double>(n));
  kahan_sum mean_acc;
  for (double d : increments) mean_acc.add(root_n * d);
  const double mean = mean_acc.value() / static_cast<double>(n);
  kahan_sum var_acc;
  for (double d : increments) {
    const double c = root_n * d - mean;
    var_acc.add(c * c);
  }
  return 3.0 * std::sqrt(var_acc.value() / static_cast<double>(n - 1));
}

}  // namespace volcp
