#pragma once

// Local realized-volatility building blocks over an n-increment sample:
//
//   RV_{n,i}  = (n/k) * sum_{j=1..k} (D_{ik+j})^2,        i = 0..floor(n/k)-1
//   TRV_{n,i} = as RV but each term carries 1{|D| <= u_n}
//   left[i]   = (n/k) * sum_{j=i-k+1..i} (D_j)^2,          i = k..n-k
//   right[i]  = (n/k) * sum_{j=i+1..i+k} (D_j)^2
//   quarticity = (2n/3) * sum (D_i)^4
//   spot_vol_quartic(K)[t] = (n^2/(3K)) * sum_{j=t+1..t+K} (D_j)^4
//
// Truncation thresholds: Explicit(u), or Scaled(C, tau) giving
// u_n = C*sqrt(2 ln n)*n^{-1/2} at tau = 1/2 and u_n = C*n^{-tau} otherwise.

#include <cstddef>
#include <optional>
#include <vector>

namespace volcp {

enum class truncation_mode { explicit_u, scaled };

class truncation_rule {
 public:
  // Fixed threshold u > 0 (infinity allowed: truncation becomes a no-op).
  static truncation_rule explicit_threshold(double u);

  // u_n = c * sqrt(2 ln n) * n^{-1/2} when tau = 1/2, else c * n^{-tau}.
  // Requires c > 0 and tau in (0, 1/2].
  static truncation_rule scaled(double c, double tau = 0.5);

  double threshold(std::size_t n) const;

  truncation_mode mode() const { return mode_; }
  double explicit_u() const { return u_; }
  double c() const { return c_; }
  double tau() const { return tau_; }

 private:
  truncation_rule() = default;
  truncation_mode mode_ = truncation_mode::explicit_u;
  double u_ = 0.0;
  double c_ = 0.0;
  double tau_ = 0.5;
};

struct block_config {
  std::size_t k = 0;
  std::optional<truncation_rule> truncation;
};

// Non-overlapping block realized variances, one per complete block.
std::vector<double> local_rv(const std::vector<double>& increments,
                             const block_config& config);

// Truncated variant; requires config.truncation.  Raises all_truncated when
// every increment of some block exceeds the threshold.
std::vector<double> local_trv(const std::vector<double>& increments,
                              const block_config& config);

// Aligned left/right window sums at each center i = k..n-k; entry j of
// left/right corresponds to i = first_index + j.
struct rolling_windows {
  std::vector<double> left;
  std::vector<double> right;
  std::size_t first_index = 0;
};

rolling_windows rolling_rv(
    const std::vector<double>& increments, std::size_t k,
    const std::optional<truncation_rule>& truncation = std::nullopt);

double quarticity(const std::vector<double>& increments);

// Fourth-power spot volatility over the K most recent increments; entry t
// (0-based) ends at increment t+K (1-based), so the result has n-K+1 entries.
std::vector<double> spot_vol_quartic(const std::vector<double>& increments,
                                     std::size_t K);

// Heuristic scale for Scaled truncation: 3 * sample stdev of sqrt(n)*D_i.
double default_truncation_c(const std::vector<double>& increments);

}  // namespace volcp
