#pragma once

// Self-normalized cusum test of constant volatility:
//
//   S_{n,m} = n^{-1/2} * sum_{i<=m} ( n*(D_i)^2 - sum_j (D_j)^2 ),  m = 1..n
//   T_n     = max_m |S_{n,m}| / gamma_hat,   gamma_hat^2 = (2n/3) sum (D_i)^4
//
// T_n is referred to the Kolmogorov-Smirnov law under the null.

#include <cstddef>
#include <vector>

namespace volcp {

struct cusum_path_result {
  std::vector<double> s;    // S_{n,m} at index m-1; S_{n,n} = 0 up to rounding
  double gamma_hat_sq = 0;  // quarticity normalizer
};

// Requires n >= 2.
cusum_path_result cusum_path(const std::vector<double>& increments);

struct cusum_report {
  double t_stat = 0;          // T_n
  double p_value = 1;         // 1 - ks_cdf(T_n)
  double critical_value = 0;  // ks_quantile(1 - level)
  bool reject = false;
  std::size_t argmax_m = 1;  // smallest m attaining max |S_{n,m}|
  double gamma_hat_sq = 0;
  double level = 0.05;
};

// Raises degenerate_quarticity when gamma_hat^2 = 0.
cusum_report test_constant_vol(const std::vector<double>& increments,
                               double level);

}  // namespace volcp
