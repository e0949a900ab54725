#include "volcp/cusum.hpp"

#include <cmath>

#include "volcp/accum.hpp"
#include "volcp/blockstats.hpp"
#include "volcp/distributions.hpp"
#include "volcp/errors.hpp"

namespace volcp {

cusum_path_result cusum_path(const std::vector<double>& increments) {
  const std::size_t n = increments.size();
  if (n < 2) fail(errc::invalid_input, "cusum needs at least 2 increments");

  kahan_sum total_acc;
  for (double d : increments) total_acc.add(d * d);
  const double total = total_acc.value();

  cusum_path_result out;
  out.s.resize(n);
  out.gamma_hat_sq = quarticity(increments);

  const double nd = static_cast<double>(n);
  const double root_n = std::sqrt(nd);
  kahan_sum running;
  for (std::size_t m = 1; m <= n; ++m) {
    const double d = increments[m - 1];
    running.add(nd * d * d - total);
    out.s[m - 1] = running.value() / root_n;
  }
  return out;
}

cusum_report test_constant_vol(const std::vector<double>& increments,
                               double level) {
  if (!(level > 0.0 && level < 1.0))
    fail(errc::invalid_input, "test level must lie in (0,1)");
  const cusum_path_result path = cusum_path(increments);
  if (path.gamma_hat_sq <= 0.0)
    fail(errc::degenerate_quarticity,
         "quarticity is zero, cusum cannot be normalized");

  double best = -1.0;
  std::size_t best_m = 1;
  for (std::size_t m = 1; m <= path.s.size(); ++m) {
    const double a = std::abs(path.s[m - 1]);
    if (a > best) {
      best = a;
      best_m = m;
    }
  }

  cusum_report rep;
  rep.gamma_hat_sq = path.gamma_hat_sq;
  rep.level = level;
  rep.t_stat = best / std::sqrt(path.gamma_hat_sq);
  rep.p_value = 1.0 - ks_cdf(rep.t_stat);
  rep.critical_value = ks_quantile(1.0 - level);
  rep.reject = rep.t_stat > rep.critical_value;
  rep.argmax_m = best_m;
  return rep;
}

}  // namespace volcp
