#include <doctest.h>

#include <cmath>
#include <vector>

#include "volcp/cusum.hpp"
#include "volcp/errors.hpp"

using namespace volcp;

TEST_CASE("cusum path matches the two increment worked example") {
  // d = (1/sqrt(2), 0): total = 1/2, partial sums (1/2, 0) scaled by 1/sqrt(2).
  const std::vector<double> d{1.0 / std::sqrt(2.0), 0.0};
  const auto path = cusum_path(d);
  REQUIRE(path.s.size() == 2);
  CHECK(path.s[0] == doctest::Approx(0.5 / std::sqrt(2.0)).epsilon(1e-14));
  CHECK(path.s[1] == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(path.gamma_hat_sq == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("cusum path ends at zero up to rounding") {
  std::vector<double> d(64);
  for (std::size_t i = 0; i < d.size(); ++i)
    d[i] = 0.1 * std::sin(1.0 + 3.7 * static_cast<double>(i));
  const auto path = cusum_path(d);
  CHECK(path.s.back() == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("constant volatility test accepts a flat deterministic grid") {
  // Alternating signs keep the increments non-degenerate while n d_i^2 is
  // constant, so every cusum term vanishes.
  std::vector<double> d(100);
  for (std::size_t i = 0; i < d.size(); ++i)
    d[i] = (i % 2 == 0 ? 0.1 : -0.1);
  const auto rep = test_constant_vol(d, 0.05);
  CHECK(rep.t_stat == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(!rep.reject);
  CHECK(rep.p_value == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rep.critical_value == doctest::Approx(1.3580986393225506).epsilon(1e-9));
}

TEST_CASE("constant volatility test rejects a deterministic variance shift") {
  const std::size_t n = 1000;
  std::vector<double> d(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double sigma_sq = i < n / 2 ? 1.0 : 2.0;
    d[i] = std::sqrt(sigma_sq / static_cast<double>(n));
  }
  const auto rep = test_constant_vol(d, 0.05);
  CHECK(rep.reject);
  CHECK(rep.argmax_m == n / 2);
  CHECK(rep.t_stat > 5.0);
  CHECK(rep.p_value < 1e-6);
}

TEST_CASE("constant volatility test flags degenerate quarticity") {
  const std::vector<double> d(10, 0.0);
  try {
    test_constant_vol(d, 0.05);
    CHECK(false);
  } catch (const error& e) {
    CHECK(e.code() == errc::degenerate_quarticity);
  }
  CHECK_THROWS_AS(test_constant_vol({0.1}, 0.05), error);
  CHECK_THROWS_AS(test_constant_vol({0.1, 0.1, 0.1}, 1.5), error);
}
