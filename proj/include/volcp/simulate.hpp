#pragma once

// Seeded path generators for the Monte Carlo experiments:
//
//   price    X_{(i+1)d} = X_{id} + a*d + sigma_{id}*DW + jumps
//   seasonal sigma_t = (1 + M_t) * v_t,  dM = c*(rho dW + sqrt(1-rho^2) dW'),
//            c = 0.1, rho = 0.5, v_t = 1 - 0.2*sin(3/4 pi t)
//   fou      d(log s~) = -0.1 log s~ dt + 0.1 dB^H,  sigma_t = s~_t * v_t
//
// Fractional Brownian motion is generated by dense Cholesky factorization of
// the increment covariance (factor cached per (count, hurst), grid capped).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "volcp/rng.hpp"
#include "volcp/series.hpp"

namespace volcp {

// Deterministic seasonal profile v_t = 1 - 0.2*sin(3/4 pi t).
double seasonal_shape(double t);

struct constant_vol {
  double sigma = 1.0;
};

struct seasonal_sv {};

struct fou_logvol {
  double hurst = 0.2;
};

// Seasonal diffusion volatility until theta, fractional OU log-volatility
// after; spliced continuously via log s~_theta = log(1 + M_theta).
struct seasonal_then_fou {
  double theta = 0.5;
  double hurst = 0.15;
};

struct piecewise_const {
  std::vector<double> breaks;  // strictly increasing, inside (0,1)
  std::vector<double> sigma;   // one more entry than breaks
};

struct user_path {
  std::vector<double> sigma;  // left-endpoint values, length n
};

using vol_model = std::variant<constant_vol, seasonal_sv, fou_logvol,
                               seasonal_then_fou, piecewise_const, user_path>;

struct jump_spec {
  std::size_t uniform_count = 0;   // arrivals drawn uniformly on (0,1)
  std::vector<double> fixed_times; // additional deterministic arrival times
  double mean = 0.5;
  double variance = 0.1;
};

struct vol_jump_spec {
  double time = 2.0 / 3.0;  // inside (0,1)
  double size = 0.2;        // added to sigma from time onward
};

struct path_scenario {
  std::size_t n = 0;
  double drift = 0.0;
  double x0 = 0.0;
  vol_model model = constant_vol{};
  std::optional<vol_jump_spec> vol_jump;
  std::optional<jump_spec> price_jumps;
  std::uint64_t seed = 0;
};

struct simulated_path {
  log_price_series prices;
  std::vector<double> vol;                 // sigma_{id}, i = 0..n-1
  std::vector<std::size_t> jump_indices;   // 1-based increments with jumps
  std::vector<double> true_change_points;  // volatility change times
};

// Fractional Brownian increments over `count` steps of width `mesh`.
// Cholesky factor cached per (count, hurst); count capped at 5000.
std::vector<double> fbm_increments(std::size_t count, double hurst,
                                   double mesh, rng& gen);

// B^H at grid points i/n, i = 0..n (length n+1, starts at 0).
std::vector<double> simulate_fbm_cholesky(std::size_t n, double hurst,
                                          std::uint64_t seed);

// Euler recursion log s~_{i+1} = log s~_i * (1 - 0.1*mesh) + 0.1*noise[i];
// returns s~ at grid points 0..count (length count+1).
std::vector<double> fou_logvol_from_noise(const std::vector<double>& noise,
                                          double mesh, double log_sigma0);

// sigma_{id} = s~_{id} * v_{id} at left endpoints, length n.
std::vector<double> simulate_fou_logvol(std::size_t n, double hurst,
                                        std::uint64_t seed);

// (1-based increment index, jump size) pairs, sorted by index; arrivals are
// snapped to the nearest grid point.
std::vector<std::pair<std::size_t, double>> simulate_price_jumps(
    const jump_spec& spec, std::size_t n, std::uint64_t seed);

simulated_path simulate_ito(const path_scenario& scenario);

// Named experiment designs: sv-null, sv-jump, fou-null, fou-jump,
// global-null, global-alt.
path_scenario preset_scenario(const std::string& name, std::size_t n,
                              std::uint64_t seed);

// Block length the named experiments use: 275 at n=1000, 500 at n=10^4,
// floor(sqrt(n)) otherwise.
std::size_t preset_default_k(std::size_t n);

}  // namespace volcp
