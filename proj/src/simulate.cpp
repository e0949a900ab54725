#include "volcp/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "volcp/errors.hpp"

namespace volcp {

double seasonal_shape(double t) {
  return 1.0 - 0.2 * std::sin(0.75 * M_PI * t);
}

namespace {

constexpr std::size_t kFbmGridCap = 5000;
constexpr double kSvScale = 0.1;      // c in the seasonal martingale
constexpr double kSvLeverage = 0.5;   // rho
constexpr double kFouRate = 0.1;      // mean reversion of log s~
constexpr double kFouNoise = 0.1;     // scale of dB^H

// Packed lower-triangular Cholesky factor of the unit-spacing fractional
// Gaussian noise covariance rho(d) = (|d+1|^2H - 2|d|^2H + |d-1|^2H)/2,
// cached per (count, hurst).
std::shared_ptr<const std::vector<double>> fbm_cholesky_factor(std::size_t m,
                                                               double hurst) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, double>,
                  std::shared_ptr<const std::vector<double>>>
      cache;
  const std::pair<std::size_t, double> key{m, hurst};
  {
    std::scoped_lock lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  const double h2 = 2.0 * hurst;
  std::vector<double> rho(m);
  for (std::size_t d = 0; d < m; ++d) {
    const double dd = static_cast<double>(d);
    const double up = std::pow(dd + 1.0, h2);
    const double mid = (d == 0) ? 0.0 : 2.0 * std::pow(dd, h2);
    const double down = (d == 0) ? std::pow(1.0, h2) : std::pow(dd - 1.0, h2);
    rho[d] = 0.5 * (up - mid + down);
  }

  auto factor = std::make_shared<std::vector<double>>(m * (m + 1) / 2);
  std::vector<double>& L = *factor;
  for (std::size_t i = 0; i < m; ++i) {
    double* Li = L.data() + i * (i + 1) / 2;
    for (std::size_t j = 0; j <= i; ++j) {
      const double* Lj = L.data() + j * (j + 1) / 2;
      double s = rho[i - j];
      for (std::size_t k = 0; k < j; ++k) s -= Li[k] * Lj[k];
      if (j == i) {
        if (!(s > 0.0) || !std::isfinite(s))
          fail(errc::cholesky_failure,
               "fractional covariance lost positive-definiteness at pivot " +
                   std::to_string(i) + " (hurst=" + std::to_string(hurst) +
                   ")");
        Li[j] = std::sqrt(s);
      } else {
        Li[j] = s / Lj[j];
      }
    }
  }

  std::scoped_lock lock(mu);
  auto [it, inserted] = cache.emplace(key, factor);
  return it->second;
}

}  // namespace

std::vector<double> fbm_increments(std::size_t count, double hurst,
                                   double mesh, rng& gen) {
  if (!(hurst > 0.0 && hurst < 1.0))
    fail(errc::domain_error, "hurst parameter must lie in (0,1)");
  if (!(mesh > 0.0)) fail(errc::domain_error, "mesh must be positive");
  if (count == 0) return {};
  if (count > kFbmGridCap)
    fail(errc::grid_too_large,
         "fractional grid of " + std::to_string(count) +
             " steps exceeds the Cholesky cap of " +
             std::to_string(kFbmGridCap));
  const auto factor = fbm_cholesky_factor(count, hurst);
  const std::vector<double>& L = *factor;

  std::vector<double> z(count);
  for (double& x : z) x = gen.normal();

  const double scale = std::pow(mesh, hurst);
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    const double* Li = L.data() + i * (i + 1) / 2;
    double s = 0.0;
    for (std::size_t k = 0; k <= i; ++k) s += Li[k] * z[k];
    out[i] = scale * s;
  }
  return out;
}

std::vector<double> simulate_fbm_cholesky(std::size_t n, double hurst,
                                          std::uint64_t seed) {
  if (n < 1) fail(errc::invalid_input, "fbm grid needs n >= 1");
  rng gen(seed);
  const std::vector<double> incr =
      fbm_increments(n, hurst, 1.0 / static_cast<double>(n), gen);
  std::vector<double> b(n + 1);
  b[0] = 0.0;
  for (std::size_t i = 0; i < n; ++i) b[i + 1] = b[i] + incr[i];
  return b;
}

std::vector<double> fou_logvol_from_noise(const std::vector<double>& noise,
                                          double mesh, double log_sigma0) {
  if (!(mesh > 0.0)) fail(errc::domain_error, "mesh must be positive");
  std::vector<double> out(noise.size() + 1);
  double ell = log_sigma0;
  out[0] = std::exp(ell);
  for (std::size_t i = 0; i < noise.size(); ++i) {
    ell = ell * (1.0 - kFouRate * mesh) + kFouNoise * noise[i];
    out[i + 1] = std::exp(ell);
  }
  return out;
}

std::vector<double> simulate_fou_logvol(std::size_t n, double hurst,
                                        std::uint64_t seed) {
  if (n < 1) fail(errc::invalid_input, "fou path needs n >= 1");
  rng gen(seed);
  const double mesh = 1.0 / static_cast<double>(n);
  const std::vector<double> noise = fbm_increments(n - 1, hurst, mesh, gen);
  const std::vector<double> tilde = fou_logvol_from_noise(noise, mesh, 0.0);
  std::vector<double> sigma(n);
  for (std::size_t i = 0; i < n; ++i)
    sigma[i] = tilde[i] * seasonal_shape(static_cast<double>(i) * mesh);
  return sigma;
}

namespace {

std::size_t snap_to_grid(double t, std::size_t n) {
  const long long idx = std::llround(t * static_cast<double>(n));
  if (idx < 1) return 1;
  if (idx > static_cast<long long>(n)) return n;
  return static_cast<std::size_t>(idx);
}

}  // namespace

std::vector<std::pair<std::size_t, double>> simulate_price_jumps(
    const jump_spec& spec, std::size_t n, std::uint64_t seed) {
  if (n < 1) fail(errc::invalid_input, "jump grid needs n >= 1");
  if (!(spec.variance >= 0.0))
    fail(errc::invalid_input, "jump size variance must be nonnegative");
  for (double t : spec.fixed_times)
    if (!(t > 0.0 && t < 1.0))
      fail(errc::invalid_input, "fixed jump times must lie in (0,1)");

  rng gen(seed);
  std::vector<std::pair<std::size_t, double>> jumps;
  jumps.reserve(spec.uniform_count + spec.fixed_times.size());
  for (std::size_t j = 0; j < spec.uniform_count; ++j)
    jumps.emplace_back(snap_to_grid(gen.uniform(), n), 0.0);
  for (double t : spec.fixed_times) jumps.emplace_back(snap_to_grid(t, n), 0.0);
  const double sd = std::sqrt(spec.variance);
  for (auto& [idx, size] : jumps) size = spec.mean + sd * gen.normal();
  std::stable_sort(jumps.begin(), jumps.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  return jumps;
}

namespace {

struct vol_builder {
  std::size_t n;
  double mesh;
  const std::vector<double>& dw;  // price Brownian increments, 1-based at i-1
  rng& aux;                       // volatility auxiliary stream

  std::vector<double> operator()(const constant_vol& m) const {
    if (!(m.sigma > 0.0) || !std::isfinite(m.sigma))
      fail(errc::invalid_input, "constant volatility must be positive finite");
    return std::vector<double>(n, m.sigma);
  }

  std::vector<double> operator()(const seasonal_sv&) const {
    std::vector<double> sigma(n);
    double mart = 0.0;
    const double ortho = std::sqrt(1.0 - kSvLeverage * kSvLeverage);
    const double root_mesh = std::sqrt(mesh);
    for (std::size_t i = 0; i < n; ++i) {
      sigma[i] = (1.0 + mart) * seasonal_shape(static_cast<double>(i) * mesh);
      if (i + 1 < n)
        mart += kSvScale *
                (kSvLeverage * dw[i + 1] + ortho * root_mesh * aux.normal());
    }
    return sigma;
  }

  std::vector<double> operator()(const fou_logvol& m) const {
    const std::vector<double> noise = fbm_increments(n - 1, m.hurst, mesh, aux);
    const std::vector<double> tilde = fou_logvol_from_noise(noise, mesh, 0.0);
    std::vector<double> sigma(n);
    for (std::size_t i = 0; i < n; ++i)
      sigma[i] = tilde[i] * seasonal_shape(static_cast<double>(i) * mesh);
    return sigma;
  }

  std::vector<double> operator()(const seasonal_then_fou& m) const {
    if (!(m.theta > 0.0 && m.theta < 1.0))
      fail(errc::invalid_input, "regime switch time must lie in (0,1)");
    const std::size_t s = static_cast<std::size_t>(
        std::ceil(m.theta * static_cast<double>(n)));
    std::vector<double> sigma(n);
    double mart = 0.0;
    const double ortho = std::sqrt(1.0 - kSvLeverage * kSvLeverage);
    const double root_mesh = std::sqrt(mesh);
    for (std::size_t i = 0; i < std::min(s, n); ++i) {
      sigma[i] = (1.0 + mart) * seasonal_shape(static_cast<double>(i) * mesh);
      mart += kSvScale *
              (kSvLeverage * dw[i + 1] + ortho * root_mesh * aux.normal());
    }
    // mart now holds M at grid point s; hand the level over continuously.
    if (s <= n - 1) {
      if (!(1.0 + mart > 0.0))
        fail(errc::domain_error,
             "seasonal martingale level makes log(1+M) undefined at switch");
      const std::vector<double> noise =
          fbm_increments(n - 1 - s, m.hurst, mesh, aux);
      const std::vector<double> tilde =
          fou_logvol_from_noise(noise, mesh, std::log(1.0 + mart));
      for (std::size_t i = s; i < n; ++i)
        sigma[i] = tilde[i - s] * seasonal_shape(static_cast<double>(i) * mesh);
    }
    return sigma;
  }

  std::vector<double> operator()(const piecewise_const& m) const {
    if (m.sigma.size() != m.breaks.size() + 1)
      fail(errc::invalid_input,
           "piecewise volatility needs one more level than breaks");
    for (std::size_t j = 0; j < m.breaks.size(); ++j) {
      if (!(m.breaks[j] > 0.0 && m.breaks[j] < 1.0))
        fail(errc::invalid_input, "piecewise breaks must lie in (0,1)");
      if (j > 0 && !(m.breaks[j] > m.breaks[j - 1]))
        fail(errc::invalid_input, "piecewise breaks must be increasing");
    }
    for (double s : m.sigma)
      if (!(s > 0.0) || !std::isfinite(s))
        fail(errc::invalid_input, "piecewise levels must be positive finite");
    std::vector<double> sigma(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double t = static_cast<double>(i) * mesh;
      const std::size_t j =
          std::upper_bound(m.breaks.begin(), m.breaks.end(), t) -
          m.breaks.begin();
      sigma[i] = m.sigma[j];
    }
    return sigma;
  }

  std::vector<double> operator()(const user_path& m) const {
    if (m.sigma.size() != n)
      fail(errc::invalid_input, "user volatility path must have length n");
    return m.sigma;
  }
};

}  // namespace

simulated_path simulate_ito(const path_scenario& scenario) {
  const std::size_t n = scenario.n;
  if (n < 2) fail(errc::invalid_input, "scenario needs n >= 2 increments");
  if (!std::isfinite(scenario.drift) || !std::isfinite(scenario.x0))
    fail(errc::invalid_input, "drift and x0 must be finite");
  if (scenario.vol_jump) {
    if (!(scenario.vol_jump->time > 0.0 && scenario.vol_jump->time < 1.0))
      fail(errc::invalid_input, "volatility jump time must lie in (0,1)");
    if (!std::isfinite(scenario.vol_jump->size))
      fail(errc::invalid_input, "volatility jump size must be finite");
  }

  const double mesh = 1.0 / static_cast<double>(n);
  rng price_stream(derive_seed(scenario.seed, 0));
  rng vol_stream(derive_seed(scenario.seed, 1));

  // dw[i] is the Brownian increment over ((i-1)/n, i/n], i = 1..n.
  std::vector<double> dw(n + 1, 0.0);
  const double root_mesh = std::sqrt(mesh);
  for (std::size_t i = 1; i <= n; ++i) dw[i] = root_mesh * price_stream.normal();

  std::vector<double> vol =
      std::visit(vol_builder{n, mesh, dw, vol_stream}, scenario.model);

  std::vector<double> change_points;
  if (const auto* sw = std::get_if<seasonal_then_fou>(&scenario.model))
    change_points.push_back(sw->theta);
  if (scenario.vol_jump) {
    for (std::size_t i = 0; i < n; ++i)
      if (static_cast<double>(i) * mesh >= scenario.vol_jump->time)
        vol[i] += scenario.vol_jump->size;
    change_points.push_back(scenario.vol_jump->time);
  }
  std::sort(change_points.begin(), change_points.end());

  for (std::size_t i = 0; i < n; ++i)
    if (!(vol[i] > 0.0) || !std::isfinite(vol[i]))
      fail(errc::domain_error,
           "volatility path is not strictly positive at grid index " +
               std::to_string(i));

  std::vector<double> jump_add(n + 1, 0.0);
  std::vector<std::size_t> jump_indices;
  if (scenario.price_jumps) {
    const auto jumps = simulate_price_jumps(*scenario.price_jumps, n,
                                            derive_seed(scenario.seed, 2));
    for (const auto& [idx, size] : jumps) {
      jump_add[idx] += size;
      if (jump_indices.empty() || jump_indices.back() != idx)
        jump_indices.push_back(idx);
    }
  }

  std::vector<double> x(n + 1);
  x[0] = scenario.x0;
  for (std::size_t i = 1; i <= n; ++i)
    x[i] = x[i - 1] + scenario.drift * mesh + vol[i - 1] * dw[i] + jump_add[i];

  return simulated_path{log_price_series(std::move(x)), std::move(vol),
                        std::move(jump_indices), std::move(change_points)};
}

path_scenario preset_scenario(const std::string& name, std::size_t n,
                              std::uint64_t seed) {
  path_scenario sc;
  sc.n = n;
  sc.seed = seed;
  sc.drift = 0.1;
  sc.x0 = 4.0;
  if (name == "sv-null") {
    sc.model = seasonal_sv{};
    sc.price_jumps = jump_spec{1, {}, 0.5, 0.1};
  } else if (name == "sv-jump") {
    sc.model = seasonal_sv{};
    sc.vol_jump = vol_jump_spec{2.0 / 3.0, 0.2};
    sc.price_jumps = jump_spec{1, {2.0 / 3.0}, 0.5, 0.1};
  } else if (name == "fou-null") {
    sc.model = fou_logvol{0.2};
    sc.price_jumps = jump_spec{1, {}, 0.5, 0.1};
  } else if (name == "fou-jump") {
    sc.model = fou_logvol{0.2};
    sc.vol_jump = vol_jump_spec{2.0 / 3.0, 0.2};
    sc.price_jumps = jump_spec{1, {2.0 / 3.0}, 0.5, 0.1};
  } else if (name == "global-null") {
    sc.model = seasonal_sv{};
  } else if (name == "global-alt") {
    sc.model = seasonal_then_fou{0.5, 0.15};
  } else {
    fail(errc::invalid_input,
         "unknown scenario '" + name +
             "' (expected sv-null, sv-jump, fou-null, fou-jump, global-null, "
             "global-alt)");
  }
  return sc;
}

std::size_t preset_default_k(std::size_t n) {
  if (n == 1000) return 275;
  if (n == 10000) return 500;
  return static_cast<std::size_t>(std::floor(std::sqrt(static_cast<double>(n))));
}

}  // namespace volcp
