// volcp: detect and localize volatility changes in high-frequency log-price
// series.
//
//   volcp test        one-shot change tests (parametric cusum, blockwise
//                     ratio test, quarticity cusum), --stat all for a panel
//   volcp estimate    iterative multiple change point localization
//   volcp simulate    synthetic paths from named scenarios
//   volcp montecarlo  replicated size/power studies with CSV tables
//
// Exit codes: 0 test ran (decision inside the report), 2 input or
// configuration error, 3 numeric or degenerate-data error.

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "volcp/blockstats.hpp"
#include "volcp/changepoint.hpp"
#include "volcp/csv.hpp"
#include "volcp/cusum.hpp"
#include "volcp/distributions.hpp"
#include "volcp/errors.hpp"
#include "volcp/global_test.hpp"
#include "volcp/local_test.hpp"
#include "volcp/parallel.hpp"
#include "volcp/report.hpp"
#include "volcp/rng.hpp"
#include "volcp/simulate.hpp"

namespace {

using volcp::json;

struct run_config {
  std::string input;
  std::string scenario;
  std::size_t n = 0;
  std::size_t k = 0;      // 0: default for the sample size
  std::size_t big_k = 0;  // 0: floor(sqrt(n))
  double level = 0.05;
  std::string trunc_c;    // "", "auto", or a positive number
  double trunc_u = 0.0;   // 0: unset; inf allowed
  bool jumps = false;
  std::size_t bootstrap_b = 0;  // 0: unset
  bool bootstrap_given = false;
  std::size_t reps = 0;
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::size_t r = 0;  // 0: min(4k, n/4)
  double regularity_a = 0.5;
  double lipschitz_l = 1.0;
  double c_diamond = 2.1;
  std::string out;
  std::string format;  // "": per-command default
  int workers = 0;     // 0: logical cores
  bool raw_prices = false;
  std::string stat = "parametric";
};

[[noreturn]] void config_error(const std::string& msg) {
  volcp::fail(volcp::errc::invalid_input, msg);
}

int resolve_workers(int workers) {
  if (workers > 0) return workers;
  const unsigned hc = std::thread::hardware_concurrency();
  return hc > 0 ? static_cast<int>(hc) : 1;
}

// Truncation request as given on the command line; "auto" resolves against
// each concrete sample, so Monte Carlo paths each get their own scale.
struct trunc_spec {
  bool any = false;
  bool explicit_u = false;
  double u = 0.0;
  bool auto_c = false;
  double c = 0.0;
};

trunc_spec parse_trunc_spec(const run_config& cfg) {
  trunc_spec spec;
  const bool have_u = cfg.trunc_u != 0.0;
  const bool have_c = !cfg.trunc_c.empty();
  if (have_u && have_c)
    config_error("--trunc-u and --trunc-c are mutually exclusive");
  if (have_u) {
    spec.any = true;
    spec.explicit_u = true;
    spec.u = cfg.trunc_u;
  } else if (have_c) {
    spec.any = true;
    if (cfg.trunc_c == "auto") {
      spec.auto_c = true;
    } else {
      char* end = nullptr;
      spec.c = std::strtod(cfg.trunc_c.c_str(), &end);
      if (end == cfg.trunc_c.c_str() || *end != '\0')
        config_error("--trunc-c expects a number or 'auto', got '" +
                     cfg.trunc_c + "'");
    }
  }
  return spec;
}

std::optional<volcp::truncation_rule> make_truncation(
    const trunc_spec& spec, const std::vector<double>& increments) {
  if (!spec.any) return std::nullopt;
  if (spec.explicit_u)
    return volcp::truncation_rule::explicit_threshold(spec.u);
  const double c =
      spec.auto_c ? volcp::default_truncation_c(increments) : spec.c;
  return volcp::truncation_rule::scaled(c);
}

json echo_truncation(const trunc_spec& spec,
                     const std::optional<volcp::truncation_rule>& rule,
                     std::size_t n) {
  if (!rule) return nullptr;
  json j;
  if (spec.explicit_u) {
    j["mode"] = "explicit_u";
    j["u"] = spec.u;
  } else {
    j["mode"] = "scaled";
    j["c"] = rule->c();
    j["c_source"] = spec.auto_c ? "auto" : "flag";
    j["threshold"] = rule->threshold(n);
  }
  return j;
}

// Loaded observations plus, for simulated input, the generating truth.
struct series_input {
  std::vector<double> increments;
  std::size_t n = 0;
  json source;  // config echo fragment
  std::vector<std::string> warnings;
  std::optional<volcp::simulated_path> sim;
};

series_input load_series(const run_config& cfg, bool allow_file) {
  const bool have_file = !cfg.input.empty();
  const bool have_scenario = !cfg.scenario.empty();
  if (have_file == have_scenario)
    config_error("exactly one of --input and --scenario is required");
  if (have_file && !allow_file)
    config_error("this command requires --scenario, not --input");
  series_input in;
  if (have_file) {
    if (cfg.n != 0) config_error("--n only applies with --scenario");
    volcp::csv_series csv = volcp::read_price_csv(cfg.input, cfg.raw_prices);
    in.increments = csv.series.increments();
    in.n = csv.series.n();
    in.warnings = csv.warnings;
    in.source = json{{"input", cfg.input},
                     {"n", in.n},
                     {"log_applied", csv.log_applied}};
  } else {
    if (cfg.n == 0) config_error("--n is required with --scenario");
    if (!cfg.seed_given)
      config_error("--seed is required with --scenario (or set VOLCP_SEED)");
    volcp::path_scenario sc =
        volcp::preset_scenario(cfg.scenario, cfg.n, cfg.seed);
    in.sim = volcp::simulate_ito(sc);
    in.increments = in.sim->prices.increments();
    in.n = cfg.n;
    in.source = json{{"scenario", cfg.scenario},
                     {"n", cfg.n},
                     {"seed", cfg.seed}};
  }
  return in;
}

json simulated_truth(const volcp::simulated_path& sim) {
  return json{{"jump_indices", sim.jump_indices},
              {"true_change_points", sim.true_change_points}};
}

void emit_text(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out)
    volcp::fail(volcp::errc::invalid_input,
                "cannot open output file: " + out_path);
  out << text;
  if (!out)
    volcp::fail(volcp::errc::invalid_input,
                "failed writing output file: " + out_path);
}

double elapsed_seconds(std::chrono::steady_clock::time_point start) {
  const auto dt = std::chrono::steady_clock::now() - start;
  return std::chrono::duration<double>(dt).count();
}

std::string resolved_format(const run_config& cfg, const char* fallback) {
  return cfg.format.empty() ? fallback : cfg.format;
}

// ---------------------------------------------------------------------------
// test

int cmd_test(const run_config& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const bool wants_local = cfg.stat == "local" || cfg.stat == "all";
  const bool wants_global = cfg.stat == "global" || cfg.stat == "global-ks" ||
                            cfg.stat == "all";
  const bool global_bootstrap = cfg.stat == "global" || cfg.stat == "all";
  const bool local_bootstrap = wants_local && cfg.bootstrap_given;
  const bool stochastic_test = local_bootstrap || (wants_global && global_bootstrap);
  if (!cfg.scenario.empty() || stochastic_test) {
    if (!cfg.seed_given)
      config_error("--seed is required (or set VOLCP_SEED): run uses "
                   "simulation or bootstrap resampling");
  }
  series_input in = load_series(cfg, true);
  const std::vector<double>& d = in.increments;
  const std::size_t n = in.n;

  const trunc_spec tspec = parse_trunc_spec(cfg);
  std::optional<volcp::truncation_rule> trunc = make_truncation(tspec, d);
  if (cfg.jumps && !trunc)
    config_error("--jumps set but no truncation configured; pass --trunc-c "
                 "(e.g. --trunc-c auto) or --trunc-u so jump increments are "
                 "filtered");
  // The combined panel always truncates the blockwise test; fall back to the
  // data-driven scale when no rule was given.
  trunc_spec local_tspec = tspec;
  std::optional<volcp::truncation_rule> local_trunc = trunc;
  if (cfg.stat == "all" && !local_trunc) {
    local_tspec.any = true;
    local_tspec.auto_c = true;
    local_trunc = make_truncation(local_tspec, d);
  }

  json config{{"command", "test"},
              {"stat", cfg.stat},
              {"source", in.source},
              {"level", cfg.level},
              {"workers", resolve_workers(cfg.workers)},
              {"truncation", echo_truncation(tspec, trunc, n)}};
  json results;
  std::vector<std::string> warnings = in.warnings;

  if (cfg.stat == "parametric" || cfg.stat == "all")
    results["parametric"] = volcp::test_constant_vol(d, cfg.level);

  if (wants_local) {
    volcp::local_test_config lc;
    lc.block.k = cfg.k != 0 ? cfg.k : volcp::preset_default_k(n);
    lc.block.truncation = local_trunc;
    lc.level = cfg.level;
    lc.workers = resolve_workers(cfg.workers);
    if (local_bootstrap) {
      lc.source = volcp::critical_source::bootstrap;
      lc.bootstrap_b = cfg.bootstrap_b;
      lc.seed = volcp::derive_seed(cfg.seed, 1);
    }
    if (auto w = volcp::validate_block_config(n, lc.block.k))
      warnings.push_back(*w);
    results["local"] = volcp::test_vol_jump(d, lc);
    config["local"] =
        json{{"k", lc.block.k},
             {"critical_source",
              local_bootstrap ? "bootstrap" : "limit_law"},
             {"truncation", echo_truncation(local_tspec, local_trunc, n)}};
    if (local_bootstrap) config["local"]["bootstrap_b"] = cfg.bootstrap_b;
  }

  if (wants_global) {
    volcp::global_test_config gc;
    gc.big_k = cfg.big_k;
    gc.mode = global_bootstrap ? volcp::global_mode::bootstrap
                               : volcp::global_mode::standardized_ks;
    gc.level = cfg.level;
    gc.workers = resolve_workers(cfg.workers);
    gc.truncation = trunc;
    if (global_bootstrap) {
      gc.bootstrap_b = cfg.bootstrap_b != 0 ? cfg.bootstrap_b : 2000;
      gc.seed = volcp::derive_seed(cfg.seed, 2);
    }
    results["global"] = volcp::run_global_test(d, gc);
    config["global"] = json{
        {"mode", global_bootstrap ? "bootstrap" : "standardized_ks"},
        {"K", cfg.big_k != 0
                  ? cfg.big_k
                  : static_cast<std::size_t>(std::floor(std::sqrt(
                        static_cast<double>(n))))}};
    if (global_bootstrap) config["global"]["bootstrap_b"] = gc.bootstrap_b;
  }

  if (in.sim) results["simulated_truth"] = simulated_truth(*in.sim);
  if (cfg.seed_given) config["seed"] = cfg.seed;

  json doc = volcp::make_envelope("test", config, results, warnings,
                                  elapsed_seconds(start));
  volcp::write_report(doc, cfg.out);
  return 0;
}

// ---------------------------------------------------------------------------
// estimate

int cmd_estimate(const run_config& cfg) {
  const auto start = std::chrono::steady_clock::now();
  series_input in = load_series(cfg, true);
  const std::vector<double>& d = in.increments;
  const std::size_t n = in.n;

  const trunc_spec tspec = parse_trunc_spec(cfg);
  std::optional<volcp::truncation_rule> trunc = make_truncation(tspec, d);
  if (cfg.jumps && !trunc)
    config_error("--jumps set but no truncation configured; pass --trunc-c "
                 "(e.g. --trunc-c auto) or --trunc-u so jump increments are "
                 "filtered");

  volcp::local_test_config lc;
  lc.block.k = cfg.k;  // 0 delegates to the self-selected bandwidth
  lc.block.truncation = trunc;
  lc.regularity_a = cfg.regularity_a;
  lc.lipschitz_l = cfg.lipschitz_l;
  lc.c_diamond = cfg.c_diamond;

  std::size_t r = cfg.r;
  if (r == 0) {
    // Default exclusion radius: 4k, capped by the n/4 precondition.  The
    // bandwidth-selected k is not known here, so resolve it the same way
    // detect_multiple will.
    std::size_t k = cfg.k;
    if (k == 0)
      k = volcp::psi_diamond_bandwidth(n, cfg.regularity_a, cfg.lipschitz_l).k;
    r = std::min(4 * k, n / 4);
  }

  volcp::change_point_result res = volcp::detect_multiple(d, lc, r);

  json config{{"command", "estimate"},
              {"source", in.source},
              {"k", res.k},
              {"r", r},
              {"regularity_a", cfg.regularity_a},
              {"lipschitz_l", cfg.lipschitz_l},
              {"c_diamond", cfg.c_diamond},
              {"truncation", echo_truncation(tspec, trunc, n)}};
  if (cfg.seed_given) config["seed"] = cfg.seed;

  const std::string format = resolved_format(cfg, "json");
  if (format == "csv") {
    std::string text = "change_index,change_time\n";
    for (std::size_t i = 0; i < res.theta_hats.size(); ++i)
      text += volcp::csv_row({static_cast<double>(res.change_indices[i]),
                              res.theta_hats[i]}) +
              "\n";
    emit_text(cfg.out, text);
    return 0;
  }

  json results{{"detection", res}};
  if (in.sim) results["simulated_truth"] = simulated_truth(*in.sim);
  json doc = volcp::make_envelope("estimate", config, results, in.warnings,
                                  elapsed_seconds(start));
  volcp::write_report(doc, cfg.out);
  return 0;
}

// ---------------------------------------------------------------------------
// simulate

int cmd_simulate(const run_config& cfg) {
  const auto start = std::chrono::steady_clock::now();
  series_input in = load_series(cfg, false);
  const volcp::simulated_path& sim = *in.sim;
  const std::size_t n = in.n;
  const std::vector<double>& x = sim.prices.values();

  const std::string format = resolved_format(cfg, "csv");
  if (format == "csv") {
    std::string text = "time,logprice,vol\n";
    for (std::size_t i = 0; i <= n; ++i) {
      const double t = static_cast<double>(i) / static_cast<double>(n);
      const double v = sim.vol[std::min(i, n - 1)];
      text += volcp::csv_row({t, x[i], v}) + "\n";
    }
    emit_text(cfg.out, text);
    return 0;
  }

  json config{{"command", "simulate"}, {"source", in.source}};
  json results{{"logprice", x},
               {"vol", sim.vol},
               {"jump_indices", sim.jump_indices},
               {"true_change_points", sim.true_change_points}};
  json doc = volcp::make_envelope("simulate", config, results, in.warnings,
                                  elapsed_seconds(start));
  volcp::write_report(doc, cfg.out);
  return 0;
}

// ---------------------------------------------------------------------------
// montecarlo

enum class mc_stat { parametric, local, local_bootstrap, global_boot, global_ks };

mc_stat parse_mc_stat(const std::string& s) {
  if (s == "parametric") return mc_stat::parametric;
  if (s == "local") return mc_stat::local;
  if (s == "local-bootstrap") return mc_stat::local_bootstrap;
  if (s == "global") return mc_stat::global_boot;
  if (s == "global-ks") return mc_stat::global_ks;
  config_error("--stat for montecarlo must be one of parametric, local, "
               "local-bootstrap, global, global-ks; got '" + s + "'");
}

int cmd_montecarlo(const run_config& cfg) {
  const auto start = std::chrono::steady_clock::now();
  const mc_stat stat = parse_mc_stat(cfg.stat);
  if (cfg.scenario.empty())
    config_error("montecarlo requires --scenario");
  if (!cfg.input.empty())
    config_error("montecarlo takes --scenario, not --input");
  if (cfg.n == 0) config_error("--n is required with --scenario");
  if (cfg.reps == 0) config_error("--reps is required for montecarlo");
  if (!cfg.seed_given)
    config_error("--seed is required for montecarlo (or set VOLCP_SEED)");

  const std::size_t n = cfg.n;
  const std::size_t reps = cfg.reps;
  const trunc_spec tspec = parse_trunc_spec(cfg);
  if (cfg.jumps && !tspec.any)
    config_error("--jumps set but no truncation configured; pass --trunc-c "
                 "(e.g. --trunc-c auto) or --trunc-u so jump increments are "
                 "filtered");
  const std::size_t k = cfg.k != 0 ? cfg.k : volcp::preset_default_k(n);
  const std::size_t eff_big_k =
      cfg.big_k != 0 ? cfg.big_k
                     : static_cast<std::size_t>(
                           std::floor(std::sqrt(static_cast<double>(n))));
  const std::size_t boot_b = cfg.bootstrap_b != 0 ? cfg.bootstrap_b
                             : (stat == mc_stat::global_boot ? 2000 : 1000);
  const int workers = resolve_workers(cfg.workers);
  const std::uint64_t path_stream = volcp::derive_seed(cfg.seed, 0);
  const std::uint64_t aux_stream = volcp::derive_seed(cfg.seed, 1);

  const bool per_rep_critical =
      stat == mc_stat::local_bootstrap || stat == mc_stat::global_boot;
  const bool has_limit_law = stat != mc_stat::global_boot;

  std::vector<double> stats(reps, 0.0);
  std::vector<unsigned char> rejected(reps, 0);  // per-rep critical only

  volcp::parallel_for(
      static_cast<std::int64_t>(reps), workers, [&](std::int64_t rep) {
        const std::uint64_t path_seed =
            volcp::derive_seed(path_stream, static_cast<std::uint64_t>(rep));
        volcp::path_scenario sc =
            volcp::preset_scenario(cfg.scenario, n, path_seed);
        volcp::simulated_path sim = volcp::simulate_ito(sc);
        const std::vector<double> d = sim.prices.increments();
        const auto trunc = make_truncation(tspec, d);
        switch (stat) {
          case mc_stat::parametric: {
            stats[rep] = volcp::test_constant_vol(d, cfg.level).t_stat;
            break;
          }
          case mc_stat::local:
          case mc_stat::local_bootstrap: {
            const std::size_t m = n / k;
            volcp::block_config bc;
            bc.k = k;
            bc.truncation = trunc;
            const auto v = volcp::v_stat_overlap(d, bc);
            stats[rep] = volcp::rescale_overlap(v.value, k, m);
            if (stat == mc_stat::local_bootstrap) {
              volcp::local_test_config lc;
              lc.block.k = k;
              lc.block.truncation = trunc;
              lc.level = cfg.level;
              lc.source = volcp::critical_source::bootstrap;
              lc.bootstrap_b = boot_b;
              lc.seed = volcp::derive_seed(aux_stream,
                                           static_cast<std::uint64_t>(rep));
              lc.workers = 1;
              const double crit = volcp::wild_bootstrap_critical_value(d, lc);
              rejected[rep] = stats[rep] > crit ? 1 : 0;
            }
            break;
          }
          case mc_stat::global_boot: {
            volcp::global_test_config gc;
            gc.big_k = eff_big_k;
            gc.bootstrap_b = boot_b;
            gc.mode = volcp::global_mode::bootstrap;
            gc.level = cfg.level;
            gc.seed = volcp::derive_seed(aux_stream,
                                         static_cast<std::uint64_t>(rep));
            gc.workers = 1;
            if (trunc) gc.truncation = trunc;
            const auto rep_result = volcp::psi_dagger(d, gc);
            stats[rep] = rep_result.scaled_stat;
            rejected[rep] = rep_result.reject ? 1 : 0;
            break;
          }
          case mc_stat::global_ks: {
            std::vector<double> dd = d;
            if (trunc) {
              const double u = trunc->threshold(n);
              for (double& v : dd)
                if (std::abs(v) > u) v = 0.0;
            }
            stats[rep] = volcp::standardized_vbar(dd, eff_big_k).scaled;
            break;
          }
        }
      });

  // Size/power rows.  Limit-law statistics are tabulated on a standard level
  // grid; bootstrap statistics carry one decision per replication at the
  // configured level.
  std::vector<double> levels;
  if (per_rep_critical) {
    levels = {cfg.level};
  } else {
    levels = {0.01, 0.05, 0.10};
    if (std::find(levels.begin(), levels.end(), cfg.level) == levels.end())
      levels.push_back(cfg.level);
    std::sort(levels.begin(), levels.end());
  }
  auto limit_quantile = [&](double level) {
    switch (stat) {
      case mc_stat::parametric:
      case mc_stat::global_ks:
        return volcp::ks_quantile(1.0 - level);
      default:
        return volcp::ev_quantile(1.0 - level);
    }
  };
  auto limit_cdf = [&](double x) {
    switch (stat) {
      case mc_stat::parametric:
      case mc_stat::global_ks:
        return volcp::ks_cdf(x);
      default:
        return volcp::ev_cdf(x);
    }
  };

  struct rate_row {
    double level;
    std::size_t rejections;
    double rate;
  };
  std::vector<rate_row> rates;
  for (double level : levels) {
    std::size_t count = 0;
    if (per_rep_critical) {
      for (unsigned char f : rejected) count += f;
    } else {
      const double q = limit_quantile(level);
      for (double s : stats)
        if (s > q) ++count;
    }
    rates.push_back({level, count,
                     static_cast<double>(count) / static_cast<double>(reps)});
  }

  std::vector<double> sorted = stats;
  std::sort(sorted.begin(), sorted.end());

  json config{{"command", "montecarlo"},
              {"stat", cfg.stat},
              {"scenario", cfg.scenario},
              {"n", n},
              {"reps", reps},
              {"k", k},
              {"K", eff_big_k},
              {"level", cfg.level},
              {"seed", cfg.seed},
              {"workers", workers}};
  if (tspec.any) {
    config["truncation"] =
        tspec.explicit_u
            ? json{{"mode", "explicit_u"}, {"u", tspec.u}}
            : json{{"mode", "scaled"},
                   {"c_source", tspec.auto_c ? "auto" : "flag"}};
    if (!tspec.auto_c && !tspec.explicit_u) config["truncation"]["c"] = tspec.c;
  }
  if (per_rep_critical) config["bootstrap_b"] = boot_b;

  const std::string format = resolved_format(cfg, "csv");
  if (format == "csv") {
    std::string text = "level,rejections,reps,rate\n";
    for (const rate_row& row : rates)
      text += volcp::csv_row({row.level, static_cast<double>(row.rejections),
                              static_cast<double>(reps), row.rate}) +
              "\n";
    if (has_limit_law) {
      text += "\nquantile,empirical,limit\n";
      for (std::size_t i = 0; i < sorted.size(); ++i) {
        const double emp = static_cast<double>(i + 1) /
                           static_cast<double>(sorted.size());
        text += volcp::csv_row({sorted[i], emp, limit_cdf(sorted[i])}) + "\n";
      }
    }
    emit_text(cfg.out, text);
    return 0;
  }

  json jrates = json::array();
  for (const rate_row& row : rates)
    jrates.push_back(json{{"level", row.level},
                          {"rejections", row.rejections},
                          {"reps", reps},
                          {"rate", row.rate}});
  json results{{"rates", jrates}};
  if (has_limit_law) {
    json quantile = json::array();
    json empirical = json::array();
    json limit = json::array();
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      quantile.push_back(sorted[i]);
      empirical.push_back(static_cast<double>(i + 1) /
                          static_cast<double>(sorted.size()));
      limit.push_back(limit_cdf(sorted[i]));
    }
    results["cdf"] = json{{"quantile", quantile},
                          {"empirical", empirical},
                          {"limit", limit}};
  }
  json doc = volcp::make_envelope("montecarlo", config, results, {},
                                  elapsed_seconds(start));
  volcp::write_report(doc, cfg.out);
  return 0;
}

// ---------------------------------------------------------------------------

void add_common_options(CLI::App* cmd, run_config& cfg) {
  cmd->add_option("--input", cfg.input, "CSV file: time,price or time,logprice");
  cmd->add_option("--scenario", cfg.scenario,
                  "named scenario: sv-null, sv-jump, fou-null, fou-jump, "
                  "global-null, global-alt");
  cmd->add_option("--n", cfg.n, "grid size for --scenario");
  cmd->add_option("--k", cfg.k, "block length (0: pick a default)");
  cmd->add_option("--K", cfg.big_k, "spot variance window (0: floor(sqrt(n)))");
  cmd->add_option("--level", cfg.level, "test level in (0,1)")
      ->check(CLI::Range(1e-6, 1.0 - 1e-6));
  cmd->add_option("--trunc-c", cfg.trunc_c,
                  "truncation scale C (number or 'auto')");
  cmd->add_option("--trunc-u", cfg.trunc_u,
                  "explicit truncation threshold (inf allowed)");
  cmd->add_flag("--jumps", cfg.jumps,
                "declare that the input contains price jumps; requires a "
                "truncation flag");
  cmd->add_option("--bootstrap", cfg.bootstrap_b, "bootstrap replications")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--seed", cfg.seed, "RNG seed")->envname("VOLCP_SEED");
  cmd->add_option("--out", cfg.out, "output path (default: stdout)");
  cmd->add_option("--format", cfg.format, "output format")
      ->check(CLI::IsMember({"json", "csv"}));
  cmd->add_option("--workers", cfg.workers,
                  "worker threads (0: logical cores)");
  cmd->add_flag("--raw-prices", cfg.raw_prices,
                "force taking logs of the value column");
}

}  // namespace

int main(int argc, char** argv) {
  run_config cfg;
  CLI::App app{"volatility change detection for high-frequency prices"};
  app.require_subcommand(1);

  CLI::App* test = app.add_subcommand("test", "run change tests");
  add_common_options(test, cfg);
  test->add_option("--stat", cfg.stat,
                   "parametric, local, global, global-ks, or all");

  CLI::App* estimate =
      app.add_subcommand("estimate", "localize multiple change points");
  add_common_options(estimate, cfg);
  estimate->add_option("--r", cfg.r, "exclusion radius (default min(4k, n/4))");
  estimate->add_option("--a", cfg.regularity_a,
                       "vol regularity exponent in (0,1]");
  estimate->add_option("--L", cfg.lipschitz_l, "vol envelope constant");
  estimate->add_option("--c-diamond", cfg.c_diamond,
                       "threshold constant, > 2");

  CLI::App* simulate =
      app.add_subcommand("simulate", "generate a scenario path");
  add_common_options(simulate, cfg);

  CLI::App* montecarlo =
      app.add_subcommand("montecarlo", "replicated size/power study");
  add_common_options(montecarlo, cfg);
  montecarlo->add_option("--reps", cfg.reps, "Monte Carlo replications");
  montecarlo->add_option(
      "--stat", cfg.stat,
      "parametric, local, local-bootstrap, global, or global-ks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  cfg.seed_given = false;
  for (CLI::App* sub : {test, estimate, simulate, montecarlo})
    if (sub->parsed() && sub->count("--seed") > 0) cfg.seed_given = true;

  try {
    if (test->parsed()) {
      if (cfg.stat != "parametric" && cfg.stat != "local" &&
          cfg.stat != "global" && cfg.stat != "global-ks" && cfg.stat != "all")
        config_error("--stat must be parametric, local, global, global-ks, "
                     "or all; got '" + cfg.stat + "'");
      cfg.bootstrap_given = test->count("--bootstrap") > 0;
      return cmd_test(cfg);
    }
    if (estimate->parsed()) return cmd_estimate(cfg);
    if (simulate->parsed()) return cmd_simulate(cfg);
    if (montecarlo->parsed()) {
      cfg.bootstrap_given = montecarlo->count("--bootstrap") > 0;
      return cmd_montecarlo(cfg);
    }
    return 2;
  } catch (const volcp::error& e) {
    std::cerr << "error (" << volcp::errc_name(e.code()) << "): " << e.what()
              << '\n';
    switch (e.code()) {
      case volcp::errc::invalid_input:
      case volcp::errc::block_too_small:
      case volcp::errc::block_too_large:
      case volcp::errc::window_too_large:
        return 2;
      default:
        return 3;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
}
