#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <numeric>
#include <sstream>

#include "htldp/brute_force.hpp"
#include "htldp/csv.hpp"
#include "htldp/errors.hpp"
#include "htldp/experiments.hpp"
#include "htldp/parallel.hpp"
#include "htldp/record_io.hpp"
#include "htldp/semicircle.hpp"
#include "htldp/spike.hpp"
#include "htldp/svg.hpp"
#include "htldp/variational.hpp"

namespace htldp::cli {

namespace fs = std::filesystem;

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

fs::path out_dir(const json& cfg) {
  fs::path dir = get_string(cfg, "out", ".");
  fs::create_directories(dir);
  return dir;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
}

void write_table(const fs::path& path, const CsvTable& table) {
  std::ostringstream os;
  write_csv(os, table);
  write_text(path, os.str());
}

void write_svg(const fs::path& path, const SvgPlot& plot) {
  std::ostringstream os;
  plot.write(os);
  write_text(path, os.str());
}

std::uint64_t seed_of(const json& cfg) { return static_cast<std::uint64_t>(get_int(cfg, "seed", 1)); }

unsigned threads_of(const json& cfg) { return resolve_threads(static_cast<unsigned>(get_int(cfg, "threads", 0))); }

std::size_t positive(const json& cfg, const char* key, std::int64_t fallback) {
  const auto v = get_int(cfg, key, fallback);
  if (v < 1) throw ValidationError(std::string(key) + " must be positive");
  return static_cast<std::size_t>(v);
}

std::vector<std::size_t> size_grid(const json& cfg, const char* key, const std::string& fallback) {
  std::vector<std::size_t> out;
  for (double v : get_grid(cfg, key, fallback)) {
    if (!(v >= 1.0) || v != std::floor(v)) throw ValidationError(std::string(key) + " must hold positive integers");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

double mean_of(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size()); }

double sd_of(const std::vector<double>& v) {
  if (v.size() < 2) return 0.0;
  const double m = mean_of(v);
  double s = 0.0;
  for (double x : v) s += (x - m) * (x - m);
  return std::sqrt(s / static_cast<double>(v.size() - 1));
}

double median_of(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

// Keys that steer execution but never change results.
json result_config(json cfg) {
  for (const char* k : {"out", "threads", "dry_run", "timing", "config"}) cfg.erase(k);
  return cfg;
}

}  // namespace

int cmd_rate(const json& cfg, std::ostream& out) {
  const TailParams params = params_from(cfg);
  double c = get_real(cfg, "c", kNaN);
  std::string label = "override";
  if (std::isnan(c)) {
    try {
      const auto cf = closed_form_c(params);
      c = cf.c;
      label = cf.case_label;
    } catch (const UnsupportedConfiguration& e) {
      throw ValidationError(std::string(e.what()) + "; pass --c to set the constant");
    }
  }
  const RateFunctionParams rp{params.alpha, c};
  rp.validate();
  const auto xs = get_grid(cfg, "x_grid", "1.5:6:181");

  CsvTable table;
  table.header = {"x", "J"};
  SvgSeries curve{"J(x), c = " + format_real(c), {}, {}, false};
  SvgSeries edge{"J(2) = 0", {2.0}, {0.0}, true};
  for (double x : xs) {
    const double J = rate_J(x, rp);
    table.add_row({format_real(x), format_real(J)});
    if (x > 2.0) {
      curve.x.push_back(x);
      curve.y.push_back(J);
    }
  }
  const fs::path dir = out_dir(cfg);
  write_table(dir / "rate.csv", table);
  SvgPlot plot;
  plot.title = "Rate function of the largest eigenvalue (alpha = " + format_real(params.alpha) + ")";
  plot.x_label = "x";
  plot.y_label = "J(x)";
  plot.series = {curve, edge};
  write_svg(dir / "rate.svg", plot);

  out << "# c = " << format_real(c) << " (case " << label << ")\n";
  write_csv(out, table);
  return kExitOk;
}

int cmd_solve_c(const json& cfg, std::ostream& out) {
  const TailParams params = params_from(cfg);
  const auto max_n = get_int(cfg, "oracle", 0);
  json report;
  report["params"] = params;

  std::optional<ClosedFormResult> cf;
  try {
    cf = closed_form_c(params);
    report["closed_form"] = {{"c", cf->c}, {"case", cf->case_label},
                             {"witness", witness_report(cf->witness, params, cf->case_label)}};
  } catch (const UnsupportedConfiguration& e) {
    if (max_n == 0) throw ValidationError(std::string(e.what()) + "; pass --oracle to search numerically");
    report["closed_form"] = nullptr;
    report["unsupported"] = e.what();
  }

  int code = kExitOk;
  if (max_n != 0) {
    BruteForceBudget budget;
    budget.restarts = static_cast<int>(get_int(cfg, "restarts", budget.restarts));
    budget.max_patterns = static_cast<std::size_t>(get_int(cfg, "max_patterns", static_cast<std::int64_t>(budget.max_patterns)));
    budget.threads = threads_of(cfg);
    const auto bf = brute_force_c(params, static_cast<int>(max_n), seed_of(cfg), budget);
    report["brute_force"] = {{"c", bf.c}, {"max_n", max_n}, {"argmin", witness_report(bf.argmin, params, "search")},
                             {"patterns", bf.patterns}, {"local_searches", bf.local_searches}};
    if (cf) {
      const double rel = std::abs(bf.c - cf->c) / cf->c;
      report["relative_gap"] = rel;
      report["agree"] = rel <= 1e-3;
      if (rel > 1e-3) code = kExitDisagreement;
    }
  }
  write_text(out_dir(cfg) / "solve_c.json", report.dump(2) + "\n");
  out << report.dump(2) << "\n";
  return code;
}

int cmd_bbp(const json& cfg, std::ostream& out) {
  const EntrySampler sampler = sampler_from(cfg, "rademacher");
  const auto thetas = get_grid(cfg, "theta_grid", "0.5,1,1.5,2,3");
  const std::size_t n = positive(cfg, "n", 1000);
  const std::size_t trials = positive(cfg, "trials", 10);
  const std::string plant = get_string(cfg, "plant", "diag");
  PlantOptions options;
  if (plant == "diag") {
    options.kind = PlantKind::Diagonal;
  } else if (plant == "offdiag") {
    options.kind = PlantKind::OffDiagonal;
  } else {
    throw ValidationError("plant must be diag or offdiag");
  }
  options.truncate = get_bool(cfg, "truncate", true);
  const std::uint64_t seed = seed_of(cfg);
  const unsigned threads = threads_of(cfg);

  CsvTable table;
  table.header = {"theta", "mean_lambda", "sd_lambda", "reference", "trials"};
  SvgSeries emp{"empirical mean of lambda_max", {}, {}, true};
  for (std::size_t k = 0; k < thetas.size(); ++k) {
    const auto samples = planted_spike_run(n, thetas[k], sampler, trials, splitmix64(seed + k), options, threads);
    const double m = mean_of(samples);
    table.add_row({format_real(thetas[k]), format_real(m), format_real(sd_of(samples)),
                   format_real(bbp_outlier(thetas[k])), std::to_string(trials)});
    emp.x.push_back(thetas[k]);
    emp.y.push_back(m);
  }
  SvgSeries ref{"theta + 1/theta above 1, else 2", {}, {}, false};
  const double lo = *std::min_element(thetas.begin(), thetas.end());
  const double hi = *std::max_element(thetas.begin(), thetas.end());
  for (int i = 0; i <= 200; ++i) {
    const double t = lo + (hi - lo) * i / 200.0;
    ref.x.push_back(t);
    ref.y.push_back(bbp_outlier(t));
  }
  const fs::path dir = out_dir(cfg);
  write_table(dir / "bbp.csv", table);
  SvgPlot plot;
  plot.title = "Planted spike sweep, N = " + std::to_string(n);
  plot.x_label = "theta";
  plot.y_label = "lambda_max";
  plot.series = {ref, emp};
  write_svg(dir / "bbp.svg", plot);
  write_csv(out, table);
  return kExitOk;
}

int cmd_tail(const json& cfg, std::ostream& out) {
  const json resolved = resolved_model(cfg, "weibull");
  const EntrySampler sampler = sampler_from(resolved, "weibull");
  const auto ns = size_grid(cfg, "n_grid", "100,200,400");
  const auto xs = get_grid(cfg, "x_grid", "2.1,2.3,2.5");
  const std::size_t trials = positive(cfg, "trials", 200);
  const double x_slope = get_real(cfg, "x_slope", xs.front());
  const std::uint64_t seed = seed_of(cfg);

  json record_cfg = result_config(resolved);
  record_cfg["n_grid"] = ns;
  record_cfg["x_grid"] = xs;
  record_cfg["trials"] = trials;
  record_cfg["seed"] = seed;
  record_cfg["x_slope"] = x_slope;

  if (get_bool(cfg, "dry_run", false)) {
    out << "# dry run: configuration is valid, nothing written\n" << record_cfg.dump(2) << "\n";
    return kExitOk;
  }

  const unsigned threads = threads_of(cfg);
  const fs::path dir = out_dir(cfg);
  CsvTable summary;
  summary.header = {"N", "x", "p_hat", "ci_low", "ci_high", "hits", "trials"};
  std::vector<SlopePoint> slope_points;
  json timing = json::object();
  for (std::size_t n : ns) {
    const auto start = std::chrono::steady_clock::now();
    const ExperimentRecord rec = run_tail_record(record_cfg, seed, n, xs, trials, sampler, threads);
    timing["N" + std::to_string(n)] = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const std::string tag = "N" + std::to_string(n);
    write_text(dir / ("record_" + tag + ".json"), record_to_json(rec).dump(2) + "\n");
    write_table(dir / ("estimates_" + tag + ".csv"), estimates_table(rec));
    write_table(dir / ("samples_" + tag + ".csv"), samples_table(rec));
    for (const auto& e : rec.tail_estimates) {
      summary.add_row({std::to_string(n), format_real(e.x), format_real(e.p_hat), format_real(e.ci_low),
                       format_real(e.ci_high), std::to_string(e.hits), std::to_string(e.trials)});
    }
    slope_points.push_back({n, tail_from_samples(rec.lambda_samples, x_slope).p_hat});
  }
  write_table(dir / "summary.csv", summary);

  json slope = {{"x", x_slope}};
  try {
    double c = get_real(cfg, "c", kNaN);
    if (std::isnan(c)) c = closed_form_c(sampler.params()).c;
    const auto s = rate_slope_summary(slope_points, sampler.params().alpha, x_slope, c);
    slope["estimable"] = true;
    slope["slope"] = s.slope;
    slope["intercept"] = s.intercept;
    slope["points"] = s.points;
    slope["J_reference"] = std::isinf(s.J_reference) ? json("inf") : json(s.J_reference);
    slope["c"] = c;
  } catch (const NotEstimable& e) {
    slope["estimable"] = false;
    slope["reason"] = e.what();
  } catch (const UnsupportedConfiguration& e) {
    slope["estimable"] = false;
    slope["reason"] = std::string(e.what()) + "; pass --c for the reference value";
  }
  write_text(dir / "slope.json", slope.dump(2) + "\n");
  if (get_bool(cfg, "timing", false)) write_text(dir / "timing.json", timing.dump(2) + "\n");

  write_csv(out, summary);
  out << "# slope " << slope.dump() << "\n";
  return kExitOk;
}

int cmd_isotropy(const json& cfg, std::ostream& out) {
  const EntrySampler sampler = sampler_from(cfg, "rademacher");
  const auto ns = size_grid(cfg, "n_grid", "200,1000");
  const double x = get_real(cfg, "x", 3.0);
  const std::size_t seeds = positive(cfg, "seeds", 10);
  const std::string overlap = get_string(cfg, "overlap", "orthogonal");
  if (overlap != "orthogonal" && overlap != "equal") throw ValidationError("overlap must be orthogonal or equal");
  const std::uint64_t seed = seed_of(cfg);
  const unsigned threads = threads_of(cfg);

  CsvTable table;
  table.header = {"N", "seed_index", "gap"};
  CsvTable summary;
  summary.header = {"N", "median_gap", "max_gap"};
  for (std::size_t n : ns) {
    if (n < 2) throw ValidationError("isotropy needs N >= 2");
    std::vector<double> gaps(seeds);
    parallel_for(seeds, threads, [&](std::size_t s) {
      Stream stream = Stream::split(campaign_seed(seed, n), s);
      auto run = [&](auto tag) {
        using S = decltype(tag);
        const Matrix<S> H = sample_wigner<S>(n, sampler, stream);
        Vector<S> u = Vector<S>::Zero(static_cast<Eigen::Index>(n));
        Vector<S> v = u;
        u(0) = S(1);
        v(overlap == "equal" ? 0 : 1) = S(1);
        return isotropy_gap<S>(H, u, v, x);
      };
      gaps[s] = sampler.complex_entries() ? run(std::complex<double>{}) : run(double{});
    });
    for (std::size_t s = 0; s < seeds; ++s) {
      table.add_row({std::to_string(n), std::to_string(s), format_real(gaps[s])});
    }
    summary.add_row({std::to_string(n), format_real(median_of(gaps)),
                     format_real(*std::max_element(gaps.begin(), gaps.end()))});
  }
  const fs::path dir = out_dir(cfg);
  write_table(dir / "isotropy.csv", table);
  write_table(dir / "isotropy_summary.csv", summary);
  write_csv(out, summary);
  return kExitOk;
}

}  // namespace htldp::cli
