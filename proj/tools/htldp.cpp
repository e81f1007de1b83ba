// htldp: command-line front end of the heavy-tailed largest-eigenvalue toolkit.

#include <iostream>
#include <map>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "htldp/errors.hpp"

using namespace htldp::cli;

namespace {

class Flags {
 public:
  explicit Flags(json& overrides) : overrides_(overrides) {}

  void real(CLI::App* app, const std::string& flag, const char* key, const std::string& help) {
    app->add_option_function<double>(flag, [this, key](const double& v) { overrides_[key] = v; }, help);
  }
  void integer(CLI::App* app, const std::string& flag, const char* key, const std::string& help) {
    app->add_option_function<std::int64_t>(flag, [this, key](const std::int64_t& v) { overrides_[key] = v; }, help);
  }
  void text(CLI::App* app, const std::string& flag, const char* key, const std::string& help) {
    app->add_option_function<std::string>(flag, [this, key](const std::string& v) { overrides_[key] = v; }, help);
  }
  void toggle(CLI::App* app, const std::string& flag, const char* key, const std::string& help) {
    app->add_flag_function(flag, [this, key](std::int64_t n) { overrides_[key] = n > 0; }, help);
  }

  void model(CLI::App* app) {
    real(app, "--alpha", "alpha", "Tail exponent alpha in (0, 2) [1]");
    real(app, "--a", "a", "Off-diagonal tail constant a > 0 [1]");
    real(app, "--b", "b", "Diagonal tail constant b > 0 [1]");
    real(app, "--kappa", "kappa", "Uniform tail bound constant kappa > 0 [0.5]");
    text(app, "--nu1", "nu1", "Diagonal angle support, e.g. \"1,-1\" [1,-1]");
    text(app, "--nu2", "nu2", "Off-diagonal angle support, e.g. \"1\", \"-1\", \"1,i,-1,-i\" [1,-1]");
    toggle(app, "--complex", "complex", "Complex (Hermitian) entries instead of real symmetric");
  }
  void sampling(CLI::App* app, const std::string& default_law) {
    text(app, "--law", "law", "Entry law: weibull, mixture or rademacher [" + default_law + "]");
    real(app, "--tail-weight", "tail_weight", "Mixture tail probability (0 = automatic) [0]");
    integer(app, "--seed", "seed", "Master seed [1]");
    integer(app, "--threads", "threads", "Worker threads (0 = $HTLDP_THREADS or all cores) [0]");
  }
  void output(CLI::App* app) { text(app, "--out", "out", "Output directory [.]"); }

 private:
  json& overrides_;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"htldp: large deviations of the largest eigenvalue of heavy-tailed Wigner matrices"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  std::string config_path;
  app.add_option("--config", config_path, "JSON file with run settings; command-line flags override it");

  json overrides = json::object();
  Flags flags(overrides);

  auto* rate = app.add_subcommand("rate", "Tabulate the rate function J(x) (rate.csv, rate.svg)");
  flags.model(rate);
  flags.real(rate, "--c", "c", "Variational constant override (skips the closed form)");
  flags.text(rate, "--x-grid", "x_grid", "x values: \"v1,v2,...\" or \"lo:hi:count\" [1.5:6:181]");
  flags.output(rate);

  auto* solve = app.add_subcommand("solve-c", "Closed-form variational constant, optionally checked by search");
  flags.model(solve);
  flags.integer(solve, "--oracle", "oracle", "Brute-force search up to this matrix size (1-6, 0 = off) [0]");
  flags.integer(solve, "--restarts", "restarts", "Local searches per size and phase pattern [32]");
  flags.integer(solve, "--max-patterns", "max_patterns", "Phase patterns per size [64]");
  flags.integer(solve, "--seed", "seed", "Search seed [1]");
  flags.integer(solve, "--threads", "threads", "Worker threads (0 = $HTLDP_THREADS or all cores) [0]");
  flags.output(solve);

  auto* bbp = app.add_subcommand("bbp", "Planted spike sweep against theta + 1/theta (bbp.csv, bbp.svg)");
  flags.model(bbp);
  flags.sampling(bbp, "rademacher");
  flags.text(bbp, "--theta-grid", "theta_grid", "Spike strengths [0.5,1,1.5,2,3]");
  flags.integer(bbp, "--n", "n", "Matrix size N [1000]");
  flags.integer(bbp, "--trials", "trials", "Samples per theta [10]");
  flags.text(bbp, "--plant", "plant", "diag (X11 = theta sqrt N) or offdiag (X12 = theta sqrt N) [diag]");
  flags.output(bbp);

  auto* tail = app.add_subcommand("tail", "Monte Carlo tail campaign with experiment records and a rate slope");
  flags.model(tail);
  flags.sampling(tail, "weibull");
  flags.text(tail, "--n-grid", "n_grid", "Matrix sizes [100,200,400]");
  flags.text(tail, "--x-grid", "x_grid", "Thresholds x of P(lambda_max > x) [2.1,2.3,2.5]");
  flags.integer(tail, "--trials", "trials", "Samples per N [200]");
  flags.real(tail, "--x-slope", "x_slope", "Threshold used for the slope summary [first x]");
  flags.real(tail, "--c", "c", "Variational constant for the reference J (default: closed form)");
  flags.toggle(tail, "--dry-run", "dry_run", "Validate the configuration, print it and write nothing");
  flags.toggle(tail, "--timing", "timing", "Also write wall times to timing.json");
  flags.output(tail);

  auto* iso = app.add_subcommand("isotropy", "Resolvent isotropy gap |<u,(x-H)^-1 v> - <u,v>G(x)| over N");
  flags.model(iso);
  flags.sampling(iso, "rademacher");
  flags.text(iso, "--n-grid", "n_grid", "Matrix sizes [200,1000]");
  flags.real(iso, "--x", "x", "Evaluation point x > 2 [3]");
  flags.integer(iso, "--seeds", "seeds", "Samples per N [10]");
  flags.text(iso, "--overlap", "overlap", "orthogonal (u = e1, v = e2) or equal (u = v = e1) [orthogonal]");
  flags.output(iso);

  auto* check = app.add_subcommand("check", "Run the invariant suite at reduced sizes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    json cfg = config_path.empty() ? json::object() : load_config_file(config_path);
    cfg.merge_patch(overrides);
    if (rate->parsed()) return cmd_rate(cfg, std::cout);
    if (solve->parsed()) return cmd_solve_c(cfg, std::cout);
    if (bbp->parsed()) return cmd_bbp(cfg, std::cout);
    if (tail->parsed()) return cmd_tail(cfg, std::cout);
    if (iso->parsed()) return cmd_isotropy(cfg, std::cout);
    if (check->parsed()) return cmd_check(cfg, std::cout);
  } catch (const htldp::DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitFailure;
}
