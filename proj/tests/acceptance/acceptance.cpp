// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <exception>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>
#include <string>
#include <type_traits>
#include <vector>

#include <Eigen/QR>

#include "generators.hpp"
#include "htldp/brute_force.hpp"
#include "htldp/experiments.hpp"
#include "htldp/heavy_tail.hpp"
#include "htldp/quadform.hpp"
#include "htldp/semicircle.hpp"
#include "htldp/spike.hpp"
#include "htldp/variational.hpp"
#include "oracles.hpp"

using namespace htldp;

namespace tol {
constexpr double kAnchorLow = 0.999, kAnchorHigh = 1.001;
constexpr double kAnchorSeconds = 120.0;
constexpr int kCoverageDraws = 20;
constexpr int kCoverageMaxN = 6;
constexpr double kCoverageAlphaMax = 1.83;
constexpr double kCoverageRelative = 1e-3;
constexpr double kCoverageSeconds = 1800.0;
constexpr int kLemmaDraws = 50;
constexpr double kLemmaAbsolute = 1e-4;
constexpr double kLemmaSeconds = 600.0;
constexpr int kEquationInstances = 200;
constexpr double kEquationAbsolute = 1e-8;
constexpr double kDetach = 1e-6;
constexpr std::size_t kBbpN = 2000, kBbpSeeds = 20;
constexpr double kBbpTheta = 2.0, kBbpTarget = 2.5, kBbpAbsolute = 0.1, kBbpSeconds = 300.0;
constexpr int kStieltjesGrid = 10000;
constexpr double kStieltjesRoundTrip = 1e-12, kStieltjesComplex = 1e-8;
constexpr int kDecompositionSamples = 100;
constexpr std::size_t kConcentrationTrials = 2000;
constexpr double kConcentrationSE = 3.0;
constexpr std::size_t kSemicircleN = 1000;
constexpr double kKs = 0.05;
constexpr int kEdgeSeeds = 100, kEdgeRequired = 95;
constexpr double kEdgeLow = 1.8, kEdgeHigh = 2.3;
constexpr int kRateDraws = 10;
constexpr double kRateEdgeRelative = 1e-5;
}  // namespace tol

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

TailParams anchor_params() {
  TailParams p;
  p.alpha = 1.0;
  p.a = p.b = 1.0;
  p.nu1_support = parse_support("1,-1");
  p.nu2_support = parse_support("1,-1");
  return p;
}

Outcome c1_anchor() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto p = anchor_params();
  const double cf = closed_form_c(p).c;
  const double bf = brute_force_c(p, 6, 1).c;
  const double s = seconds_since(t0);
  return {cf == 1.0 && bf >= tol::kAnchorLow && bf <= tol::kAnchorHigh && s < tol::kAnchorSeconds,
          "closed form " + fmt(cf) + ", brute force " + fmt(bf) + ", " + fmt(s) + " s"};
}

Outcome c2_coverage() {
  const auto t0 = std::chrono::steady_clock::now();
  gen::Gen g(2024);
  double worst = 0.0;
  std::string where;
  int draws = 0;
  for (char label : std::string("abcdef")) {
    for (int k = 0; k < tol::kCoverageDraws; ++k) {
      const TailParams p = g.params_for_case(label, tol::kCoverageAlphaMax);
      const auto cf = closed_form_c(p);
      if (cf.case_label != std::string(1, label)) return {false, "draw for case " + std::string(1, label) +
                                                                     " dispatched to " + cf.case_label};
      const double bf = brute_force_c(p, tol::kCoverageMaxN, static_cast<std::uint64_t>(100 * k + label)).c;
      const double rel = std::abs(cf.c - bf) / cf.c;
      if (rel > worst) {
        worst = rel;
        where = std::string(1, label) + " alpha=" + fmt(p.alpha);
      }
      ++draws;
    }
  }
  const double s = seconds_since(t0);
  return {worst <= tol::kCoverageRelative && s < tol::kCoverageSeconds,
          std::to_string(draws) + " draws, max relative gap " + fmt(worst) + (where.empty() ? "" : " (" + where + ")") +
              ", " + fmt(s) + " s"};
}

Outcome c3_lemmas() {
  const auto t0 = std::chrono::steady_clock::now();
  gen::Gen g(3);
  double worst[3] = {0.0, 0.0, 0.0};
  for (int k = 0; k < tol::kLemmaDraws; ++k) {
    const double mu = g.log_uniform(0.2, 5.0);
    const double lambda = mu * g.real(0.0, 0.99);
    const double delta = g.real(0.2, 0.95);
    const int n = g.integer(1, 6);
    worst[0] = std::max(worst[0], std::abs(quadform_max_simplex(lambda, mu, delta, n) -
                                           oracle::simplex_quadform(lambda, mu, delta, n, g.stream())));
  }
  for (int k = 0; k < tol::kLemmaDraws; ++k) {
    const double lambda = g.log_uniform(0.05, 5.0) * (g.coin() ? 1.0 : 0.0);
    const double mu = g.log_uniform(0.05, 5.0);
    const double delta = g.real(0.2, 0.95);
    const int kk = g.integer(1, 3), ll = g.integer(1, 3);
    worst[1] = std::max(worst[1], std::abs(quadform_max_bipartite(lambda, mu, delta) -
                                           oracle::bipartite_quadform(lambda, mu, delta, kk, ll, g.stream())));
  }
  for (int k = 0; k < tol::kLemmaDraws; ++k) {
    const double beta = g.real(2.0, 5.0);
    const int n = g.integer(2, 6);
    worst[2] = std::max(worst[2], std::abs(psd_offdiag_max(beta, n) - oracle::psd_offdiag(beta, n, g.stream())));
  }
  const double s = seconds_since(t0);
  const double w = *std::max_element(worst, worst + 3);
  return {w <= tol::kLemmaAbsolute && s < tol::kLemmaSeconds,
          "simplex " + fmt(worst[0]) + ", bipartite " + fmt(worst[1]) + ", psd " + fmt(worst[2]) + ", " + fmt(s) +
              " s"};
}

Outcome c4_eigen_equation() {
  gen::Gen g(4);
  double worst = 0.0;
  int used = 0, missing = 0;
  for (int k = 0; k < tol::kEquationInstances; ++k) {
    const int n = g.integer(3, 100);
    const bool complex = g.coin();
    const ComplexMatrix H = complex ? ComplexMatrix(oracle::gaussian_hermitian(n, g.stream()))
                                    : ComplexMatrix(oracle::gaussian_symmetric(n, g.stream()).cast<std::complex<double>>());
    const ComplexMatrix Hn = H / std::sqrt(static_cast<double>(n));
    const int rank = g.integer(1, std::min(3, n));
    ComplexMatrix Z(n, rank);
    for (Eigen::Index i = 0; i < Z.size(); ++i) {
      Z.data()[i] = {g.stream().normal(), complex ? g.stream().normal() : 0.0};
    }
    SpikeSpec spike;
    spike.vectors = Eigen::HouseholderQR<ComplexMatrix>(Z).householderQ() * ComplexMatrix::Identity(n, rank);
    for (int r = 0; r < rank; ++r) {
      double t = g.real(-3.0, 5.0);
      if (std::abs(t) < 1e-3) t = 1.0;
      spike.thetas.push_back(t);
    }
    std::sort(spike.thetas.begin(), spike.thetas.end());
    const double direct = largest_eigenvalue(ComplexMatrix(Hn + spike.perturbation()));
    if (direct < largest_eigenvalue(Hn) + tol::kDetach) continue;
    const auto z = EigenEquation(Hn, spike).largest_zero();
    ++used;
    if (!z) {
      ++missing;
      continue;
    }
    worst = std::max(worst, std::abs(*z - direct));
  }
  return {missing == 0 && used > 0 && worst <= tol::kEquationAbsolute,
          std::to_string(used) + " detached instances, " + std::to_string(missing) + " without zero, max error " +
              fmt(worst)};
}

Outcome c5_bbp() {
  const auto t0 = std::chrono::steady_clock::now();
  const auto samples = planted_spike_run(tol::kBbpN, tol::kBbpTheta, EntrySampler(TailParams{}, LawKind::Rademacher),
                                         tol::kBbpSeeds, 5);
  const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / static_cast<double>(samples.size());
  const double s = seconds_since(t0);
  return {std::abs(mean - tol::kBbpTarget) <= tol::kBbpAbsolute && s < tol::kBbpSeconds,
          "mean lambda_max " + fmt(mean) + " over " + std::to_string(samples.size()) + " seeds, " + fmt(s) + " s"};
}

Outcome c6_stieltjes() {
  double worst = 0.0;
  for (int i = 0; i < tol::kStieltjesGrid; ++i) {
    const double x = 2.0 + 48.0 * i / (tol::kStieltjesGrid - 1);
    worst = std::max(worst, std::abs(stieltjes_inverse(stieltjes(x)) - x));
  }
  gen::Gen g(6);
  double worst_c = 0.0;
  for (int k = 0; k < 200; ++k) {
    std::complex<double> z;
    if (k % 4 == 0) {
      const double x = g.real(2.0001, 50.0);
      z = g.coin() ? x : -x;
    } else {
      z = {g.real(-6.0, 6.0), (g.coin() ? 1.0 : -1.0) * g.log_uniform(0.01, 10.0)};
    }
    worst_c = std::max(worst_c, std::abs(stieltjes_complex(z) - oracle::stieltjes_quadrature(z)));
  }
  return {worst < tol::kStieltjesRoundTrip && worst_c < tol::kStieltjesComplex,
          "round trip " + fmt(worst) + ", complex vs quadrature " + fmt(worst_c)};
}

// Expected part of a raw entry from the documented cut rule.
Part expected_part(double v, const CutPoints& c) {
  if (v <= c.small) return Part::A;
  if (v < c.medium_low) return Part::B;
  if (v <= c.medium_high) return Part::C;
  return Part::D;
}

template <class Scalar>
bool decomposition_exact(std::size_t n, const EntrySampler& s, const DecompositionThresholds& th, double alpha,
                         gen::Gen& g, int& injected) {
  Matrix<Scalar> X = sample_wigner_raw<Scalar>(n, s, g.stream());
  const CutPoints cuts = cut_points(n, th);
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> values;
  for (double c : {cuts.small, cuts.medium_low, cuts.medium_high}) {
    values.push_back(c);
    values.push_back(std::nextafter(c, inf));
    values.push_back(std::nextafter(c, -inf));
  }
  struct Site {
    Eigen::Index i, j;
    double v;
  };
  std::vector<Site> sites;
  for (double v : values) {
    const auto i = static_cast<Eigen::Index>(g.stream().below(n));
    const auto j = static_cast<Eigen::Index>(g.stream().below(n));
    const double signed_v = g.coin() ? v : -v;
    Scalar entry;
    if constexpr (std::is_same_v<Scalar, double>) {
      entry = signed_v;
    } else {
      // Put the boundary value on one component and something smaller on the other.
      const double other = g.real(-1.0, 1.0) * v;
      entry = (i != j && g.coin()) ? Scalar(other, signed_v) : Scalar(signed_v, i == j ? 0.0 : other);
    }
    X(i, j) = entry;
    if constexpr (std::is_same_v<Scalar, double>) {
      X(j, i) = entry;
    } else {
      X(j, i) = std::conj(entry);
    }
    sites.push_back({i, j, v});
  }
  // Later injections may overwrite earlier ones; only the last write per site counts.
  const auto dec = decompose(X, th, alpha);
  bool ok = (dec.sum().array() == normalize_wigner(X).array()).all();
  for (std::size_t k = 0; k < sites.size(); ++k) {
    const auto& st = sites[k];
    bool overwritten = false;
    for (std::size_t m = k + 1; m < sites.size(); ++m) {
      overwritten = overwritten || (std::min(sites[m].i, sites[m].j) == std::min(st.i, st.j) &&
                                    std::max(sites[m].i, sites[m].j) == std::max(st.i, st.j));
    }
    if (overwritten) continue;
    const Matrix<Scalar>* parts[4] = {&dec.A, &dec.B, &dec.C, &dec.D};
    const auto want = static_cast<int>(expected_part(st.v, cuts));
    for (int p = 0; p < 4; ++p) {
      const bool nonzero = (*parts[p])(st.i, st.j) != Scalar(0);
      ok = ok && (nonzero == (p == want));
    }
    ++injected;
  }
  return ok;
}

Outcome c7_decomposition() {
  gen::Gen g(7);
  int exact = 0, injected = 0;
  for (int k = 0; k < tol::kDecompositionSamples; ++k) {
    TailParams p;
    p.alpha = g.real(0.3, 1.9);
    const bool complex = k % 3 == 0;
    if (complex) {
      p.complex_entries = true;
      p.nu2_support = parse_support("1,i,-1,-i");
    }
    const EntrySampler s(p);
    const DecompositionThresholds th{g.real(0.05, 1.0), 1.0 / p.alpha + g.real(0.05, 2.0)};
    const auto n = static_cast<std::size_t>(g.integer(4, 80));
    const bool ok = complex ? decomposition_exact<std::complex<double>>(n, s, th, p.alpha, g, injected)
                            : decomposition_exact<double>(n, s, th, p.alpha, g, injected);
    exact += ok ? 1 : 0;
  }
  return {exact == tol::kDecompositionSamples,
          std::to_string(exact) + "/" + std::to_string(tol::kDecompositionSamples) + " exact, " +
              std::to_string(injected) + " boundary entries classified"};
}

Outcome c8_concentration() {
  const std::vector<double> grid = {0.0, 0.01, 0.02, 0.05, 0.1, 0.2, 0.3, 0.5};
  double worst_margin = -std::numeric_limits<double>::infinity();
  int rows = 0;
  for (std::size_t n : {100u, 400u}) {
    const double K = 1.0 / std::sqrt(static_cast<double>(n));
    for (const auto& r : concentration_check(n, K, grid, tol::kConcentrationTrials, 8 + n)) {
      const double bound = 2.0 * std::exp(-r.t * r.t / (32.0 * K * K));
      const double p = std::min(bound, 1.0);
      const double se = std::sqrt(p * (1.0 - p) / static_cast<double>(tol::kConcentrationTrials));
      worst_margin = std::max(worst_margin, r.frequency - bound - tol::kConcentrationSE * se);
      ++rows;
    }
  }
  return {worst_margin <= 0.0, std::to_string(rows) + " rows, largest excess over bound + 3 SE " + fmt(worst_margin)};
}

Outcome c9_semicircle() {
  const EntrySampler s(TailParams{});
  Stream stream(9);
  const RealMatrix X = sample_wigner<double>(tol::kSemicircleN, s, stream);
  const auto ev = eigenvalues(X);
  const double ks = oracle::ks_to_semicircle(std::vector<double>(ev.data(), ev.data() + ev.size()));
  const auto top = sample_largest_eigenvalues(tol::kSemicircleN, tol::kEdgeSeeds, s, 99);
  const auto inside = std::count_if(top.begin(), top.end(),
                                    [](double l) { return l >= tol::kEdgeLow && l <= tol::kEdgeHigh; });
  return {ks < tol::kKs && inside >= tol::kEdgeRequired,
          "KS " + fmt(ks) + ", lambda_max in [1.8, 2.3] for " + std::to_string(inside) + "/" +
              std::to_string(tol::kEdgeSeeds) + " seeds"};
}

Outcome c10_rate_shape() {
  gen::Gen g(10);
  bool ok = true;
  double worst_edge = 0.0;
  for (int k = 0; k < tol::kRateDraws; ++k) {
    const RateFunctionParams p{g.real(0.1, 1.95), g.log_uniform(0.05, 20.0)};
    ok = ok && rate_J(2.0, p) == 0.0;
    ok = ok && std::isinf(rate_J(std::nextafter(2.0, 0.0), p));
    for (int i = 0; i <= 4000; ++i) ok = ok && std::isinf(rate_J(-20.0 + 22.0 * i / 4000.0 - 1e-9, p));
    double prev = rate_J(std::nextafter(2.0, 3.0), p);
    for (int i = 1; i <= 48000; ++i) {
      const double J = rate_J(2.0 + 1e-3 * i, p);
      ok = ok && J > prev && std::isfinite(J);
      prev = J;
    }
    // J(2 + h) approaches c along h = 1e−4, …, 1e−14.
    double last_gap = std::numeric_limits<double>::infinity();
    for (int e = 4; e <= 14; ++e) {
      const double gap = std::abs(rate_J(2.0 + std::pow(10.0, -e), p) - p.c) / p.c;
      ok = ok && gap <= last_gap;
      last_gap = gap;
    }
    worst_edge = std::max(worst_edge, last_gap);
  }
  return {ok && worst_edge <= tol::kRateEdgeRelative,
          std::string(ok ? "zero at 2, inf below, increasing above" : "shape violated") +
              ", max relative gap to c at 2+ " + fmt(worst_edge)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"1 constant-c anchor", c1_anchor},
      {"2 closed form vs brute force", c2_coverage},
      {"3 lemma oracles", c3_lemmas},
      {"4 eigenvalue equation", c4_eigen_equation},
      {"5 BBP limit", c5_bbp},
      {"6 Stieltjes self-consistency", c6_stieltjes},
      {"7 decomposition exactness", c7_decomposition},
      {"8 concentration diagnostic", c8_concentration},
      {"9 semicircle convergence", c9_semicircle},
      {"10 rate-function shape", c10_rate_shape},
  };
  int failures = 0;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s criterion %s: %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), o.detail.c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
