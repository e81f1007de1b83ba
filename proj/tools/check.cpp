#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <Eigen/QR>

#include "commands.hpp"
#include "htldp/brute_force.hpp"
#include "htldp/csv.hpp"
#include "htldp/experiments.hpp"
#include "htldp/heavy_tail.hpp"
#include "htldp/perm_distance.hpp"
#include "htldp/quadform.hpp"
#include "htldp/random.hpp"
#include "htldp/semicircle.hpp"
#include "htldp/spike.hpp"
#include "htldp/variational.hpp"

namespace htldp::cli {

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

RealMatrix random_symmetric(Eigen::Index n, Stream& s) {
  RealMatrix H(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i; j < n; ++j) H(i, j) = H(j, i) = s.normal();
  }
  return H;
}

std::string num(double v) { return format_real(v); }

Outcome check_stieltjes() {
  double worst = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double x = 2.0 + 48.0 * i / 9999.0;
    worst = std::max(worst, std::abs(stieltjes_inverse(stieltjes(x)) - x));
  }
  // Trapezoid rule over a full period of t = 2 sin φ; the integrand is periodic and smooth off the cut.
  double worst_c = 0.0;
  for (std::complex<double> z : {std::complex<double>(0, 1), {3, 0.5}, {-2.5, -1}, {0.5, 2}, {10, 0}}) {
    const int m = 4096;
    std::complex<double> acc = 0.0;
    for (int k = 0; k < m; ++k) {
      const double phi = 2.0 * std::numbers::pi * k / m;
      acc += std::cos(phi) * std::cos(phi) / (z - 2.0 * std::sin(phi));
    }
    acc *= 2.0 / m;
    worst_c = std::max(worst_c, std::abs(acc - stieltjes_complex(z)));
  }
  return {worst < 1e-12 && worst_c < 1e-8, "roundtrip " + num(worst) + ", complex " + num(worst_c)};
}

Outcome check_rate_shape() {
  const RateFunctionParams p{1.3, 0.7};
  bool ok = rate_J(2.0, p) == 0.0 && std::isinf(rate_J(1.99, p));
  double prev = 0.0;
  for (int i = 1; i <= 2000; ++i) {
    const double J = rate_J(2.0 + 1e-3 * i, p);
    ok = ok && J > prev;
    prev = J;
  }
  ok = ok && std::abs(rate_J(2.0 + 1e-12, p) - p.c) < 1e-5;
  return {ok, "J(2) = 0, J = inf below 2, increasing, J(2+) -> c"};
}

Outcome check_closed_forms() {
  struct Case {
    double alpha, a, b;
    const char* nu1;
    const char* nu2;
  };
  const Case cases[] = {{1.0, 1, 1, "1,-1", "1,-1"}, {0.6, 2, 3, "-1", "1"}, {1.5, 1, 0.4, "1", "1,-1"},
                        {1.5, 1, 1, "1", "1"},        {1.4, 1, 1.5, "1", "-1"}, {1.7, 1.2, 1, "-1", "1"},
                        {1.5, 0.8, 1, "-1", "-1"}};
  double worst = 0.0;
  bool witnesses = true;
  for (const auto& c : cases) {
    TailParams p;
    p.alpha = c.alpha;
    p.a = c.a;
    p.b = c.b;
    p.nu1_support = parse_support(c.nu1);
    p.nu2_support = parse_support(c.nu2);
    const auto cf = closed_form_c(p);
    BruteForceBudget budget;
    budget.restarts = 8;
    budget.max_patterns = 16;
    const auto bf = brute_force_c(p, 4, 7, budget);
    worst = std::max(worst, std::abs(bf.c - cf.c) / cf.c);
    const double lam = largest_eigenvalue(cf.witness.to_dense());
    witnesses = witnesses && std::abs(lam - 1.0) < 1e-10 && in_domain(cf.witness, p) &&
                std::abs(weight_I(cf.witness, p) - cf.c) <= 1e-10 * cf.c;
  }
  return {worst <= 1e-3 && witnesses, "max relative gap " + num(worst) + (witnesses ? "" : ", witness failure")};
}

Outcome check_decomposition() {
  EntrySampler sampler(TailParams{});
  bool ok = true;
  for (std::uint64_t s = 0; s < 5; ++s) {
    Stream stream(s);
    RealMatrix X = sample_wigner_raw<double>(60, sampler, stream);
    const CutPoints cuts = cut_points(60, DecompositionThresholds{});
    X(0, 1) = X(1, 0) = cuts.small;
    X(2, 3) = X(3, 2) = cuts.medium_low;
    X(4, 5) = X(5, 4) = -cuts.medium_high;
    const auto dec = decompose(X, DecompositionThresholds{}, 1.0);
    ok = ok && (dec.sum().array() == normalize_wigner(X).array()).all();
  }
  return {ok, "A + B + C + D reproduces X exactly"};
}

Outcome check_weyl() {
  Stream s(11);
  double worst = -1.0;
  for (int k = 0; k < 100; ++k) {
    const auto n = static_cast<Eigen::Index>(1 + s.below(12));
    const RealMatrix A = random_symmetric(n, s);
    const RealMatrix E = random_symmetric(n, s);
    const double l = largest_eigenvalue(RealMatrix(A + E));
    worst = std::max(worst, l - largest_eigenvalue(A) - largest_eigenvalue(E));
    worst = std::max(worst, largest_eigenvalue(A) + smallest_eigenvalue(E) - l);
  }
  return {worst <= 1e-10, "largest violation " + num(worst)};
}

Outcome check_eigen_equation() {
  Stream s(5);
  double worst = 0.0;
  int used = 0;
  for (int k = 0; k < 20; ++k) {
    const auto n = static_cast<Eigen::Index>(10 + s.below(30));
    const RealMatrix H = random_symmetric(n, s) / std::sqrt(static_cast<double>(n));
    const auto rank = static_cast<Eigen::Index>(1 + s.below(3));
    ComplexMatrix G(n, rank);
    for (Eigen::Index i = 0; i < G.size(); ++i) G.data()[i] = s.normal();
    const ComplexMatrix Q = Eigen::HouseholderQR<ComplexMatrix>(G).householderQ() * ComplexMatrix::Identity(n, rank);
    SpikeSpec spike;
    for (Eigen::Index r = 0; r < rank; ++r) spike.thetas.push_back(0.5 + 3.0 * s.uniform());
    std::sort(spike.thetas.begin(), spike.thetas.end());
    spike.vectors = Q;
    const double direct = largest_eigenvalue(ComplexMatrix(H.cast<std::complex<double>>() + spike.perturbation()));
    if (direct < largest_eigenvalue(H) + 1e-6) continue;
    const EigenEquation eq(H, spike);
    const auto z = eq.largest_zero();
    if (!z) return {false, "no zero found"};
    worst = std::max(worst, std::abs(*z - direct));
    ++used;
  }
  return {worst <= 1e-8, std::to_string(used) + " instances, max error " + num(worst)};
}

Outcome check_lemmas() {
  double worst = 0.0;
  for (double delta : {0.3, 0.5, 0.8}) {
    // Two coordinates on the curve y1^δ + y2^δ = 1 cover n = 2 exactly.
    double best = 0.0, best_bip = 0.0;
    for (int i = 0; i <= 20000; ++i) {
      const double w = i / 20000.0;
      const double y1 = std::pow(w, 1.0 / delta), y2 = std::pow(1.0 - w, 1.0 / delta);
      best = std::max(best, 0.2 * (y1 * y1 + y2 * y2) + 2.0 * y1 * y2);
      best_bip = std::max(best_bip, 0.3 * (y1 * y1 + y2 * y2) + 2.0 * 0.9 * y1 * y2);
    }
    worst = std::max(worst, std::abs(best - quadform_max_simplex(0.2, 1.0, delta, 2)));
    worst = std::max(worst, std::abs(best_bip - quadform_max_bipartite(0.3, 0.9, delta)));
  }
  for (double beta : {2.0, 3.0}) {
    double best = 0.0;
    for (int i = 0; i <= 20000; ++i) {
      const double w = i / 20000.0;
      best = std::max(best, 2.0 * std::pow(w * (1.0 - w), beta / 2.0));
    }
    worst = std::max(worst, std::abs(best - psd_offdiag_max(beta, 2)));
  }
  return {worst <= 1e-4, "max deviation " + num(worst)};
}

Outcome check_perm_distance() {
  Stream s(3);
  auto random_sparse = [&] {
    SparseHermitian A(4);
    for (int k = 0; k < 4; ++k) {
      const std::size_t i = s.below(4), j = s.below(4);
      A.set(i, j, i == j ? std::complex<double>(s.normal()) : std::complex<double>(s.normal(), s.normal()));
    }
    return A;
  };
  bool ok = true;
  for (int k = 0; k < 30; ++k) {
    const auto A = random_sparse(), B = random_sparse(), C = random_sparse();
    const double ab = perm_invariant_distance(A, B), bc = perm_invariant_distance(B, C);
    const double ac = perm_invariant_distance(A, C);
    ok = ok && ac <= ab + bc + 1e-12 && std::abs(ab - perm_invariant_distance(B, A)) < 1e-15 &&
         perm_invariant_distance(A, A) == 0.0;
  }
  return {ok, "symmetry, identity and triangle inequality"};
}

Outcome check_bounds() {
  bool ok = bennett_h(0.0) == 0.0;
  for (double t : {0.0, 0.1, 1.0, 5.0}) ok = ok && bennett_bound(1.0, 1.0, t) <= 1.0;
  const auto rows = concentration_check(60, 1.0 / std::sqrt(60.0), {0.0, 0.1, 0.3}, 200, 9);
  for (const auto& r : rows) ok = ok && r.holds;
  return {ok, "Bennett bound <= 1, concentration rows hold"};
}

Outcome check_csv() {
  CsvTable t;
  t.header = {"x", "J"};
  t.add_row({format_real(1.9), format_real(std::numeric_limits<double>::infinity())});
  t.add_row({format_real(2.5), format_real(2.0 / 3.0)});
  std::ostringstream a;
  write_csv(a, t);
  std::istringstream in(a.str());
  std::ostringstream b;
  write_csv(b, read_csv(in));
  return {a.str() == b.str(), "parse then re-emit is identical"};
}

}  // namespace

int cmd_check(const json&, std::ostream& out) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> checks = {
      {"stieltjes", check_stieltjes},         {"rate-shape", check_rate_shape},
      {"closed-form-oracle", check_closed_forms}, {"decomposition", check_decomposition},
      {"weyl", check_weyl},                   {"eigen-equation", check_eigen_equation},
      {"lemmas", check_lemmas},               {"perm-distance", check_perm_distance},
      {"bounds", check_bounds},               {"csv-roundtrip", check_csv}};
  int failures = 0;
  for (const auto& [name, fn] : checks) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    out << (o.pass ? "PASS " : "FAIL ") << name << ": " << o.detail << "\n";
    if (!o.pass) ++failures;
  }
  out << (failures == 0 ? "all checks passed" : std::to_string(failures) + " check(s) failed") << "\n";
  return failures == 0 ? kExitOk : kExitDisagreement;
}

}  // namespace htldp::cli
