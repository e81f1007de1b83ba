#include "htldp/brute_force.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include <Eigen/Eigenvalues>

#include "htldp/errors.hpp"
#include "htldp/linalg.hpp"
#include "htldp/parallel.hpp"
#include "htldp/random.hpp"

namespace htldp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Slot {
  std::size_t i;
  std::size_t j;
};

std::vector<Slot> upper_slots(std::size_t n) {
  std::vector<Slot> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) out.push_back({i, j});
  }
  return out;
}

struct Term {
  std::size_t slot;
  int phase;  // index into the slot's support
};

struct Candidate {
  double value = kInf;
  std::size_t n = 0;
  std::vector<Term> terms;
  Eigen::VectorXd u;
};

struct Problem {
  std::size_t n;
  std::vector<Slot> slots;
  PhaseSet diag_phases;
  PhaseSet off_phases;
  double alpha;
  double a;
  double b;

  const PhaseSet& phases_of(std::size_t slot) const {
    return slots[slot].i == slots[slot].j ? diag_phases : off_phases;
  }
  Phase phase(const Term& t) const { return phases_of(t.slot)[static_cast<std::size_t>(t.phase)]; }
  double weight(const Term& t) const { return slots[t.slot].i == slots[t.slot].j ? b : a; }
};

template <class Scalar>
class Objective {
 public:
  Objective(const Problem& problem, const std::vector<Term>& terms)
      : p_(problem), terms_(terms), n_(static_cast<Eigen::Index>(problem.n)) {}

  Matrix<Scalar> build(const Eigen::VectorXd& u) const {
    Matrix<Scalar> A = Matrix<Scalar>::Zero(n_, n_);
    for (std::size_t e = 0; e < terms_.size(); ++e) {
      const Slot& s = p_.slots[terms_[e].slot];
      const std::complex<double> z = p_.phase(terms_[e]) * std::exp(u(static_cast<Eigen::Index>(e)));
      const auto i = static_cast<Eigen::Index>(s.i);
      const auto j = static_cast<Eigen::Index>(s.j);
      if constexpr (std::is_same_v<Scalar, double>) {
        A(i, j) = z.real();
        A(j, i) = z.real();
      } else {
        A(i, j) = z;
        A(j, i) = std::conj(z);
      }
    }
    return A;
  }

  // G(u) = log I − α log λ_max; +∞ when λ_max ≤ 0.
  double operator()(const Eigen::VectorXd& u, Eigen::VectorXd* grad) {
    ++evaluations;
    const double alpha = p_.alpha;
    double I = 0.0;
    Eigen::VectorXd wm(u.size());
    for (Eigen::Index e = 0; e < u.size(); ++e) {
      wm(e) = p_.weight(terms_[static_cast<std::size_t>(e)]) * std::exp(alpha * u(e));
      I += wm(e);
    }
    solver_.compute(build(u), grad ? Eigen::ComputeEigenvectors : Eigen::EigenvaluesOnly);
    const double lam = solver_.eigenvalues()(n_ - 1);
    if (!(lam > 0.0) || !(I > 0.0) || !std::isfinite(I)) return kInf;
    if (grad) {
      const auto x = solver_.eigenvectors().col(n_ - 1);
      grad->resize(u.size());
      for (Eigen::Index e = 0; e < u.size(); ++e) {
        const Term& t = terms_[static_cast<std::size_t>(e)];
        const Slot& s = p_.slots[t.slot];
        const auto i = static_cast<Eigen::Index>(s.i);
        const auto j = static_cast<Eigen::Index>(s.j);
        const std::complex<double> z = p_.phase(t);
        double dlam;
        if (i == j) {
          dlam = z.real() * std::norm(x(i));
        } else {
          dlam = 2.0 * std::real(z * std::conj(std::complex<double>(x(i))) * std::complex<double>(x(j)));
        }
        (*grad)(e) = alpha * wm(e) / I - alpha * std::exp(u(e)) * dlam / lam;
      }
    }
    return std::log(I) - alpha * std::log(lam);
  }

  double top_eigenvalue(const Eigen::VectorXd& u) {
    solver_.compute(build(u), Eigen::EigenvaluesOnly);
    return solver_.eigenvalues()(n_ - 1);
  }

  std::size_t evaluations = 0;

 private:
  const Problem& p_;
  const std::vector<Term>& terms_;
  Eigen::Index n_;
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver_;
};

template <class Scalar>
double bfgs(const Problem& problem, const std::vector<Term>& terms, Eigen::VectorXd& u,
            const BruteForceBudget& budget) {
  Objective<Scalar> G(problem, terms);
  const Eigen::Index k = u.size();
  Eigen::VectorXd g(k), gn(k);
  double f = G(u, &g);
  if (!std::isfinite(f)) return kInf;
  Eigen::MatrixXd H = Eigen::MatrixXd::Identity(k, k);
  int stall = 0;
  for (int it = 0; it < budget.max_iterations; ++it) {
    if (g.norm() < 1e-12) break;
    Eigen::VectorXd d = -H * g;
    double slope = g.dot(d);
    if (!(slope < 0.0)) {
      H.setIdentity();
      d = -g;
      slope = -g.squaredNorm();
    }
    double step = std::min(1.0, 8.0 / d.cwiseAbs().maxCoeff());
    Eigen::VectorXd un;
    double fn = kInf;
    bool accepted = false;
    for (int ls = 0; ls < 60; ++ls) {
      un = u + step * d;
      fn = G(un, &gn);
      if (std::isfinite(fn) && fn <= f + 1e-4 * step * slope) {
        accepted = true;
        break;
      }
      step *= 0.5;
    }
    if (!accepted) break;
    const Eigen::VectorXd s = un - u;
    const Eigen::VectorXd y = gn - g;
    const double sy = s.dot(y);
    if (sy > 1e-12 * s.norm() * y.norm()) {
      const double rho = 1.0 / sy;
      const Eigen::VectorXd Hy = H * y;
      H += ((1.0 + rho * y.dot(Hy)) * rho) * (s * s.transpose()) - rho * (Hy * s.transpose() + s * Hy.transpose());
    }
    const double gain = f - fn;
    u = un;
    f = fn;
    g = gn;
    if (gain < budget.tolerance * (1.0 + std::abs(f))) {
      if (++stall >= 3) break;
    } else {
      stall = 0;
    }
  }
  return f;
}

// Removes terms that are negligible next to the largest magnitude.
void prune(Candidate& c) {
  if (c.terms.empty()) return;
  const double top = c.u.maxCoeff();
  std::vector<Term> kept;
  std::vector<double> ukept;
  for (std::size_t e = 0; e < c.terms.size(); ++e) {
    if (c.u(static_cast<Eigen::Index>(e)) > top - 25.0) {
      kept.push_back(c.terms[e]);
      ukept.push_back(c.u(static_cast<Eigen::Index>(e)));
    }
  }
  c.terms = std::move(kept);
  c.u = Eigen::Map<Eigen::VectorXd>(ukept.data(), static_cast<Eigen::Index>(ukept.size()));
}

template <class Scalar>
void reoptimize(const Problem& problem, Candidate& c, const BruteForceBudget& budget) {
  if (c.terms.empty()) {
    c.value = kInf;
    return;
  }
  c.value = bfgs<Scalar>(problem, c.terms, c.u, budget);
  const std::size_t before = c.terms.size();
  prune(c);
  if (c.terms.size() != before) c.value = bfgs<Scalar>(problem, c.terms, c.u, budget);
}

bool better(double candidate, double incumbent) {
  return candidate < incumbent - 1e-12 * (1.0 + std::abs(incumbent));
}

// Drop-entry and switch-phase moves until no move improves.
template <class Scalar>
void polish(const Problem& problem, Candidate& best, const BruteForceBudget& budget) {
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t e = 0; e < best.terms.size() && !improved; ++e) {
      Candidate trial = best;
      trial.terms.erase(trial.terms.begin() + static_cast<std::ptrdiff_t>(e));
      Eigen::VectorXd u(trial.terms.size());
      for (Eigen::Index k = 0, src = 0; src < best.u.size(); ++src) {
        if (static_cast<std::size_t>(src) != e) u(k++) = best.u(src);
      }
      trial.u = u;
      reoptimize<Scalar>(problem, trial, budget);
      if (better(trial.value, best.value)) {
        best = std::move(trial);
        improved = true;
      }
    }
    for (std::size_t e = 0; e < best.terms.size() && !improved; ++e) {
      const int options = static_cast<int>(problem.phases_of(best.terms[e].slot).size());
      for (int ph = 0; ph < options && !improved; ++ph) {
        if (ph == best.terms[e].phase) continue;
        Candidate trial = best;
        trial.terms[e].phase = ph;
        reoptimize<Scalar>(problem, trial, budget);
        if (better(trial.value, best.value)) {
          best = std::move(trial);
          improved = true;
        }
      }
    }
  }
}

using Pattern = std::vector<int>;  // phase index per slot

// Equal magnitudes on every slot, equal magnitudes off the diagonal only, or a random sparse start.
enum class StartKind { Uniform, OffDiagonal, Random };

std::vector<Pattern> phase_patterns(const Problem& problem, std::size_t max_patterns, Stream& stream) {
  const std::size_t slots = problem.slots.size();
  double count = 1.0;
  for (std::size_t s = 0; s < slots; ++s) count *= static_cast<double>(problem.phases_of(s).size());
  std::vector<Pattern> out;
  if (count <= static_cast<double>(max_patterns)) {
    Pattern p(slots, 0);
    while (true) {
      out.push_back(p);
      std::size_t s = 0;
      while (s < slots) {
        if (++p[s] < static_cast<int>(problem.phases_of(s).size())) break;
        p[s] = 0;
        ++s;
      }
      if (s == slots) break;
    }
    return out;
  }
  for (std::size_t d = 0; d < problem.diag_phases.size(); ++d) {
    for (std::size_t o = 0; o < problem.off_phases.size(); ++o) {
      Pattern p(slots);
      for (std::size_t s = 0; s < slots; ++s) {
        p[s] = static_cast<int>(problem.slots[s].i == problem.slots[s].j ? d : o);
      }
      out.push_back(p);
    }
  }
  while (out.size() < max_patterns) {
    Pattern p(slots);
    for (std::size_t s = 0; s < slots; ++s) p[s] = static_cast<int>(stream.below(problem.phases_of(s).size()));
    out.push_back(p);
  }
  out.resize(std::min(out.size(), max_patterns));
  return out;
}

template <class Scalar>
Candidate local_search(const Problem& problem, const Pattern& pattern, StartKind start, Stream& stream,
                       const BruteForceBudget& budget, std::size_t& searches) {
  const std::size_t slots = problem.slots.size();
  for (int attempt = 0; attempt < 8; ++attempt) {
    Candidate c;
    c.n = problem.n;
    const double keep = start == StartKind::Random ? stream.uniform(0.25, 1.0) : 1.0;
    for (std::size_t s = 0; s < slots; ++s) {
      const bool diagonal = problem.slots[s].i == problem.slots[s].j;
      if (start == StartKind::OffDiagonal && diagonal && problem.n > 1) continue;
      if (start != StartKind::Random || stream.bernoulli(keep)) c.terms.push_back({s, pattern[s]});
    }
    if (c.terms.empty()) c.terms.push_back({stream.below(slots), 0});
    for (Term& t : c.terms) t.phase = pattern[t.slot];
    c.u.resize(static_cast<Eigen::Index>(c.terms.size()));
    for (Eigen::Index e = 0; e < c.u.size(); ++e) c.u(e) = start == StartKind::Random ? stream.normal() : 0.0;
    Objective<Scalar> probe(problem, c.terms);
    if (!std::isfinite(probe(c.u, nullptr))) continue;
    ++searches;
    reoptimize<Scalar>(problem, c, budget);
    return c;
  }
  return {};
}

template <class Scalar>
BruteForceResult search(const TailParams& params, int max_n, std::uint64_t seed, const BruteForceBudget& budget) {
  std::vector<Problem> problems;
  for (int n = 1; n <= max_n; ++n) {
    problems.push_back({static_cast<std::size_t>(n), upper_slots(static_cast<std::size_t>(n)), params.nu1_support,
                        params.nu2_support, params.alpha, params.a, params.b});
  }
  struct Task {
    std::size_t problem;
    std::size_t pattern;
    int restart;
  };
  std::vector<std::vector<Pattern>> patterns;
  std::vector<Task> tasks;
  std::size_t pattern_total = 0;
  for (std::size_t p = 0; p < problems.size(); ++p) {
    Stream ps = Stream::split(splitmix64(seed ^ 0x9e3779b97f4a7c15ULL), p);
    patterns.push_back(phase_patterns(problems[p], budget.max_patterns, ps));
    pattern_total += patterns.back().size();
    for (std::size_t k = 0; k < patterns.back().size(); ++k) {
      for (int r = 0; r < budget.restarts; ++r) tasks.push_back({p, k, r});
    }
  }

  std::vector<Candidate> results(tasks.size());
  std::vector<std::size_t> searches(tasks.size(), 0);
  parallel_for(tasks.size(), budget.threads, [&](std::size_t t) {
    Stream stream = Stream::split(seed, t);
    const Task& task = tasks[t];
    results[t] = local_search<Scalar>(problems[task.problem], patterns[task.problem][task.pattern],
                                      task.restart == 0   ? StartKind::Uniform
                                      : task.restart == 1 ? StartKind::OffDiagonal
                                                          : StartKind::Random,
                                      stream, budget, searches[t]);
  });

  // Best few optima per size, in task order so ties resolve the same way every run.
  std::vector<Candidate> shortlist;
  for (std::size_t p = 0; p < problems.size(); ++p) {
    std::vector<std::size_t> idx;
    for (std::size_t t = 0; t < tasks.size(); ++t) {
      if (tasks[t].problem == p && std::isfinite(results[t].value)) idx.push_back(t);
    }
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t x, std::size_t y) { return results[x].value < results[y].value; });
    for (std::size_t k = 0; k < std::min(budget.polish_candidates, idx.size()); ++k) {
      shortlist.push_back(results[idx[k]]);
    }
  }
  if (shortlist.empty()) {
    throw ValidationError("brute_force_c: no matrix of size <= " + std::to_string(max_n) +
                          " with positive top eigenvalue fits the supports");
  }
  parallel_for(shortlist.size(), budget.threads, [&](std::size_t k) {
    polish<Scalar>(problems[shortlist[k].n - 1], shortlist[k], budget);
  });

  std::size_t best = 0;
  for (std::size_t k = 1; k < shortlist.size(); ++k) {
    if (better(shortlist[k].value, shortlist[best].value)) best = k;
  }
  const Candidate& win = shortlist[best];
  const Problem& problem = problems[win.n - 1];
  Objective<Scalar> G(problem, win.terms);
  const double lam = G.top_eigenvalue(win.u);

  SparseHermitian full(win.n);
  for (std::size_t e = 0; e < win.terms.size(); ++e) {
    const Slot& s = problem.slots[win.terms[e].slot];
    std::complex<double> z = problem.phase(win.terms[e]) * (std::exp(win.u(static_cast<Eigen::Index>(e))) / lam);
    if (s.i == s.j) z = z.real();
    full.set(s.i, s.j, z);
  }
  // Drop untouched rows so the reported size is the support size.
  const auto rows = full.touched_rows();
  std::vector<std::size_t> relabel(win.n, 0);
  for (std::size_t k = 0; k < rows.size(); ++k) relabel[rows[k]] = k;

  BruteForceResult out;
  out.c = std::exp(win.value);
  out.argmin = SparseHermitian(std::max<std::size_t>(1, rows.size()));
  for (const auto& [ij, z] : full.entries()) out.argmin.set(relabel[ij.first], relabel[ij.second], z);
  out.patterns = pattern_total;
  out.local_searches = std::accumulate(searches.begin(), searches.end(), std::size_t{0});
  return out;
}

bool all_real(const PhaseSet& support) {
  return std::all_of(support.begin(), support.end(), [](Phase z) { return std::abs(z.imag()) < 1e-12; });
}

}  // namespace

BruteForceResult brute_force_c(const TailParams& params, int max_n, std::uint64_t seed,
                               const BruteForceBudget& budget) {
  params.validate();
  if (max_n < 1 || max_n > 6) throw ValidationError("brute_force_c: max_n must lie in [1, 6]");
  if (budget.restarts < 1 || budget.max_patterns < 1 || budget.max_iterations < 1) {
    throw ValidationError("brute_force_c: budget entries must be positive");
  }
  if (all_real(params.nu1_support) && all_real(params.nu2_support)) {
    return search<double>(params, max_n, seed, budget);
  }
  return search<std::complex<double>>(params, max_n, seed, budget);
}

}  // namespace htldp
