#include "htldp/variational.hpp"

#include <cmath>

#include "htldp/errors.hpp"
#include "htldp/linalg.hpp"

namespace htldp {

namespace {

const Phase kPlus{1.0, 0.0};
const Phase kMinus{-1.0, 0.0};

void require_mid_alpha(double alpha, const char* where) {
  if (!(alpha > 1.0 && alpha < 2.0)) throw DomainError(std::string(where) + ": requires 1 < alpha < 2");
}

// log((2b/a)^{1/(α−1)}), the log of τ/s for s = (1/b)^{1/(α−1)}, τ = (2/a)^{1/(α−1)}.
double log_ratio(const TailParams& p) { return std::log(2.0 * p.b / p.a) / (p.alpha - 1.0); }

// log(1 + m·e^{lr}) without overflow.
double log1p_scaled(double m, double lr) {
  if (m == 0.0) return 0.0;
  if (lr > 0.0) return lr + std::log(m + std::exp(-lr));
  return std::log1p(m * std::exp(lr));
}

// B⁽ⁿ⁾(s, τ) built from the ratio τ/s = e^{lr}, so huge ratios stay representable.
SparseHermitian extremal_from_log_ratio(std::size_t n, double lr) {
  return lr > 0.0 ? extremal_matrix(n, std::exp(-lr), 1.0) : extremal_matrix(n, 1.0, std::exp(lr));
}

SparseHermitian single_diagonal() {
  SparseHermitian A(1);
  A.set(0, 0, 1.0);
  return A;
}

SparseHermitian off_pair(Phase z) {
  SparseHermitian A(2);
  A.set(0, 1, z);
  return A;
}

}  // namespace

double weight_I(const SparseHermitian& A, const TailParams& params) {
  double diag = 0.0;
  double off = 0.0;
  for (const auto& [ij, z] : A.entries()) {
    const double m = std::pow(std::abs(z), params.alpha);
    (ij.first == ij.second ? diag : off) += m;
  }
  return params.b * diag + params.a * off;
}

bool in_domain(const SparseHermitian& A, const TailParams& params) {
  for (const auto& [ij, z] : A.entries()) {
    const Phase phase = z / std::abs(z);
    const PhaseSet& support = ij.first == ij.second ? params.nu1_support : params.nu2_support;
    if (!support_contains(support, phase)) return false;
  }
  return true;
}

double psi(double t, const TailParams& params) {
  params.validate();
  require_mid_alpha(params.alpha, "psi");
  if (!(t >= 1.0)) throw DomainError("psi: requires t >= 1");
  const double alpha = params.alpha;
  return t * params.b * std::exp(-(alpha - 1.0) * log1p_scaled(t - 1.0, log_ratio(params)));
}

double t0(const TailParams& params) {
  params.validate();
  require_mid_alpha(params.alpha, "t0");
  return (1.0 - std::exp(-log_ratio(params))) / (2.0 - params.alpha);
}

double phi(double t, double alpha) {
  require_mid_alpha(alpha, "phi");
  if (!(t >= 2.0)) throw DomainError("phi: requires t >= 2");
  return t / std::pow(t - 1.0, alpha - 1.0);
}

double t1(double alpha) {
  require_mid_alpha(alpha, "t1");
  return 1.0 / (2.0 - alpha);
}

SparseHermitian extremal_matrix(std::size_t n, double s, double t) {
  if (n == 0) throw DomainError("extremal_matrix: n must be positive");
  if (!(s >= 0.0 && t >= 0.0) || (s == 0.0 && t == 0.0) || !std::isfinite(s) || !std::isfinite(t)) {
    throw DomainError("extremal_matrix: s, t must be finite, nonnegative and not both zero");
  }
  const double den = s + static_cast<double>(n - 1) * t;
  SparseHermitian B(n);
  for (std::size_t i = 0; i < n; ++i) {
    B.set(i, i, s / den);
    for (std::size_t j = i + 1; j < n; ++j) B.set(i, j, t / den);
  }
  return B;
}

ClosedFormResult closed_form_c(const TailParams& params) {
  params.validate();
  const double alpha = params.alpha;
  const double a = params.a;
  const double b = params.b;
  const bool one_in_nu1 = support_contains(params.nu1_support, kPlus);
  const bool one_in_nu2 = support_contains(params.nu2_support, kPlus);
  const bool nu1_neg = support_is_only(params.nu1_support, kMinus);
  const bool nu2_neg = support_is_only(params.nu2_support, kMinus);

  ClosedFormResult out;
  if (alpha <= 1.0) {
    out.case_label = "a";
    if (one_in_nu1 && b <= a) {
      out.c = b;
      out.witness = single_diagonal();
    } else {
      out.c = a;
      out.witness = off_pair(params.nu2_support.front());
    }
    return out;
  }
  if (one_in_nu1 && b <= a / 2.0) {
    out.case_label = "b";
    out.c = b;
    out.witness = single_diagonal();
    return out;
  }
  if (one_in_nu1 && one_in_nu2) {
    out.case_label = "c";
    const double t = t0(params);
    const double lo = std::max(1.0, std::floor(t));
    const double hi = std::max(1.0, std::ceil(t));
    const double psi_lo = psi(lo, params);
    const double psi_hi = psi(hi, params);
    const double k = psi_hi < psi_lo ? hi : lo;
    out.c = std::min(psi_lo, psi_hi);
    out.witness = extremal_from_log_ratio(static_cast<std::size_t>(k), log_ratio(params));
    return out;
  }
  if (one_in_nu1 && nu2_neg) {
    out.case_label = "d";
    const double lr = log_ratio(params);
    const double pair = 2.0 * b * std::exp(-(alpha - 1.0) * log1p_scaled(1.0, lr));
    if (b <= pair) {
      out.c = b;
      out.witness = single_diagonal();
    } else {
      out.c = pair;
      out.witness = extremal_from_log_ratio(2, lr);
      out.witness.set(0, 1, -out.witness.get(0, 1));
    }
    return out;
  }
  if (nu1_neg && one_in_nu2) {
    out.case_label = "e";
    const double t = t1(alpha);
    const double lo = std::max(2.0, std::floor(t));
    const double hi = std::max(2.0, std::ceil(t));
    const double phi_lo = phi(lo, alpha);
    const double phi_hi = phi(hi, alpha);
    const double n = phi_hi < phi_lo ? hi : lo;
    out.c = 0.5 * a * std::min(phi_lo, phi_hi);
    out.witness = extremal_matrix(static_cast<std::size_t>(n), 0.0, 1.0);
    return out;
  }
  if (nu1_neg && nu2_neg) {
    out.case_label = "f";
    out.c = a;
    out.witness = off_pair(kMinus);
    return out;
  }
  throw UnsupportedConfiguration("no closed form for nu1 = {" + format_support(params.nu1_support) +
                                 "}, nu2 = {" + format_support(params.nu2_support) +
                                 "} with alpha > 1; use the brute-force search");
}

nlohmann::json witness_report(const SparseHermitian& witness, const TailParams& params,
                              const std::string& case_label) {
  nlohmann::json j = witness;
  j["weight"] = weight_I(witness, params);
  j["lambda_max"] = largest_eigenvalue(witness.to_dense());
  j["case"] = case_label;
  return j;
}

}  // namespace htldp
