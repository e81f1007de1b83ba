#pragma once

#include <cstddef>
#include <string>

#include <nlohmann/json.hpp>

#include "htldp/sparse_hermitian.hpp"
#include "htldp/tail_params.hpp"

namespace htldp {

/// I(A) = b Σ_i |A_ii|^α + a Σ_{i<j} |A_ij|^α. Support constraints are not checked here.
double weight_I(const SparseHermitian& A, const TailParams& params);

/// True iff every stored entry's phase lies in its support (diagonal: ν1, upper triangle: ν2).
bool in_domain(const SparseHermitian& A, const TailParams& params);

/// ψ(t) = t / ((1/b)^{1/(α−1)} + (t−1)(2/a)^{1/(α−1)})^{α−1}, t ≥ 1, α ∈ (1, 2).
/// Evaluated in log space so that it stays finite as α ↓ 1.
double psi(double t, const TailParams& params);
/// t₀ = (1 − (a/(2b))^{1/(α−1)}) / (2 − α), α ∈ (1, 2).
double t0(const TailParams& params);

/// φ(t) = t / (t−1)^{α−1}, t ≥ 2, α ∈ (1, 2).
double phi(double t, double alpha);
/// t₁ = 1 / (2 − α), α ∈ (1, 2).
double t1(double alpha);

/// B⁽ⁿ⁾(s, t): diagonal s/(s+(n−1)t), off-diagonal t/(s+(n−1)t).
/// Requires s, t ≥ 0, not both zero. Largest eigenvalue 1 whenever t ≥ 0.
SparseHermitian extremal_matrix(std::size_t n, double s, double t);

struct ClosedFormResult {
  double c = 0.0;
  SparseHermitian witness;
  std::string case_label;  // "a" … "f"
};

/// Closed-form variational constant with a minimizing matrix.
///
/// Dispatch: α ≤ 1 → (a); 1 ∈ ν1 and b ≤ a/2 → (b); 1 ∈ ν1 ∩ ν2 → (c);
/// 1 ∈ ν1, ν2 = {−1} → (d); ν1 = {−1}, 1 ∈ ν2 → (e); ν1 = ν2 = {−1} → (f).
/// When two candidate sizes tie, the smaller matrix is returned.
/// Throws UnsupportedConfiguration for any other support combination.
ClosedFormResult closed_form_c(const TailParams& params);

/// {"size", "entries", "weight", "lambda_max", "case"} for reports.
nlohmann::json witness_report(const SparseHermitian& witness, const TailParams& params,
                              const std::string& case_label);

}  // namespace htldp
