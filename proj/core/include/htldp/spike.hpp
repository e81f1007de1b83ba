#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "htldp/linalg.hpp"

namespace htldp {

/// Rank-k perturbation Σ θ_i u_i u_i* with nonzero θ in nondecreasing order and
/// orthonormal u_i stored as the columns of `vectors`.
struct SpikeSpec {
  std::vector<double> thetas;
  ComplexMatrix vectors;

  std::size_t rank() const noexcept { return thetas.size(); }
  /// Throws ValidationError unless the invariants hold for dimension n.
  void validate(std::size_t n) const;
  ComplexMatrix perturbation() const;

  /// Nonzero eigenpairs of a Hermitian C (|eigenvalue| > tol·max(1, ‖C‖)).
  static SpikeSpec from_matrix(const ComplexMatrix& C, double tol = 1e-12);
};

/// Lemma-style eigenvalue equation for H + C with C of finite rank.
///
/// H is diagonalized once, H = V diag(w) V*, and W = V*U is kept, so
/// ⟨u_i, (x−H)⁻¹ u_j⟩ = Σ_m conj(W_mi) W_mj / (x − w_m) costs O(Nk²) per x.
class EigenEquation {
 public:
  EigenEquation(const ComplexMatrix& H, SpikeSpec spike);
  EigenEquation(const RealMatrix& H, SpikeSpec spike);

  double spectrum_top() const noexcept { return w_(w_.size() - 1); }
  /// Smallest admissible x: λ_max(H) + 1e−9·(1 + |λ_max(H)|).
  double min_x() const noexcept;
  const SpikeSpec& spike() const noexcept { return spike_; }

  /// M(x) = I_k − (θ_i ⟨u_i, (x−H)⁻¹ u_j⟩). Throws DomainError for x < min_x().
  ComplexMatrix matrix(double x) const;
  /// det M(x), which is real.
  double f(double x) const;
  /// Largest zero of f on (min_x(), λ_max(H) + Σθ⁺ + 1], if any sign change exists.
  std::optional<double> largest_zero() const;

 private:
  void init(SpikeSpec spike, std::size_t n);

  Vector<double> w_;
  ComplexMatrix W_;
  SpikeSpec spike_;
};

ComplexMatrix eigen_equation_matrix(const EigenEquation& eq, double x);
double f_N(const EigenEquation& eq, double x);

/// Π_i (1 − θ_i G(x)) for x ≥ 2.
double limit_f(const std::vector<double>& thetas, double x);

/// Scans 2048 points of [lo, hi] (half uniform, half geometric towards lo) for
/// the rightmost sign change and bisects it to 1e−12 relative width.
/// Returns nullopt without a sign change; exact zeros on the grid are returned as is.
/// Throws ValidationError unless lo < hi are finite.
std::optional<double> largest_zero(const std::function<double(double)>& f, double lo, double hi);

/// θ + 1/θ for θ > 1, else 2.
double bbp_outlier(double theta);

/// bbp_outlier(λ_max(C)).
template <class Scalar>
double mu_eps(const Matrix<Scalar>& C);

/// |⟨u, (x−H)⁻¹ v⟩ − ⟨u, v⟩ G(x)| for unit u, v.
///
/// Requires x > 2 and x − λ_max(H) ≥ 1e−9·(1 + |x|), certified by a Cholesky
/// factorization of the shifted matrix; throws DomainError otherwise.
template <class Scalar>
double isotropy_gap(const Matrix<Scalar>& H, const Vector<Scalar>& u, const Vector<Scalar>& v, double x);

}  // namespace htldp
