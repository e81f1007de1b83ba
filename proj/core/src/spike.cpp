#include "htldp/spike.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <Eigen/Cholesky>
#include <Eigen/LU>

#include "htldp/errors.hpp"
#include "htldp/semicircle.hpp"

namespace htldp {

void SpikeSpec::validate(std::size_t n) const {
  const auto k = static_cast<Eigen::Index>(thetas.size());
  if (vectors.rows() != static_cast<Eigen::Index>(n) || vectors.cols() != k) {
    throw ValidationError("SpikeSpec: vectors must be N x k");
  }
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    if (!std::isfinite(thetas[i]) || thetas[i] == 0.0) throw ValidationError("SpikeSpec: thetas must be finite and nonzero");
    if (i > 0 && thetas[i] < thetas[i - 1]) throw ValidationError("SpikeSpec: thetas must be nondecreasing");
  }
  const ComplexMatrix gram = vectors.adjoint() * vectors;
  const ComplexMatrix eye = ComplexMatrix::Identity(k, k);
  if (k > 0 && (gram - eye).cwiseAbs().maxCoeff() >= 1e-10) {
    throw ValidationError("SpikeSpec: vectors are not orthonormal");
  }
}

ComplexMatrix SpikeSpec::perturbation() const {
  ComplexMatrix C = ComplexMatrix::Zero(vectors.rows(), vectors.rows());
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    const auto u = vectors.col(static_cast<Eigen::Index>(i));
    C += thetas[i] * (u * u.adjoint());
  }
  return C;
}

SpikeSpec SpikeSpec::from_matrix(const ComplexMatrix& C, double tol) {
  const auto dec = spectral_decomposition(C);
  const double scale = std::max(1.0, dec.values.cwiseAbs().maxCoeff());
  SpikeSpec out;
  std::vector<Eigen::Index> keep;
  for (Eigen::Index m = 0; m < dec.values.size(); ++m) {
    if (std::abs(dec.values(m)) > tol * scale) keep.push_back(m);
  }
  out.vectors.resize(C.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) {
    out.thetas.push_back(dec.values(keep[i]));
    out.vectors.col(static_cast<Eigen::Index>(i)) = dec.vectors.col(keep[i]);
  }
  return out;
}

EigenEquation::EigenEquation(const ComplexMatrix& H, SpikeSpec spike) {
  const auto dec = spectral_decomposition(H);
  w_ = dec.values;
  spike.validate(static_cast<std::size_t>(H.rows()));
  W_ = dec.vectors.adjoint() * spike.vectors;
  spike_ = std::move(spike);
}

EigenEquation::EigenEquation(const RealMatrix& H, SpikeSpec spike) {
  const auto dec = spectral_decomposition(H);
  w_ = dec.values;
  spike.validate(static_cast<std::size_t>(H.rows()));
  W_ = dec.vectors.cast<std::complex<double>>().adjoint() * spike.vectors;
  spike_ = std::move(spike);
}

double EigenEquation::min_x() const noexcept {
  const double top = spectrum_top();
  return top + 1e-9 * (1.0 + std::abs(top));
}

ComplexMatrix EigenEquation::matrix(double x) const {
  if (!(x >= min_x())) throw DomainError("eigen_equation_matrix: x is inside or too close to the spectrum of H");
  const auto k = static_cast<Eigen::Index>(spike_.rank());
  const Vector<double> inv = (x - w_.array()).inverse().matrix();
  const ComplexMatrix K = W_.adjoint() * inv.asDiagonal() * W_;
  ComplexMatrix M = ComplexMatrix::Identity(k, k);
  for (Eigen::Index i = 0; i < k; ++i) M.row(i) -= spike_.thetas[static_cast<std::size_t>(i)] * K.row(i);
  return M;
}

double EigenEquation::f(double x) const {
  if (spike_.rank() == 0) {
    if (!(x >= min_x())) throw DomainError("f_N: x is inside or too close to the spectrum of H");
    return 1.0;
  }
  return matrix(x).determinant().real();
}

std::optional<double> EigenEquation::largest_zero() const {
  double positive = 0.0;
  for (double t : spike_.thetas) positive += std::max(t, 0.0);
  const double lo = min_x();
  return htldp::largest_zero([this](double x) { return f(x); }, lo, spectrum_top() + positive + 1.0);
}

ComplexMatrix eigen_equation_matrix(const EigenEquation& eq, double x) { return eq.matrix(x); }

double f_N(const EigenEquation& eq, double x) { return eq.f(x); }

double limit_f(const std::vector<double>& thetas, double x) {
  const double g = stieltjes(x);
  double out = 1.0;
  for (double t : thetas) out *= 1.0 - t * g;
  return out;
}

std::optional<double> largest_zero(const std::function<double(double)>& f, double lo, double hi) {
  if (!(std::isfinite(lo) && std::isfinite(hi) && lo < hi)) throw ValidationError("largest_zero: invalid bracket");
  constexpr int kHalf = 1024;
  std::vector<double> grid;
  grid.reserve(2 * kHalf);
  const double span = hi - lo;
  for (int i = 0; i < kHalf; ++i) grid.push_back(lo + span * i / (kHalf - 1));
  for (int i = 0; i < kHalf; ++i) grid.push_back(lo + span * std::pow(10.0, -12.0 * (kHalf - i) / kHalf));
  std::sort(grid.begin(), grid.end());
  grid.erase(std::unique(grid.begin(), grid.end()), grid.end());

  double right = grid.back();
  double f_right = f(right);
  if (f_right == 0.0) return right;
  for (auto it = grid.rbegin() + 1; it != grid.rend(); ++it) {
    const double left = *it;
    const double f_left = f(left);
    if (f_left == 0.0) return left;
    if (std::signbit(f_left) != std::signbit(f_right)) {
      double a = left;
      double b = right;
      const bool neg_left = std::signbit(f_left);
      while (b - a > 1e-12 * std::max(1.0, std::abs(b))) {
        const double mid = 0.5 * (a + b);
        if (mid <= a || mid >= b) break;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        (std::signbit(fm) == neg_left ? a : b) = mid;
      }
      return 0.5 * (a + b);
    }
    right = left;
    f_right = f_left;
  }
  return std::nullopt;
}

double bbp_outlier(double theta) {
  if (std::isnan(theta)) return theta;
  return theta > 1.0 ? theta + 1.0 / theta : 2.0;
}

template <class Scalar>
double mu_eps(const Matrix<Scalar>& C) {
  return bbp_outlier(largest_eigenvalue(C));
}

template <class Scalar>
double isotropy_gap(const Matrix<Scalar>& H, const Vector<Scalar>& u, const Vector<Scalar>& v, double x) {
  require_hermitian(H, "isotropy_gap");
  if (u.size() != H.rows() || v.size() != H.rows()) throw ValidationError("isotropy_gap: vector size mismatch");
  if (std::abs(u.norm() - 1.0) > 1e-10 || std::abs(v.norm() - 1.0) > 1e-10) {
    throw ValidationError("isotropy_gap: u and v must be unit vectors");
  }
  const double margin = 1e-9 * (1.0 + std::abs(x));
  if (!(x > 2.0 + margin)) throw DomainError("isotropy_gap: x must exceed 2");
  // Positive definiteness of (x − margin) − H certifies x − λ_max(H) > margin.
  Matrix<Scalar> shifted = -symmetrized(H);
  shifted.diagonal().array() += Scalar(x - margin);
  Eigen::LLT<Matrix<Scalar>> llt(shifted);
  if (llt.info() != Eigen::Success) throw DomainError("isotropy_gap: x is too close to the spectrum of H");
  // Solve (x − H) y = v with the shifted factor plus two refinement steps.
  Vector<Scalar> y = llt.solve(v);
  for (int step = 0; step < 2; ++step) y = llt.solve(v) - Scalar(margin) * llt.solve(y);
  const std::complex<double> quad = std::complex<double>(u.dot(y));
  const std::complex<double> overlap = std::complex<double>(u.dot(v));
  return std::abs(quad - overlap * stieltjes(x));
}

template double mu_eps<double>(const RealMatrix&);
template double mu_eps<std::complex<double>>(const ComplexMatrix&);
template double isotropy_gap<double>(const RealMatrix&, const Vector<double>&, const Vector<double>&, double);
template double isotropy_gap<std::complex<double>>(const ComplexMatrix&, const Vector<std::complex<double>>&,
                                                   const Vector<std::complex<double>>&, double);

}  // namespace htldp
