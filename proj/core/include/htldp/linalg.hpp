#pragma once

#include <complex>

#include <Eigen/Core>

namespace htldp {

template <class Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using RealMatrix = Matrix<double>;
using ComplexMatrix = Matrix<std::complex<double>>;

/// Relative tolerance on ‖H − H*‖_max / max(1, ‖H‖_max) for Hermitian inputs.
inline constexpr double kHermitianTolerance = 1e-12;

/// ‖H − H*‖_max / max(1, ‖H‖_max). Throws ValidationError if H is not square.
template <class Scalar>
double hermitian_deviation(const Matrix<Scalar>& H);

/// Throws ValidationError unless H is square and Hermitian within tolerance.
template <class Scalar>
void require_hermitian(const Matrix<Scalar>& H, const char* where);

/// (H + H*)/2.
template <class Scalar>
Matrix<Scalar> symmetrized(const Matrix<Scalar>& H);

/// Largest eigenvalue of a Hermitian matrix (symmetric eigensolver; exact for diagonal input).
template <class Scalar>
double largest_eigenvalue(const Matrix<Scalar>& H);

/// Smallest eigenvalue of a Hermitian matrix.
template <class Scalar>
double smallest_eigenvalue(const Matrix<Scalar>& H);

/// All eigenvalues in ascending order.
template <class Scalar>
Vector<double> eigenvalues(const Matrix<Scalar>& H);

/// Eigen-decomposition H = V diag(w) V* with ascending w.
template <class Scalar>
struct SpectralDecomposition {
  Vector<double> values;
  Matrix<Scalar> vectors;
};

template <class Scalar>
SpectralDecomposition<Scalar> spectral_decomposition(const Matrix<Scalar>& H);

}  // namespace htldp
