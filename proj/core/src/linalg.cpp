#include "htldp/linalg.hpp"

#include <algorithm>
#include <string>

#include <Eigen/Eigenvalues>

#include "htldp/errors.hpp"

namespace htldp {

namespace {

template <class Scalar>
bool is_diagonal(const Matrix<Scalar>& H) {
  for (Eigen::Index j = 0; j < H.cols(); ++j) {
    for (Eigen::Index i = 0; i < H.rows(); ++i) {
      if (i != j && H(i, j) != Scalar(0)) return false;
    }
  }
  return true;
}

}  // namespace

template <class Scalar>
double hermitian_deviation(const Matrix<Scalar>& H) {
  if (H.rows() != H.cols()) throw ValidationError("matrix is not square");
  double dev = 0.0;
  double scale = 1.0;
  for (Eigen::Index j = 0; j < H.cols(); ++j) {
    for (Eigen::Index i = 0; i <= j; ++i) {
      dev = std::max(dev, std::abs(H(i, j) - Eigen::numext::conj(H(j, i))));
      scale = std::max(scale, std::abs(H(i, j)));
    }
  }
  return dev / scale;
}

template <class Scalar>
void require_hermitian(const Matrix<Scalar>& H, const char* where) {
  if (H.rows() == 0) throw ValidationError(std::string(where) + ": empty matrix");
  if (hermitian_deviation(H) > kHermitianTolerance) {
    throw ValidationError(std::string(where) + ": matrix is not Hermitian within tolerance");
  }
}

template <class Scalar>
Matrix<Scalar> symmetrized(const Matrix<Scalar>& H) {
  return (H + H.adjoint()) * 0.5;
}

template <class Scalar>
Vector<double> eigenvalues(const Matrix<Scalar>& H) {
  require_hermitian(H, "eigenvalues");
  if (is_diagonal(H)) {
    Vector<double> d = H.diagonal().real();
    std::sort(d.data(), d.data() + d.size());
    return d;
  }
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(symmetrized(H), Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed to converge");
  return solver.eigenvalues();
}

template <class Scalar>
double largest_eigenvalue(const Matrix<Scalar>& H) {
  const Vector<double> w = eigenvalues(H);
  return w(w.size() - 1);
}

template <class Scalar>
double smallest_eigenvalue(const Matrix<Scalar>& H) {
  return eigenvalues(H)(0);
}

template <class Scalar>
SpectralDecomposition<Scalar> spectral_decomposition(const Matrix<Scalar>& H) {
  require_hermitian(H, "spectral_decomposition");
  Eigen::SelfAdjointEigenSolver<Matrix<Scalar>> solver(symmetrized(H), Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigensolver failed to converge");
  return {solver.eigenvalues(), solver.eigenvectors()};
}

#define HTLDP_INSTANTIATE(S)                                                   \
  template double hermitian_deviation<S>(const Matrix<S>&);                    \
  template void require_hermitian<S>(const Matrix<S>&, const char*);           \
  template Matrix<S> symmetrized<S>(const Matrix<S>&);                         \
  template Vector<double> eigenvalues<S>(const Matrix<S>&);                    \
  template double largest_eigenvalue<S>(const Matrix<S>&);                     \
  template double smallest_eigenvalue<S>(const Matrix<S>&);                    \
  template SpectralDecomposition<S> spectral_decomposition<S>(const Matrix<S>&);

HTLDP_INSTANTIATE(double)
HTLDP_INSTANTIATE(std::complex<double>)

#undef HTLDP_INSTANTIATE

}  // namespace htldp
