#include "htldp/sparse_hermitian.hpp"

#include <set>
#include <string>

#include "htldp/errors.hpp"

namespace htldp {

SparseHermitian::SparseHermitian(std::size_t n) : n_(n) {
  if (n == 0) throw ValidationError("SparseHermitian: size must be at least 1");
}

void SparseHermitian::set(std::size_t i, std::size_t j, std::complex<double> value) {
  if (i >= n_ || j >= n_) throw ValidationError("SparseHermitian: index out of range");
  if (i > j) {
    std::swap(i, j);
    value = std::conj(value);
  }
  if (i == j && value.imag() != 0.0) throw ValidationError("SparseHermitian: diagonal entries are real");
  if (value == std::complex<double>(0.0, 0.0)) {
    entries_.erase({i, j});
  } else {
    entries_[{i, j}] = value;
  }
}

std::complex<double> SparseHermitian::get(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) throw ValidationError("SparseHermitian: index out of range");
  const bool swapped = i > j;
  if (swapped) std::swap(i, j);
  const auto it = entries_.find({i, j});
  if (it == entries_.end()) return {};
  return swapped ? std::conj(it->second) : it->second;
}

std::vector<std::size_t> SparseHermitian::touched_rows() const {
  std::set<std::size_t> rows;
  for (const auto& [ij, z] : entries_) {
    rows.insert(ij.first);
    rows.insert(ij.second);
  }
  return {rows.begin(), rows.end()};
}

SparseHermitian SparseHermitian::scaled(double t) const {
  SparseHermitian out(n_);
  for (const auto& [ij, z] : entries_) out.set(ij.first, ij.second, t * z);
  return out;
}

ComplexMatrix SparseHermitian::to_dense() const {
  const auto n = static_cast<Eigen::Index>(n_);
  ComplexMatrix H = ComplexMatrix::Zero(n, n);
  for (const auto& [ij, z] : entries_) {
    const auto i = static_cast<Eigen::Index>(ij.first);
    const auto j = static_cast<Eigen::Index>(ij.second);
    H(i, j) = z;
    H(j, i) = std::conj(z);
  }
  return H;
}

SparseHermitian SparseHermitian::from_dense(const ComplexMatrix& H, double drop_below) {
  require_hermitian(H, "SparseHermitian::from_dense");
  SparseHermitian out(static_cast<std::size_t>(H.rows()));
  for (Eigen::Index i = 0; i < H.rows(); ++i) {
    for (Eigen::Index j = i; j < H.cols(); ++j) {
      std::complex<double> z = H(i, j);
      if (i == j) z = z.real();
      if (std::abs(z) > drop_below) out.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), z);
    }
  }
  return out;
}

void to_json(nlohmann::json& j, const SparseHermitian& A) {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& [ij, z] : A.entries()) list.push_back({ij.first, ij.second, z.real(), z.imag()});
  j = {{"size", A.size()}, {"entries", list}};
}

void from_json(const nlohmann::json& j, SparseHermitian& A) {
  A = SparseHermitian(j.at("size").get<std::size_t>());
  for (const auto& e : j.at("entries")) {
    A.set(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(),
          {e.at(2).get<double>(), e.at(3).get<double>()});
  }
}

}  // namespace htldp
