#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "htldp/linalg.hpp"

namespace htldp {

/// Finite Hermitian matrix with an explicit support.
///
/// Only the upper triangle (i ≤ j) is stored; (j, i) is the conjugate. Stored
/// values are never zero and diagonal values are real.
class SparseHermitian {
 public:
  using Index = std::pair<std::size_t, std::size_t>;

  explicit SparseHermitian(std::size_t n = 1);

  std::size_t size() const noexcept { return n_; }
  const std::map<Index, std::complex<double>>& entries() const noexcept { return entries_; }

  /// Sets entry (i, j) and, implicitly, (j, i). Zero erases. Throws ValidationError
  /// for out-of-range indices or a non-real diagonal value.
  void set(std::size_t i, std::size_t j, std::complex<double> value);
  std::complex<double> get(std::size_t i, std::size_t j) const;

  /// Rows touched by at least one stored entry, ascending.
  std::vector<std::size_t> touched_rows() const;

  SparseHermitian scaled(double t) const;
  ComplexMatrix to_dense() const;
  /// Entries with |z| ≤ drop_below are left out. Throws unless H is Hermitian.
  static SparseHermitian from_dense(const ComplexMatrix& H, double drop_below = 0.0);

 private:
  std::size_t n_;
  std::map<Index, std::complex<double>> entries_;
};

/// {"size": n, "entries": [[i, j, re, im], ...]}
void to_json(nlohmann::json& j, const SparseHermitian& A);
void from_json(const nlohmann::json& j, SparseHermitian& A);

}  // namespace htldp
