#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <string>

#include "htldp/linalg.hpp"
#include "htldp/random.hpp"
#include "htldp/tail_params.hpp"

namespace htldp {

enum class EntryRole { Diagonal, OffDiagonal };

/// Concrete entry laws.
///
/// SymmetricWeibull: modulus Weibull of shape α. Diagonal moduli have tail
///   exp(−b t^α) exactly; off-diagonal moduli are rescaled to unit variance,
///   which pins the off-diagonal tail constant to Γ(1+2/α)^(α/2) (real) or
///   (2Γ(1+2/α))^(α/2) (complex, independent real/imaginary parts). The
///   declared `a` is ignored and the effective constant is reported.
/// Mixture: a Weibull tail component with the exact constant `a` mixed with a
///   bounded bulk component that restores mean 0 and variance 1.
/// Rademacher: bounded ±1 entries (no stretched-exponential tail). Used for the
///   bounded-entry experiments.
enum class LawKind { SymmetricWeibull, Mixture, Rademacher };

std::string to_string(LawKind kind);
LawKind parse_law_kind(const std::string& name);

class EntrySampler {
 public:
  /// `tail_weight` is the mixture probability of the tail component; 0 picks
  /// min(0.05, 0.25/E|T|²) automatically. Ignored by the other laws.
  explicit EntrySampler(TailParams params, LawKind kind = LawKind::SymmetricWeibull,
                        double tail_weight = 0.0);

  const TailParams& params() const noexcept { return params_; }
  LawKind kind() const noexcept { return kind_; }
  bool complex_entries() const noexcept { return params_.complex_entries; }

  double sample_diagonal(Stream& stream) const;
  std::complex<double> sample_offdiagonal(Stream& stream) const;

  /// lim −t^(−α) log P(|X_11| > t); +∞ for bounded laws.
  double diagonal_tail_constant() const noexcept;
  /// lim −t^(−α) log P(|X_12| > t); +∞ for bounded laws.
  double offdiagonal_tail_constant() const noexcept;
  /// Sup of |entry|, +∞ unless the law is bounded.
  double entry_bound() const noexcept;
  /// Mixture probability of the tail component (0 for other laws).
  double tail_weight() const noexcept { return tail_weight_; }

 private:
  TailParams params_;
  LawKind kind_;
  double tail_weight_ = 0.0;
  double offdiag_scale_ = 1.0;  // Weibull scale of the off-diagonal modulus (or of each part)
  double diag_scale_ = 1.0;
  std::complex<double> bulk_mean_{0.0, 0.0};
  double bulk_radius_ = 0.0;
};

/// One entry of the given role, as a complex number (imaginary part 0 for real laws).
std::complex<double> sample_entry_distribution(const EntrySampler& sampler, EntryRole role,
                                               Stream& stream);

/// Unnormalized Wigner matrix X: upper triangle drawn row by row (i ≤ j) from
/// `stream`. Scalar must be complex when the sampler has complex entries.
template <class Scalar>
Matrix<Scalar> sample_wigner_raw(std::size_t n, const EntrySampler& sampler, Stream& stream);

/// X/√N, entrywise raw(i,j) * (1/√N).
template <class Scalar>
Matrix<Scalar> normalize_wigner(const Matrix<Scalar>& raw);

/// Normalized Wigner matrix X/√N. Throws ValidationError for N = 0.
template <class Scalar>
Matrix<Scalar> sample_wigner(std::size_t n, const EntrySampler& sampler, Stream& stream);

/// Thresholds of the four-way entry split; 0 < ε ≤ 1 and dα > 1.
struct DecompositionThresholds {
  double epsilon = 0.5;
  double d = 2.0;

  void validate(double alpha) const;
};

/// Absolute cut points (in units of the raw entries) for a given N.
struct CutPoints {
  double small;       // (log N)^d
  double medium_low;  // ε √N
  double medium_high; // √N / ε
};

CutPoints cut_points(std::size_t n, const DecompositionThresholds& thresholds);

/// |z|_∞ = max(|Re z|, |Im z|).
inline double sup_norm(std::complex<double> z) noexcept {
  return std::max(std::abs(z.real()), std::abs(z.imag()));
}
inline double sup_norm(double x) noexcept { return std::abs(x); }

enum class Part { A, B, C, D };

/// Membership of an entry given its raw |X_ij|_∞:
/// A if ≤ (log N)^d, else B if < ε√N, else C if ≤ √N/ε, else D.
Part classify_entry(double sup_abs, const CutPoints& cuts) noexcept;

template <class Scalar>
struct Decomposition {
  Matrix<Scalar> A, B, C, D;
  CutPoints cuts;

  Matrix<Scalar> sum() const { return A + B + C + D; }
};

/// Splits the raw matrix X into A + B + C + D (each normalized by 1/√N).
/// Every normalized entry lands in exactly one part. Throws ValidationError for N < 2.
template <class Scalar>
Decomposition<Scalar> decompose(const Matrix<Scalar>& raw, const DecompositionThresholds& thresholds,
                                double alpha);

/// Number of nonzero entries of C, both triangles counted.
template <class Scalar>
std::size_t count_C_entries(const Decomposition<Scalar>& dec);

}  // namespace htldp
