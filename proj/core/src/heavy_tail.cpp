#include "htldp/heavy_tail.hpp"

#include <cmath>
#include <limits>

#include "htldp/errors.hpp"

namespace htldp {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::complex<double> support_mean(const PhaseSet& support) {
  std::complex<double> m{0.0, 0.0};
  for (const Phase& z : support) m += z;
  return m / static_cast<double>(support.size());
}

const Phase& pick(const PhaseSet& support, Stream& stream) {
  return support[support.size() == 1 ? 0 : stream.below(support.size())];
}

// Weibull variate with shape alpha and scale `scale`: P(W > t) = exp(−(t/scale)^alpha).
double weibull(double alpha, double scale, Stream& stream) {
  return scale * std::pow(-std::log(stream.uniform_pos()), 1.0 / alpha);
}

bool is_quarter_turns(const PhaseSet& support) {
  return support.size() == 4 && support_contains(support, {1.0, 0.0}) &&
         support_contains(support, {-1.0, 0.0}) && support_contains(support, {0.0, 1.0}) &&
         support_contains(support, {0.0, -1.0});
}

}  // namespace

std::string to_string(LawKind kind) {
  switch (kind) {
    case LawKind::SymmetricWeibull: return "weibull";
    case LawKind::Mixture: return "mixture";
    case LawKind::Rademacher: return "rademacher";
  }
  return "unknown";
}

LawKind parse_law_kind(const std::string& name) {
  if (name == "weibull") return LawKind::SymmetricWeibull;
  if (name == "mixture") return LawKind::Mixture;
  if (name == "rademacher") return LawKind::Rademacher;
  throw ValidationError("unknown entry law '" + name + "' (expected weibull, mixture or rademacher)");
}

EntrySampler::EntrySampler(TailParams params, LawKind kind, double tail_weight)
    : params_(std::move(params)), kind_(kind) {
  params_.validate();
  const double alpha = params_.alpha;
  diag_scale_ = std::pow(params_.b, -1.0 / alpha);

  switch (kind_) {
    case LawKind::SymmetricWeibull: {
      const double unit = 1.0 / std::sqrt(std::tgamma(1.0 + 2.0 / alpha));
      if (params_.complex_entries) {
        if (!is_quarter_turns(params_.nu2_support)) {
          throw ValidationError(
              "symmetric Weibull with complex entries has angle support {1, i, -1, -i}; "
              "use the mixture law for other supports");
        }
        offdiag_scale_ = unit / std::sqrt(2.0);
      } else {
        if (std::abs(support_mean(params_.nu2_support)) > 1e-12) {
          throw ValidationError(
              "symmetric Weibull needs a centred off-diagonal angle support; "
              "use the mixture law for one-sided supports");
        }
        offdiag_scale_ = unit;
      }
      break;
    }
    case LawKind::Mixture: {
      offdiag_scale_ = std::pow(params_.a, -1.0 / alpha);
      const double second = std::tgamma(1.0 + 2.0 / alpha) * offdiag_scale_ * offdiag_scale_;
      const std::complex<double> first =
          std::tgamma(1.0 + 1.0 / alpha) * offdiag_scale_ * support_mean(params_.nu2_support);
      tail_weight_ = tail_weight > 0.0 ? tail_weight : std::min(0.05, 0.25 / second);
      if (!(tail_weight_ < 1.0)) throw ValidationError("mixture tail weight must lie in (0, 1)");
      const double q = tail_weight_;
      bulk_mean_ = -q * first / (1.0 - q);
      const double r2 = (1.0 - q * second) / (1.0 - q) - std::norm(bulk_mean_);
      if (r2 < 0.0) {
        throw ValidationError("mixture tail weight too large for unit variance; lower it");
      }
      bulk_radius_ = std::sqrt(r2);
      break;
    }
    case LawKind::Rademacher:
      break;
  }
}

double EntrySampler::sample_diagonal(Stream& stream) const {
  if (kind_ == LawKind::Rademacher) return stream.rademacher();
  const double sign = pick(params_.nu1_support, stream).real();
  return sign * weibull(params_.alpha, diag_scale_, stream);
}

std::complex<double> EntrySampler::sample_offdiagonal(Stream& stream) const {
  switch (kind_) {
    case LawKind::SymmetricWeibull: {
      if (params_.complex_entries) {
        const double re = stream.rademacher() * weibull(params_.alpha, offdiag_scale_, stream);
        const double im = stream.rademacher() * weibull(params_.alpha, offdiag_scale_, stream);
        return {re, im};
      }
      const Phase& z = pick(params_.nu2_support, stream);
      return z * weibull(params_.alpha, offdiag_scale_, stream);
    }
    case LawKind::Mixture: {
      if (stream.bernoulli(tail_weight_)) {
        const Phase& z = pick(params_.nu2_support, stream);
        return z * weibull(params_.alpha, offdiag_scale_, stream);
      }
      if (params_.complex_entries) {
        const std::complex<double> zeta(stream.rademacher(), stream.rademacher());
        return bulk_mean_ + bulk_radius_ * zeta / std::sqrt(2.0);
      }
      return bulk_mean_ + bulk_radius_ * stream.rademacher();
    }
    case LawKind::Rademacher: {
      if (params_.complex_entries) {
        const std::complex<double> zeta(stream.rademacher(), stream.rademacher());
        return zeta / std::sqrt(2.0);
      }
      return stream.rademacher();
    }
  }
  return {};
}

double EntrySampler::diagonal_tail_constant() const noexcept {
  return kind_ == LawKind::Rademacher ? kInf : params_.b;
}

double EntrySampler::offdiagonal_tail_constant() const noexcept {
  const double alpha = params_.alpha;
  switch (kind_) {
    case LawKind::SymmetricWeibull: {
      const double g = std::tgamma(1.0 + 2.0 / alpha);
      return std::pow(params_.complex_entries ? 2.0 * g : g, alpha / 2.0);
    }
    case LawKind::Mixture: return params_.a;
    case LawKind::Rademacher: return kInf;
  }
  return kInf;
}

double EntrySampler::entry_bound() const noexcept {
  return kind_ == LawKind::Rademacher ? 1.0 : kInf;
}

std::complex<double> sample_entry_distribution(const EntrySampler& sampler, EntryRole role,
                                               Stream& stream) {
  switch (role) {
    case EntryRole::Diagonal: return sampler.sample_diagonal(stream);
    case EntryRole::OffDiagonal: return sampler.sample_offdiagonal(stream);
  }
  throw ValidationError("invalid entry role");
}

namespace {

template <class Scalar>
Scalar to_scalar(std::complex<double> z) {
  if constexpr (std::is_same_v<Scalar, double>) {
    return z.real();
  } else {
    return z;
  }
}

}  // namespace

template <class Scalar>
Matrix<Scalar> sample_wigner_raw(std::size_t n, const EntrySampler& sampler, Stream& stream) {
  if (n == 0) throw ValidationError("sample_wigner: N must be positive");
  if constexpr (std::is_same_v<Scalar, double>) {
    if (sampler.complex_entries()) {
      throw ValidationError("sample_wigner: complex entry law needs a complex matrix");
    }
  }
  const auto N = static_cast<Eigen::Index>(n);
  Matrix<Scalar> X(N, N);
  for (Eigen::Index i = 0; i < N; ++i) {
    X(i, i) = Scalar(sampler.sample_diagonal(stream));
    for (Eigen::Index j = i + 1; j < N; ++j) {
      const Scalar v = to_scalar<Scalar>(sampler.sample_offdiagonal(stream));
      X(i, j) = v;
      X(j, i) = Eigen::numext::conj(v);
    }
  }
  return X;
}

template <class Scalar>
Matrix<Scalar> normalize_wigner(const Matrix<Scalar>& raw) {
  const double inv = 1.0 / std::sqrt(static_cast<double>(raw.rows()));
  return raw * inv;
}

template <class Scalar>
Matrix<Scalar> sample_wigner(std::size_t n, const EntrySampler& sampler, Stream& stream) {
  return normalize_wigner(sample_wigner_raw<Scalar>(n, sampler, stream));
}

void DecompositionThresholds::validate(double alpha) const {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw ValidationError("epsilon must lie in (0, 1]");
  if (!(d > 0.0 && d * alpha > 1.0)) throw ValidationError("d must be positive with d*alpha > 1");
}

CutPoints cut_points(std::size_t n, const DecompositionThresholds& thresholds) {
  const double N = static_cast<double>(n);
  const double root = std::sqrt(N);
  return {std::pow(std::log(N), thresholds.d), thresholds.epsilon * root, root / thresholds.epsilon};
}

Part classify_entry(double sup_abs, const CutPoints& cuts) noexcept {
  if (sup_abs <= cuts.small) return Part::A;
  if (sup_abs < cuts.medium_low) return Part::B;
  if (sup_abs <= cuts.medium_high) return Part::C;
  return Part::D;
}

template <class Scalar>
Decomposition<Scalar> decompose(const Matrix<Scalar>& raw, const DecompositionThresholds& thresholds,
                                double alpha) {
  if (raw.rows() != raw.cols()) throw ValidationError("decompose: matrix is not square");
  if (raw.rows() < 2) throw ValidationError("decompose: N must be at least 2");
  thresholds.validate(alpha);
  const auto N = raw.rows();
  const Matrix<Scalar> normalized = normalize_wigner(raw);
  Decomposition<Scalar> dec;
  dec.cuts = cut_points(static_cast<std::size_t>(N), thresholds);
  dec.A = Matrix<Scalar>::Zero(N, N);
  dec.B = Matrix<Scalar>::Zero(N, N);
  dec.C = Matrix<Scalar>::Zero(N, N);
  dec.D = Matrix<Scalar>::Zero(N, N);
  for (Eigen::Index j = 0; j < N; ++j) {
    for (Eigen::Index i = 0; i < N; ++i) {
      Matrix<Scalar>* target = nullptr;
      switch (classify_entry(sup_norm(raw(i, j)), dec.cuts)) {
        case Part::A: target = &dec.A; break;
        case Part::B: target = &dec.B; break;
        case Part::C: target = &dec.C; break;
        case Part::D: target = &dec.D; break;
      }
      (*target)(i, j) = normalized(i, j);
    }
  }
  return dec;
}

template <class Scalar>
std::size_t count_C_entries(const Decomposition<Scalar>& dec) {
  std::size_t count = 0;
  for (Eigen::Index j = 0; j < dec.C.cols(); ++j) {
    for (Eigen::Index i = 0; i < dec.C.rows(); ++i) {
      if (dec.C(i, j) != Scalar(0)) ++count;
    }
  }
  return count;
}

#define HTLDP_INSTANTIATE(S)                                                                   \
  template Matrix<S> sample_wigner_raw<S>(std::size_t, const EntrySampler&, Stream&);          \
  template Matrix<S> normalize_wigner<S>(const Matrix<S>&);                                    \
  template Matrix<S> sample_wigner<S>(std::size_t, const EntrySampler&, Stream&);              \
  template Decomposition<S> decompose<S>(const Matrix<S>&, const DecompositionThresholds&,     \
                                         double);                                              \
  template std::size_t count_C_entries<S>(const Decomposition<S>&);

HTLDP_INSTANTIATE(double)
HTLDP_INSTANTIATE(std::complex<double>)

#undef HTLDP_INSTANTIATE

}  // namespace htldp
