#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "htldp/heavy_tail.hpp"

namespace htldp {

/// Wilson score interval for `hits` successes in `trials` (95% by default).
struct Interval {
  double low;
  double high;
};
Interval wilson_interval(std::size_t hits, std::size_t trials, double z = 1.959963984540054);

struct TailEstimate {
  double x = 0.0;
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 0.0;
  std::size_t hits = 0;
  std::size_t trials = 0;
};

/// λ_max of `trials` independent normalized Wigner samples of size N.
/// Trial i draws from Stream::split(seed, i), so the output does not depend on `threads`.
std::vector<double> sample_largest_eigenvalues(std::size_t n, std::size_t trials, const EntrySampler& sampler,
                                               std::uint64_t seed, unsigned threads = 0);

/// Fraction of samples strictly above x with its Wilson interval.
TailEstimate tail_from_samples(const std::vector<double>& samples, double x);

/// P(λ_max > x) by naive Monte Carlo. Throws ValidationError for trials = 0.
TailEstimate estimate_tail(std::size_t n, double x, std::size_t trials, const EntrySampler& sampler,
                           std::uint64_t seed, unsigned threads = 0);

enum class PlantKind { Diagonal, OffDiagonal };

struct PlantOptions {
  PlantKind kind = PlantKind::Diagonal;
  /// Zero every unplanted entry with |X_ij|_∞ > (log N)^d, keeping the bounded part only.
  bool truncate = true;
  double d = 2.0;
};

/// λ_max samples of X/√N where X follows the sampler except for a planted block:
/// X_11 = θ√N (diagonal), or X_12 = X_21 = θ√N with X_11 = X_22 = 0 (off-diagonal).
std::vector<double> planted_spike_run(std::size_t n, double theta, const EntrySampler& sampler, std::size_t trials,
                                      std::uint64_t seed, const PlantOptions& options = {}, unsigned threads = 0);

struct ConcentrationRow {
  double t = 0.0;
  double frequency = 0.0;  // fraction of trials with |λ − mean λ| > t
  double bound = 0.0;      // 2 exp(−t²/(32K²))
  double se = 0.0;         // binomial standard error at min(bound, 1)
  bool holds = false;      // frequency ≤ bound + 3 se
};

/// Empirical check of the concentration bound for Hermitian matrices with
/// independent entries ±K (real symmetric, Rademacher signs).
std::vector<ConcentrationRow> concentration_check(std::size_t n, double K, const std::vector<double>& t_grid,
                                                  std::size_t trials, std::uint64_t seed, unsigned threads = 0);

/// h(u) = (1+u) log(1+u) − u.
double bennett_h(double u);
/// exp(−(v/b²) h(b t/v)); v, b > 0, t ≥ 0, else DomainError.
double bennett_bound(double v, double b_cap, double t);

struct SlopePoint {
  std::size_t n;
  double p_hat;
};

struct SlopeSummary {
  double slope = 0.0;
  double intercept = 0.0;
  std::size_t points = 0;
  double J_reference = 0.0;
};

/// Least-squares fit of −log p̂ against N^{α/2} over points with p̂ > 0, reported
/// with rate_J(x) for the given c. Throws NotEstimable with fewer than three
/// distinct N carrying a positive estimate.
SlopeSummary rate_slope_summary(const std::vector<SlopePoint>& points, double alpha, double x, double c);

}  // namespace htldp
