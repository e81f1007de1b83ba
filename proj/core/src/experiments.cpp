#include "htldp/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "htldp/errors.hpp"
#include "htldp/parallel.hpp"
#include "htldp/semicircle.hpp"

namespace htldp {

Interval wilson_interval(std::size_t hits, std::size_t trials, double z) {
  if (trials == 0 || hits > trials) throw ValidationError("wilson_interval: need 0 <= hits <= trials, trials > 0");
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(hits) / n;
  const double z2 = z * z;
  const double centre = (p + z2 / (2.0 * n)) / (1.0 + z2 / n);
  const double half = z * std::sqrt(p * (1.0 - p) / n + z2 / (4.0 * n * n)) / (1.0 + z2 / n);
  Interval out{std::max(0.0, centre - half), std::min(1.0, centre + half)};
  if (hits == 0) out.low = 0.0;
  if (hits == trials) out.high = 1.0;
  return out;
}

namespace {

template <class Scalar>
double lambda_max_of(const Matrix<Scalar>& H) {
  return largest_eigenvalue(H);
}

template <class Scalar>
double one_trial(std::size_t n, const EntrySampler& sampler, Stream& stream) {
  return lambda_max_of(sample_wigner<Scalar>(n, sampler, stream));
}

template <class Scalar>
double planted_trial(std::size_t n, double theta, const EntrySampler& sampler, Stream& stream,
                     const PlantOptions& options) {
  Matrix<Scalar> X = sample_wigner_raw<Scalar>(n, sampler, stream);
  const double root = std::sqrt(static_cast<double>(n));
  if (options.truncate) {
    const double cut = std::pow(std::log(static_cast<double>(n)), options.d);
    for (Eigen::Index j = 0; j < X.cols(); ++j) {
      for (Eigen::Index i = 0; i < X.rows(); ++i) {
        if (sup_norm(X(i, j)) > cut) X(i, j) = Scalar(0);
      }
    }
  }
  if (options.kind == PlantKind::Diagonal) {
    X(0, 0) = Scalar(theta * root);
  } else {
    X(0, 0) = Scalar(0);
    X(1, 1) = Scalar(0);
    X(0, 1) = Scalar(theta * root);
    X(1, 0) = Scalar(theta * root);
  }
  return lambda_max_of(normalize_wigner(X));
}

}  // namespace

std::vector<double> sample_largest_eigenvalues(std::size_t n, std::size_t trials, const EntrySampler& sampler,
                                               std::uint64_t seed, unsigned threads) {
  if (n == 0) throw ValidationError("N must be positive");
  std::vector<double> out(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    Stream stream = Stream::split(seed, i);
    out[i] = sampler.complex_entries() ? one_trial<std::complex<double>>(n, sampler, stream)
                                       : one_trial<double>(n, sampler, stream);
  });
  return out;
}

TailEstimate tail_from_samples(const std::vector<double>& samples, double x) {
  if (samples.empty()) throw ValidationError("tail estimate needs at least one trial");
  TailEstimate est;
  est.x = x;
  est.trials = samples.size();
  est.hits = static_cast<std::size_t>(std::count_if(samples.begin(), samples.end(), [x](double l) { return l > x; }));
  est.p_hat = static_cast<double>(est.hits) / static_cast<double>(est.trials);
  const Interval ci = wilson_interval(est.hits, est.trials);
  est.ci_low = ci.low;
  est.ci_high = ci.high;
  return est;
}

TailEstimate estimate_tail(std::size_t n, double x, std::size_t trials, const EntrySampler& sampler,
                           std::uint64_t seed, unsigned threads) {
  if (trials == 0) throw ValidationError("estimate_tail: trials must be positive");
  return tail_from_samples(sample_largest_eigenvalues(n, trials, sampler, seed, threads), x);
}

std::vector<double> planted_spike_run(std::size_t n, double theta, const EntrySampler& sampler, std::size_t trials,
                                      std::uint64_t seed, const PlantOptions& options, unsigned threads) {
  if (n < 2) throw ValidationError("planted_spike_run: N must be at least 2");
  if (!std::isfinite(theta)) throw ValidationError("planted_spike_run: theta must be finite");
  std::vector<double> out(trials);
  parallel_for(trials, threads, [&](std::size_t i) {
    Stream stream = Stream::split(seed, i);
    out[i] = sampler.complex_entries() ? planted_trial<std::complex<double>>(n, theta, sampler, stream, options)
                                       : planted_trial<double>(n, theta, sampler, stream, options);
  });
  return out;
}

std::vector<ConcentrationRow> concentration_check(std::size_t n, double K, const std::vector<double>& t_grid,
                                                  std::size_t trials, std::uint64_t seed, unsigned threads) {
  if (n == 0 || trials == 0) throw ValidationError("concentration_check: N and trials must be positive");
  if (!(K > 0.0) || !std::isfinite(K)) throw ValidationError("concentration_check: K must be positive");
  std::vector<double> lambdas(trials);
  parallel_for(trials, threads, [&](std::size_t t) {
    Stream stream = Stream::split(seed, t);
    const auto N = static_cast<Eigen::Index>(n);
    RealMatrix X(N, N);
    for (Eigen::Index i = 0; i < N; ++i) {
      for (Eigen::Index j = i; j < N; ++j) {
        X(i, j) = K * stream.rademacher();
        X(j, i) = X(i, j);
      }
    }
    lambdas[t] = largest_eigenvalue(X);
  });
  const double mean = std::accumulate(lambdas.begin(), lambdas.end(), 0.0) / static_cast<double>(trials);
  std::vector<ConcentrationRow> rows;
  for (double t : t_grid) {
    ConcentrationRow row;
    row.t = t;
    const auto hits = std::count_if(lambdas.begin(), lambdas.end(), [&](double l) { return std::abs(l - mean) > t; });
    row.frequency = static_cast<double>(hits) / static_cast<double>(trials);
    row.bound = 2.0 * std::exp(-t * t / (32.0 * K * K));
    const double p = std::min(row.bound, 1.0);
    row.se = std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
    row.holds = row.frequency <= row.bound + 3.0 * row.se;
    rows.push_back(row);
  }
  return rows;
}

double bennett_h(double u) {
  if (!(u >= 0.0)) throw DomainError("bennett_h: u must be nonnegative");
  return (1.0 + u) * std::log1p(u) - u;
}

double bennett_bound(double v, double b_cap, double t) {
  if (!(v > 0.0) || !(b_cap > 0.0) || !std::isfinite(v) || !std::isfinite(b_cap)) {
    throw DomainError("bennett_bound: v and b must be positive");
  }
  if (!(t >= 0.0)) throw DomainError("bennett_bound: t must be nonnegative");
  return std::exp(-(v / (b_cap * b_cap)) * bennett_h(b_cap * t / v));
}

SlopeSummary rate_slope_summary(const std::vector<SlopePoint>& points, double alpha, double x, double c) {
  std::map<std::size_t, std::vector<double>> by_n;
  for (const auto& p : points) {
    if (p.p_hat > 0.0 && p.p_hat <= 1.0) by_n[p.n].push_back(p.p_hat);
  }
  if (by_n.size() < 3) {
    throw NotEstimable("rate slope needs at least three distinct N with a positive tail estimate");
  }
  std::vector<double> xs, ys;
  for (const auto& [n, ps] : by_n) {
    for (double p : ps) {
      xs.push_back(std::pow(static_cast<double>(n), alpha / 2.0));
      ys.push_back(-std::log(p));
    }
  }
  const double m = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / m;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / m;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
  }
  SlopeSummary out;
  out.slope = sxy / sxx;
  out.intercept = my - out.slope * mx;
  out.points = xs.size();
  out.J_reference = rate_J(x, {alpha, c});
  return out;
}

}  // namespace htldp
