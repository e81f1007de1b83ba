#include "htldp/quadform.hpp"

#include <algorithm>
#include <cmath>

#include "htldp/errors.hpp"

namespace htldp {

namespace {

void require_delta(double delta) {
  if (!(delta > 0.0 && delta < 1.0)) throw DomainError("delta must lie in (0, 1)");
}

}  // namespace

double quadform_max_simplex(double lambda, double mu, double delta, int n) {
  require_delta(delta);
  if (!(lambda >= 0.0 && lambda < mu) || !std::isfinite(mu)) throw DomainError("requires 0 <= lambda < mu");
  if (n < 1) throw DomainError("n must be at least 1");
  double best = lambda;
  for (int k = 2; k <= n; ++k) {
    best = std::max(best, (lambda + (k - 1) * mu) * std::pow(k, 1.0 - 2.0 / delta));
  }
  return best;
}

double quadform_max_bipartite(double lambda, double mu, double delta) {
  require_delta(delta);
  if (!(lambda >= 0.0 && mu >= 0.0) || !std::isfinite(lambda) || !std::isfinite(mu)) {
    throw DomainError("requires lambda, mu >= 0");
  }
  return std::max(lambda, (lambda + mu) * std::pow(2.0, 1.0 - 2.0 / delta));
}

double psd_offdiag_max(double beta, int n) {
  if (!(beta >= 2.0) || !std::isfinite(beta)) throw DomainError("beta must be at least 2");
  if (n < 2) throw DomainError("n must be at least 2");
  double best = 0.0;
  for (int k = 2; k <= n; ++k) best = std::max(best, (k - 1) * std::pow(k, 1.0 - beta));
  return best;
}

}  // namespace htldp
