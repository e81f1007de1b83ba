#include "htldp/perm_distance.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include "htldp/errors.hpp"

namespace htldp {

namespace {

using Dense = std::vector<std::vector<std::complex<double>>>;

Dense restrict_to(const SparseHermitian& M, const std::vector<std::size_t>& rows) {
  Dense out(rows.size(), std::vector<std::complex<double>>(rows.size()));
  for (std::size_t k = 0; k < rows.size(); ++k) {
    for (std::size_t l = 0; l < rows.size(); ++l) out[k][l] = M.get(rows[k], rows[l]);
  }
  return out;
}

class Search {
 public:
  Search(Dense a, Dense b) : a_(std::move(a)), b_(std::move(b)), target_(a_.size(), -1), used_(b_.size(), false) {}

  double run() {
    descend(0, 0.0);
    return best_;
  }

 private:
  std::complex<double> b_at(int x, int y) const {
    if (x < 0 || y < 0) return {};
    return b_[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
  }

  double leaf_cost(double cost) const {
    for (std::size_t x = 0; x < b_.size(); ++x) {
      for (std::size_t y = x; y < b_.size(); ++y) {
        if (!used_[x] || !used_[y]) cost = std::max(cost, std::abs(b_[x][y]));
      }
    }
    return cost;
  }

  void try_target(std::size_t k, int t, double cost) {
    target_[k] = t;
    for (std::size_t l = 0; l <= k && cost < best_; ++l) {
      cost = std::max(cost, std::abs(a_[k][l] - b_at(t, target_[l])));
    }
    if (cost < best_) {
      if (t >= 0) used_[static_cast<std::size_t>(t)] = true;
      descend(k + 1, cost);
      if (t >= 0) used_[static_cast<std::size_t>(t)] = false;
    }
    target_[k] = -1;
  }

  void descend(std::size_t k, double cost) {
    if (k == a_.size()) {
      best_ = std::min(best_, leaf_cost(cost));
      return;
    }
    for (std::size_t t = 0; t < b_.size(); ++t) {
      if (!used_[t]) try_target(k, static_cast<int>(t), cost);
    }
    try_target(k, -1, cost);
  }

  Dense a_;
  Dense b_;
  std::vector<int> target_;
  std::vector<bool> used_;
  double best_ = std::numeric_limits<double>::infinity();
};

}  // namespace

double perm_invariant_distance(const SparseHermitian& A, const SparseHermitian& B) {
  const auto ra = A.touched_rows();
  const auto rb = B.touched_rows();
  if (ra.size() > kMaxTouchedRows || rb.size() > kMaxTouchedRows) {
    throw ValidationError("perm_invariant_distance: more than 8 touched rows; exact search unavailable");
  }
  return Search(restrict_to(A, ra), restrict_to(B, rb)).run();
}

}  // namespace htldp
