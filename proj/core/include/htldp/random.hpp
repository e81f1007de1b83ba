#pragma once

#include <cstdint>
#include <random>

namespace htldp {

/// SplitMix64 finalizer. Used to derive independent sub-stream seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;

/// Seeded random stream with platform-independent variates.
///
/// Only the raw 64-bit output of std::mt19937_64 is used (its sequence is fixed by
/// the standard); every variate is produced by code in this class, so a seed
/// reproduces the same numbers on every platform and standard library.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  /// Sub-stream `index` of the stream family rooted at `master`:
  /// seed = splitmix64(splitmix64(master) ^ splitmix64(index + 1)).
  static Stream split(std::uint64_t master, std::uint64_t index);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on [0, 1), 53-bit resolution.
  double uniform();
  /// Uniform on (0, 1]; safe as the argument of log.
  double uniform_pos() { return 1.0 - uniform(); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n);
  bool bernoulli(double p) { return uniform() < p; }
  double rademacher() { return (next_u64() >> 63) ? 1.0 : -1.0; }
  /// Standard normal via Marsaglia's polar method.
  double normal();

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace htldp
