#include <cmath>
#include <string_view>

#include <gtest/gtest.h>

#include "htldp/brute_force.hpp"
#include "htldp/errors.hpp"
#include "htldp/variational.hpp"
#include "oracles.hpp"

using namespace htldp;

namespace {

TailParams params(double alpha, double a, double b, const char* nu1, const char* nu2) {
  TailParams p;
  p.alpha = alpha;
  p.a = a;
  p.b = b;
  p.nu1_support = parse_support(nu1);
  p.nu2_support = parse_support(nu2);
  p.complex_entries = std::string_view(nu2).find('i') != std::string_view::npos;
  return p;
}

void expect_consistent_argmin(const BruteForceResult& r, const TailParams& p) {
  EXPECT_NEAR(oracle::jacobi_largest(r.argmin.to_dense()), 1.0, 1e-9);
  EXPECT_TRUE(in_domain(r.argmin, p));
  EXPECT_NEAR(weight_I(r.argmin, p), r.c, 1e-9 * r.c);
}

}  // namespace

TEST(BruteForce, AnchorAlphaOne) {
  const auto p = params(1.0, 1.0, 1.0, "1,-1", "1,-1");
  const auto r = brute_force_c(p, 4, 1);
  EXPECT_GE(r.c, 0.999);
  EXPECT_LE(r.c, 1.001);
  expect_consistent_argmin(r, p);
}

TEST(BruteForce, CaseB) {
  const auto p = params(1.5, 1.0, 0.4, "1", "1,-1");
  const auto r = brute_force_c(p, 4, 2);
  EXPECT_NEAR(r.c, 0.4, 1e-3);
  expect_consistent_argmin(r, p);
}

TEST(BruteForce, CaseF) {
  const auto p = params(1.5, 0.7, 1.0, "-1", "-1");
  const auto r = brute_force_c(p, 4, 3);
  EXPECT_NEAR(r.c, 0.7, 1e-3 * 0.7);
  expect_consistent_argmin(r, p);
}

TEST(BruteForce, CaseCWitnessSize) {
  const auto p = params(1.5, 1.0, 1.0, "1", "1");
  const auto r = brute_force_c(p, 5, 4);
  EXPECT_NEAR(r.c, 2.0 / std::sqrt(5.0), 1e-6);
  EXPECT_EQ(r.argmin.touched_rows().size(), 2u);
}

TEST(BruteForce, ComplexPhases) {
  // Quarter-turn phases only: a 2×2 block with off-diagonal i has λ = |z|, so c ≤ a; the diagonal gives b.
  const auto p = params(1.3, 1.0, 2.0, "1", "i,-i");
  const auto r = brute_force_c(p, 3, 5);
  expect_consistent_argmin(r, p);
  EXPECT_LE(r.c, 1.0 + 1e-9);
}

TEST(BruteForce, DeterministicAcrossThreads) {
  const auto p = params(1.6, 1.2, 0.9, "1", "1,-1");
  BruteForceBudget one, many;
  one.threads = 1;
  many.threads = 4;
  one.restarts = many.restarts = 8;
  const auto a = brute_force_c(p, 4, 11, one);
  const auto b = brute_force_c(p, 4, 11, many);
  EXPECT_EQ(a.c, b.c);
  EXPECT_EQ(a.argmin.entries(), b.argmin.entries());
  EXPECT_EQ(a.local_searches, b.local_searches);
}

TEST(BruteForce, Errors) {
  const auto p = params(1.5, 1.0, 1.0, "1", "1");
  EXPECT_THROW(brute_force_c(p, 0), ValidationError);
  EXPECT_THROW(brute_force_c(p, 7), ValidationError);
  EXPECT_THROW(brute_force_c(params(1.5, 1.0, 1.0, "-1", "1"), 1), ValidationError);
}
