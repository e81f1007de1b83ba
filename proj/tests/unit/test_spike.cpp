#include <algorithm>
#include <cmath>
#include <vector>

#include <Eigen/LU>
#include <Eigen/QR>
#include <gtest/gtest.h>

#include "htldp/errors.hpp"
#include "htldp/heavy_tail.hpp"
#include "htldp/semicircle.hpp"
#include "htldp/spike.hpp"
#include "oracles.hpp"

using namespace htldp;

namespace {

SpikeSpec single(double theta, Eigen::Index n, Eigen::Index at = 0) {
  SpikeSpec s;
  s.thetas = {theta};
  s.vectors = ComplexMatrix::Zero(n, 1);
  s.vectors(at, 0) = 1.0;
  return s;
}

SpikeSpec random_spike(Eigen::Index n, int rank, Stream& stream) {
  ComplexMatrix G(n, rank);
  for (Eigen::Index i = 0; i < G.size(); ++i) G.data()[i] = {stream.normal(), stream.normal()};
  SpikeSpec s;
  s.vectors = Eigen::HouseholderQR<ComplexMatrix>(G).householderQ() * ComplexMatrix::Identity(n, rank);
  for (int r = 0; r < rank; ++r) s.thetas.push_back(0.5 + 2.5 * stream.uniform());
  std::sort(s.thetas.begin(), s.thetas.end());
  return s;
}

RealMatrix bounded_wigner(std::size_t n, std::uint64_t seed) {
  const EntrySampler s(TailParams{}, LawKind::Rademacher);
  Stream stream(seed);
  return sample_wigner<double>(n, s, stream);
}

}  // namespace

TEST(SpikeSpec, Validation) {
  SpikeSpec s = single(2.0, 4);
  EXPECT_NO_THROW(s.validate(4));
  EXPECT_THROW(s.validate(5), ValidationError);
  s.thetas = {0.0};
  EXPECT_THROW(s.validate(4), ValidationError);
  SpikeSpec t;
  t.thetas = {3.0, 1.0};
  t.vectors = ComplexMatrix::Identity(4, 2);
  EXPECT_THROW(t.validate(4), ValidationError);
  t.thetas = {1.0, 3.0};
  t.vectors(0, 1) = 0.5;
  EXPECT_THROW(t.validate(4), ValidationError);
}

TEST(SpikeSpec, FromMatrix) {
  ComplexMatrix C = ComplexMatrix::Zero(5, 5);
  C(1, 3) = C(3, 1) = 2.0;
  const auto s = SpikeSpec::from_matrix(C);
  ASSERT_EQ(s.rank(), 2u);
  EXPECT_NEAR(s.thetas[0], -2.0, 1e-14);
  EXPECT_NEAR(s.thetas[1], 2.0, 1e-14);
  EXPECT_LT((s.perturbation() - C).norm(), 1e-14);
}

TEST(EigenEquationMatrix, ZeroMatrix) {
  const EigenEquation eq(RealMatrix(RealMatrix::Zero(6, 6)), single(1.7, 6, 3));
  for (double x : {0.5, 2.0, 9.0}) {
    const auto M = eigen_equation_matrix(eq, x);
    ASSERT_EQ(M.rows(), 1);
    EXPECT_NEAR(std::abs(M(0, 0) - (1.0 - 1.7 / x)), 0.0, 1e-15);
  }
}

TEST(EigenEquationMatrix, OneByOne) {
  RealMatrix H(1, 1);
  H << 0.5;
  const EigenEquation eq(H, single(2.0, 1));
  EXPECT_NEAR(eigen_equation_matrix(eq, 3.0)(0, 0).real(), 0.2, 1e-15);
}

TEST(EigenEquationMatrix, MatchesDenseInverse) {
  Stream stream(8);
  const RealMatrix H = bounded_wigner(100, 1);
  const SpikeSpec spike = random_spike(100, 2, stream);
  const EigenEquation eq(H, spike);
  const double x = largest_eigenvalue(H) + 1.0;
  const ComplexMatrix R = (x * ComplexMatrix::Identity(100, 100) - H.cast<std::complex<double>>()).inverse();
  ComplexMatrix expected = ComplexMatrix::Identity(2, 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      expected(i, j) -= spike.thetas[i] * spike.vectors.col(i).dot(R * spike.vectors.col(j));
  const ComplexMatrix M = eigen_equation_matrix(eq, x);
  EXPECT_LT((M - expected).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(EigenEquationMatrix, RejectsSpectrum) {
  RealMatrix H = RealMatrix::Zero(3, 3);
  H(0, 0) = 1.0;
  const EigenEquation eq(H, single(1.0, 3));
  EXPECT_THROW(eq.matrix(1.0), DomainError);
  EXPECT_THROW(eq.matrix(0.5), DomainError);
  EXPECT_NO_THROW(eq.matrix(eq.min_x()));
}

TEST(FN, ZeroMatrix) {
  const EigenEquation eq(RealMatrix(RealMatrix::Zero(4, 4)), single(3.0, 4));
  EXPECT_NEAR(f_N(eq, 3.0), 0.0, 1e-15);
  EXPECT_NEAR(f_N(eq, 4.0), 0.25, 1e-15);
  const auto z = eq.largest_zero();
  ASSERT_TRUE(z.has_value());
  EXPECT_NEAR(*z, 3.0, 1e-11);
}

TEST(FN, RankThreeZeroMatchesEigensolver) {
  Stream stream(12);
  int checked = 0;
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const RealMatrix H = bounded_wigner(50, 100 + seed);
    if (largest_eigenvalue(H) >= 2.0) continue;
    const SpikeSpec spike = random_spike(50, 3, stream);
    const EigenEquation eq(H, spike);
    const auto z = eq.largest_zero();
    ASSERT_TRUE(z.has_value());
    const ComplexMatrix full = H.cast<std::complex<double>>() + spike.perturbation();
    EXPECT_NEAR(*z, oracle::jacobi_largest(full), 1e-8);
    ++checked;
  }
  EXPECT_GE(checked, 3);
}

TEST(LimitF, Examples) {
  EXPECT_NEAR(limit_f({2.0}, 2.5), 0.0, 1e-15);
  for (double x : {2.0, 2.01, 3.0, 10.0, 1e3}) {
    const double v = limit_f({0.5}, x);
    EXPECT_GT(v, 0.0);
    EXPECT_LT(v, 1.0);
  }
  // G(10/3) = 1/3, so the factor 1 − 3G vanishes.
  EXPECT_NEAR(stieltjes(10.0 / 3.0), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(limit_f({-1.0, 3.0}, 10.0 / 3.0), 0.0, 1e-14);
  EXPECT_NEAR(limit_f({-1.0, 3.0}, 5.0), (1.0 + stieltjes(5.0)) * (1.0 - 3.0 * stieltjes(5.0)), 1e-15);
  EXPECT_THROW(limit_f({2.0}, 1.5), DomainError);
}

TEST(LargestZero, Examples) {
  const auto a = largest_zero([](double x) { return 1.0 - 3.0 / x; }, 0.1, 10.0);
  ASSERT_TRUE(a.has_value());
  EXPECT_NEAR(*a, 3.0, 1e-11);
  EXPECT_FALSE(largest_zero([](double) { return 1.0; }, 0.1, 10.0).has_value());
  const auto b = largest_zero([](double x) { return limit_f({1.5}, x); }, 2.001, 20.0);
  ASSERT_TRUE(b.has_value());
  EXPECT_NEAR(*b, stieltjes_inverse(2.0 / 3.0), 1e-10);
  EXPECT_NEAR(*b, 2.1666666667, 1e-10);
  EXPECT_THROW(largest_zero([](double x) { return x; }, 1.0, 1.0), ValidationError);
  EXPECT_THROW(largest_zero([](double x) { return x; }, 0.0, INFINITY), ValidationError);
}

TEST(LargestZero, PicksRightmost) {
  const auto z = largest_zero([](double x) { return (x - 1.0) * (x - 2.0) * (x - 4.0); }, 0.0, 5.0);
  ASSERT_TRUE(z.has_value());
  EXPECT_NEAR(*z, 4.0, 1e-11);
}

TEST(Bbp, Outlier) {
  EXPECT_EQ(bbp_outlier(2.0), 2.5);
  EXPECT_EQ(bbp_outlier(1.0), 2.0);
  EXPECT_EQ(bbp_outlier(0.5), 2.0);
  EXPECT_EQ(bbp_outlier(-4.0), 2.0);
}

TEST(MuEps, Examples) {
  EXPECT_EQ(mu_eps(RealMatrix(RealMatrix::Zero(4, 4))), 2.0);
  RealMatrix C = RealMatrix::Zero(4, 4);
  C(0, 0) = 3.0;
  EXPECT_NEAR(mu_eps(C), 3.0 + 1.0 / 3.0, 1e-14);
  RealMatrix P = RealMatrix::Zero(6, 6);
  P(2, 4) = P(4, 2) = 2.0;
  EXPECT_NEAR(mu_eps(P), 2.5, 1e-14);
}

TEST(IsotropyGap, ZeroMatrix) {
  const RealMatrix H = RealMatrix::Zero(8, 8);
  Vector<double> u = Vector<double>::Zero(8);
  u(2) = 1.0;
  EXPECT_NEAR(isotropy_gap(H, u, u, 10.0), std::abs(0.1 - stieltjes(10.0)), 1e-15);
  EXPECT_NEAR(isotropy_gap(H, u, u, 10.0), 1.0205144e-3, 1e-9);
  EXPECT_NEAR(isotropy_gap(H, u, u, 1e6), 0.0, 1e-17);
}

TEST(IsotropyGap, Errors) {
  RealMatrix H = RealMatrix::Zero(3, 3);
  H(0, 0) = 3.0;
  Vector<double> u = Vector<double>::Unit(3, 1);
  EXPECT_THROW(isotropy_gap(H, u, u, 3.0), DomainError);
  EXPECT_THROW(isotropy_gap(H, u, u, 2.5), DomainError);
  EXPECT_THROW(isotropy_gap(RealMatrix(RealMatrix::Zero(3, 3)), u, u, 1.9), DomainError);
}

TEST(IsotropyGap, WignerOrthogonalSmall) {
  int below = 0;
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const RealMatrix H = bounded_wigner(1000, 500 + seed);
    below += isotropy_gap(H, Vector<double>(Vector<double>::Unit(1000, 0)),
                          Vector<double>(Vector<double>::Unit(1000, 1)), 3.0) < 0.05;
  }
  EXPECT_GE(below, 45);
}

TEST(IsotropyGap, MedianDecreasesWithN) {
  auto median_gap = [](std::size_t n) {
    std::vector<double> gaps;
    for (std::uint64_t seed = 0; seed < 11; ++seed) {
      const RealMatrix H = bounded_wigner(n, 900 + seed);
      const Vector<double> u = Vector<double>::Unit(static_cast<Eigen::Index>(n), 0);
      gaps.push_back(isotropy_gap(H, u, u, 3.0));
    }
    std::nth_element(gaps.begin(), gaps.begin() + 5, gaps.end());
    return gaps[5];
  };
  EXPECT_LT(median_gap(2000), median_gap(200));
}
