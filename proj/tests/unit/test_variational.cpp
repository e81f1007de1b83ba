#include <cmath>
#include <string_view>
#include <complex>

#include <gtest/gtest.h>

#include "htldp/errors.hpp"
#include "htldp/linalg.hpp"
#include "htldp/perm_distance.hpp"
#include "htldp/sparse_hermitian.hpp"
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

void expect_valid_witness(const ClosedFormResult& r, const TailParams& p) {
  EXPECT_NEAR(oracle::jacobi_largest(r.witness.to_dense()), 1.0, 1e-10);
  EXPECT_TRUE(in_domain(r.witness, p));
  EXPECT_NEAR(weight_I(r.witness, p), r.c, 1e-10 * r.c);
}

}  // namespace

TEST(SparseHermitian, StorageRules) {
  SparseHermitian A(3);
  A.set(2, 0, {0.0, 1.0});
  EXPECT_EQ(A.get(0, 2), std::complex<double>(0.0, -1.0));
  EXPECT_EQ(A.get(2, 0), std::complex<double>(0.0, 1.0));
  A.set(1, 1, 2.0);
  EXPECT_EQ(A.entries().size(), 2u);
  A.set(1, 1, 0.0);
  EXPECT_EQ(A.entries().size(), 1u);
  EXPECT_THROW(A.set(1, 1, {1.0, 1.0}), ValidationError);
  EXPECT_THROW(A.set(3, 0, 1.0), ValidationError);
  EXPECT_THROW(SparseHermitian(0), ValidationError);
  EXPECT_EQ(A.touched_rows(), (std::vector<std::size_t>{0, 2}));
  const ComplexMatrix D = A.to_dense();
  EXPECT_EQ(hermitian_deviation(D), 0.0);
  const auto B = SparseHermitian::from_dense(D);
  EXPECT_EQ(B.entries(), A.entries());
}

TEST(SparseHermitian, JsonRoundTrip) {
  SparseHermitian A(4);
  A.set(0, 0, -0.5);
  A.set(1, 3, {0.25, -2.0});
  const nlohmann::json j = A;
  EXPECT_EQ(j["size"], 4);
  const auto B = j.get<SparseHermitian>();
  EXPECT_EQ(B.size(), 4u);
  EXPECT_EQ(B.entries(), A.entries());
}

TEST(WeightI, Examples) {
  const TailParams p = params(1.3, 2.0, 3.0, "1,-1", "1,-1");
  SparseHermitian one(1);
  one.set(0, 0, 1.0);
  EXPECT_EQ(weight_I(one, p), 3.0);
  for (double theta : {0.0, 0.7, 2.0}) {
    SparseHermitian off(2);
    off.set(0, 1, std::polar(1.0, theta));
    EXPECT_NEAR(weight_I(off, p), 2.0, 1e-15);
  }
}

TEST(WeightI, ZeroDiagonalExtremal) {
  for (double alpha : {1.1, 1.5, 1.9}) {
    for (std::size_t n = 2; n <= 7; ++n) {
      const TailParams p = params(alpha, 1.7, 1.0, "1", "1");
      const auto B = extremal_matrix(n, 0.0, 1.0);
      // Direct summation over the n(n−1)/2 upper entries of modulus 1/(n−1).
      double direct = 0.0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) direct += 1.7 * std::pow(1.0 / static_cast<double>(n - 1), alpha);
      EXPECT_NEAR(weight_I(B, p), direct, 1e-13);
      const double formula = (1.7 / 2.0) * n / std::pow(static_cast<double>(n - 1), alpha - 1.0);
      EXPECT_NEAR(weight_I(B, p), formula, 1e-13);
    }
  }
}

TEST(InDomain, Examples) {
  SparseHermitian d(1);
  d.set(0, 0, 1.0);
  EXPECT_TRUE(in_domain(d, params(1.0, 1, 1, "1", "1")));
  EXPECT_FALSE(in_domain(d, params(1.0, 1, 1, "-1", "1")));
  SparseHermitian o(2);
  o.set(0, 1, -1.0);
  EXPECT_TRUE(in_domain(o, params(1.0, 1, 1, "1", "-1")));
  EXPECT_FALSE(in_domain(o, params(1.0, 1, 1, "-1", "1")));
  SparseHermitian c(2);
  c.set(0, 1, std::polar(3.0, 0.5 * std::acos(-1.0) + 1e-11));
  EXPECT_TRUE(in_domain(c, params(1.0, 1, 1, "1", "i")));
}

TEST(Psi, Examples) {
  for (double a : {0.5, 1.0, 3.0})
    for (double b : {0.7, 1.0, 2.0}) EXPECT_NEAR(psi(1.0, params(1.5, a, b, "1", "1")), b, 1e-14);
  const TailParams p = params(1.5, 1.0, 1.0, "1", "1");
  EXPECT_NEAR(t0(p), 1.5, 1e-15);
  EXPECT_NEAR(psi(2.0, p), 2.0 / std::sqrt(5.0), 1e-15);
  EXPECT_NEAR(psi(2.0, p), 0.8944271910, 1e-10);
  EXPECT_THROW(psi(2.0, params(1.0, 1, 1, "1", "1")), DomainError);
  EXPECT_THROW(t0(params(0.5, 1, 1, "1", "1")), DomainError);
}

TEST(Psi, DirectFormula) {
  for (double alpha : {1.2, 1.5, 1.8}) {
    const TailParams p = params(alpha, 1.3, 0.9, "1", "1");
    for (double t = 1.0; t < 8.0; t += 0.5) {
      const double e = 1.0 / (alpha - 1.0);
      const double direct = t / std::pow(std::pow(1.0 / 0.9, e) + (t - 1.0) * std::pow(2.0 / 1.3, e), alpha - 1.0);
      EXPECT_NEAR(psi(t, p), direct, 1e-13 * direct);
    }
  }
}

TEST(Phi, Examples) {
  for (double alpha : {1.1, 1.5, 1.9}) EXPECT_NEAR(phi(2.0, alpha), 2.0, 1e-15);
  EXPECT_NEAR(t1(1.5), 2.0, 1e-15);
  EXPECT_NEAR(t1(1.75), 4.0, 1e-15);
  EXPECT_NEAR(phi(4.0, 1.75), 4.0 / std::pow(3.0, 0.75), 1e-15);
  EXPECT_NEAR(phi(4.0, 1.75), 1.7547653506, 1e-10);
  EXPECT_THROW(phi(1.5, 1.5), DomainError);
  EXPECT_THROW(t1(2.0), DomainError);
}

TEST(ExtremalMatrix, TopEigenvalueIsOne) {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (double s : {0.0, 0.3, 1.0, 5.0}) {
      for (double t : {0.0, 0.2, 1.0, 4.0}) {
        if (s == 0.0 && t == 0.0) continue;
        if (n == 1 && s == 0.0) continue;
        const auto B = extremal_matrix(n, s, t);
        EXPECT_NEAR(oracle::jacobi_largest(B.to_dense()), 1.0, 1e-12) << n << " " << s << " " << t;
      }
    }
  }
  EXPECT_THROW(extremal_matrix(3, 0.0, 0.0), DomainError);
}

TEST(ClosedForm, AnchorCaseA) {
  const auto p = params(1.0, 1.0, 1.0, "1,-1", "1,-1");
  const auto r = closed_form_c(p);
  EXPECT_EQ(r.c, 1.0);
  EXPECT_EQ(r.case_label, "a");
  expect_valid_witness(r, p);
}

TEST(ClosedForm, CaseAOffDiagonal) {
  const auto p = params(0.5, 2.0, 3.0, "-1", "1");
  const auto r = closed_form_c(p);
  EXPECT_EQ(r.c, 2.0);
  EXPECT_EQ(r.case_label, "a");
  expect_valid_witness(r, p);
  EXPECT_EQ(closed_form_c(params(0.8, 2.0, 1.5, "1", "1")).c, 1.5);
}

TEST(ClosedForm, CaseB) {
  const auto p = params(1.5, 1.0, 0.4, "1", "1,-1");
  const auto r = closed_form_c(p);
  EXPECT_EQ(r.c, 0.4);
  EXPECT_EQ(r.case_label, "b");
  expect_valid_witness(r, p);
}

TEST(ClosedForm, CaseC) {
  const auto p = params(1.5, 1.0, 1.0, "1", "1");
  const auto r = closed_form_c(p);
  EXPECT_NEAR(r.c, 2.0 / std::sqrt(5.0), 1e-15);
  EXPECT_EQ(r.case_label, "c");
  EXPECT_EQ(r.witness.size(), 2u);
  // B⁽²⁾(1, 4): diagonal 1/5, off-diagonal 4/5.
  EXPECT_NEAR(r.witness.get(0, 0).real(), 0.2, 1e-15);
  EXPECT_NEAR(std::abs(r.witness.get(0, 1)), 0.8, 1e-15);
  expect_valid_witness(r, p);
}

TEST(ClosedForm, CaseD) {
  const auto p = params(1.4, 1.0, 1.5, "1", "-1");
  const auto r = closed_form_c(p);
  EXPECT_EQ(r.case_label, "d");
  const double e = 1.0 / 0.4;
  const double expected = std::min(1.5, 2.0 / std::pow(std::pow(1.0 / 1.5, e) + std::pow(2.0, e), 0.4));
  EXPECT_NEAR(r.c, expected, 1e-13);
  expect_valid_witness(r, p);
}

TEST(ClosedForm, CaseE) {
  const auto p = params(1.75, 1.0, 1.0, "-1", "1");
  const auto r = closed_form_c(p);
  EXPECT_EQ(r.case_label, "e");
  EXPECT_NEAR(r.c, 0.5 * 4.0 / std::pow(3.0, 0.75), 1e-14);
  EXPECT_EQ(r.witness.size(), 4u);
  expect_valid_witness(r, p);
}

TEST(ClosedForm, CaseF) {
  const auto p = params(1.5, 0.8, 1.0, "-1", "-1");
  const auto r = closed_form_c(p);
  EXPECT_EQ(r.case_label, "f");
  EXPECT_EQ(r.c, 0.8);
  expect_valid_witness(r, p);
}

TEST(ClosedForm, Unsupported) {
  EXPECT_THROW(closed_form_c(params(1.5, 1, 1, "1", "i")), UnsupportedConfiguration);
  EXPECT_THROW(closed_form_c(params(1.5, 1, 1, "-1", "i,-i")), UnsupportedConfiguration);
}

TEST(ClosedForm, WitnessReport) {
  const auto p = params(1.5, 1.0, 1.0, "1", "1");
  const auto r = closed_form_c(p);
  const auto j = witness_report(r.witness, p, r.case_label);
  EXPECT_EQ(j["case"], "c");
  EXPECT_EQ(j["size"], 2);
  EXPECT_NEAR(j["weight"].get<double>(), r.c, 1e-14);
  EXPECT_NEAR(j["lambda_max"].get<double>(), 1.0, 1e-12);
  EXPECT_EQ(j["entries"].size(), 3u);
}

TEST(PermDistance, Examples) {
  SparseHermitian A(2), B(2), x(1), y(1);
  A.set(0, 0, 1.0);
  A.set(1, 1, 2.0);
  B.set(0, 0, 2.0);
  B.set(1, 1, 1.0);
  EXPECT_EQ(perm_invariant_distance(A, A), 0.0);
  EXPECT_EQ(perm_invariant_distance(A, B), 0.0);
  x.set(0, 0, 3.0);
  y.set(0, 0, 5.0);
  EXPECT_EQ(perm_invariant_distance(x, y), 2.0);
}

TEST(PermDistance, PaddingAndSizes) {
  SparseHermitian A(5), B(2);
  A.set(3, 4, {0.0, 1.0});
  B.set(0, 1, {0.0, 1.0});
  EXPECT_EQ(perm_invariant_distance(A, B), 0.0);
  SparseHermitian C(3);
  C.set(0, 2, {0.0, -1.0});
  EXPECT_EQ(perm_invariant_distance(A, C), 0.0);  // transposed relabeling
  SparseHermitian Z(1);
  EXPECT_EQ(perm_invariant_distance(A, Z), 1.0);
}

TEST(PermDistance, RejectsLargeSupports) {
  SparseHermitian A(9);
  for (std::size_t i = 0; i < 9; ++i) A.set(i, i, 1.0);
  EXPECT_THROW(perm_invariant_distance(A, A), ValidationError);
}
