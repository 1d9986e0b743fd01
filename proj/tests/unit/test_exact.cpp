#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qsi/exact.hpp"

using namespace qsi;

namespace {

Matrix random_symmetric(std::mt19937_64& rng, std::size_t n, int span) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) m(i, j) = m(j, i) = oracle::random_rational(rng, span);
  return m;
}

// B^T B with a rank-deficient B: PSD with zero pivots.
Matrix random_gram(std::mt19937_64& rng, std::size_t n, std::size_t rank) {
  Matrix b(rank, n);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < n; ++j) b(i, j) = oracle::random_rational(rng, 4);
  return b.transpose() * b;
}

std::vector<Rational> random_vector(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> x(n);
  for (auto& v : x) v = oracle::random_rational(rng, 20);
  return x;
}

}  // namespace

TEST(Rational, SerializesInLowestTerms) {
  EXPECT_EQ(to_string(Rational(3, 4)), "3/4");
  EXPECT_EQ(to_string(Rational(-1, 8)), "-1/8");
  EXPECT_EQ(to_string(Rational(0)), "0/1");
  EXPECT_EQ(to_string(Rational(5)), "5/1");
  EXPECT_EQ(to_string(ratio(6, 8)), "3/4");
  EXPECT_EQ(to_string(ratio(3, -6)), "-1/2");
}

TEST(Rational, ArithmeticIsExact) {
  const Rational a = ratio(1, 3), b = ratio(-7, 11);
  EXPECT_EQ((a + b) - b, a);
  EXPECT_EQ(a * 3, 1);
}

TEST(Rational, ParsesFractionsAndIntegersOnly) {
  EXPECT_EQ(parse_rational("3/4"), ratio(3, 4));
  EXPECT_EQ(parse_rational("6/8"), ratio(3, 4));
  EXPECT_EQ(parse_rational("-2"), Rational(-2));
  EXPECT_EQ(parse_rational("+5/10"), ratio(1, 2));
  EXPECT_THROW(parse_rational("0.5"), DomainError);
  EXPECT_THROW(parse_rational("1/0"), DomainError);
  EXPECT_THROW(parse_rational("1/-2"), DomainError);
  EXPECT_THROW(parse_rational(""), DomainError);
  EXPECT_THROW(parse_rational("1e3"), DomainError);
  EXPECT_THROW(parse_rational("/3"), DomainError);
}

TEST(Rational, RatioRejectsZeroDenominator) { EXPECT_THROW(ratio(1, 0), DomainError); }

TEST(Rational, DecimalRendering) {
  EXPECT_EQ(to_decimal(ratio(7, 8), 3), "0.875");
  EXPECT_EQ(to_decimal(Rational(2), 2), "2.00");
  EXPECT_EQ(to_decimal(ratio(-1, 4), 2), "-0.25");
}

TEST(Matrix, BasicAlgebra) {
  const Matrix a = Matrix::from_rows({{1, 2}, {3, 4}});
  const Matrix b = Matrix::from_rows({{0, 1}, {1, 0}});
  EXPECT_EQ(a * b, Matrix::from_rows({{2, 1}, {4, 3}}));
  EXPECT_EQ(a.transpose(), Matrix::from_rows({{1, 3}, {2, 4}}));
  EXPECT_EQ(a.trace(), 5);
  EXPECT_FALSE(a.is_symmetric());
  EXPECT_TRUE(b.is_symmetric());
  EXPECT_EQ(a + b - b, a);
  EXPECT_EQ(a * Rational(2), Matrix::from_rows({{2, 4}, {6, 8}}));
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(trace_of_product(a, b), (a * b).trace());
}

TEST(Matrix, ShapeMismatchThrows) {
  Matrix a(2, 3), b(2, 2);
  EXPECT_THROW(a += b, ShapeError);
  EXPECT_THROW((void)(b * a * b), ShapeError);
  EXPECT_THROW(hs_inner(a, b), ShapeError);
  EXPECT_THROW(Matrix::from_rows({{1, 2}, {3}}), ShapeError);
}

TEST(Matrix, QuadraticForm) {
  const Matrix m = Matrix::from_rows({{2, 1}, {1, 3}});
  const std::vector<Rational> x{1, -1};
  EXPECT_EQ(m.quadratic_form(x), 3);
}

TEST(HsInner, IdentityGivesDimension) {
  for (std::size_t k : {1u, 3u, 7u}) EXPECT_EQ(hs_inner(Matrix::identity(k), Matrix::identity(k)), Rational(k));
}

TEST(PsdCertificate, IdentityHasUnitPivots) {
  const auto cert = psd_certificate(Matrix::identity(3));
  EXPECT_TRUE(cert.is_psd());
  EXPECT_EQ(cert.pivots, (std::vector<Rational>{1, 1, 1}));
  EXPECT_FALSE(cert.witness.has_value());
}

TEST(PsdCertificate, NegativeAxisGivesUnitWitness) {
  const Rational diag[] = {1, -1};
  const auto cert = psd_certificate(Matrix::diagonal(diag));
  ASSERT_FALSE(cert.is_psd());
  ASSERT_TRUE(cert.witness.has_value());
  EXPECT_EQ(*cert.witness, (std::vector<Rational>{0, 1}));
}

TEST(PsdCertificate, ZeroPivotWithNonzeroRowIsIndefinite) {
  const Matrix m = Matrix::from_rows({{0, 1}, {1, 0}});
  const auto cert = psd_certificate(m);
  ASSERT_FALSE(cert.is_psd());
  EXPECT_LT(m.quadratic_form(*cert.witness), 0);
  const Matrix n = Matrix::from_rows({{0, 1}, {1, 5}});
  const auto c2 = psd_certificate(n);
  ASSERT_FALSE(c2.is_psd());
  EXPECT_LT(n.quadratic_form(*c2.witness), 0);
}

TEST(PsdCertificate, ZeroMatrixAndEmptyMatrix) {
  EXPECT_TRUE(psd_certificate(Matrix::zero(4)).is_psd());
  const auto empty = psd_certificate(Matrix(0, 0));
  EXPECT_TRUE(empty.is_psd());
  EXPECT_FALSE(empty.min_pivot().has_value());
}

TEST(PsdCertificate, RejectsBadShapes) {
  EXPECT_THROW(psd_certificate(Matrix(2, 3)), ShapeError);
  EXPECT_THROW(psd_certificate(Matrix::from_rows({{1, 2}, {0, 1}})), ShapeError);
}

TEST(PsdCertificate, RandomMatricesAgreeWithPrincipalMinors) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    Matrix m = trial % 3 == 0 ? random_gram(rng, n, 1 + static_cast<std::size_t>(trial) % n)
                              : random_symmetric(rng, n, 5);
    const auto cert = psd_certificate(m);
    ASSERT_EQ(cert.is_psd(), oracle::psd_by_minors(m)) << "trial " << trial;
    if (!cert.is_psd()) {
      ASSERT_TRUE(cert.witness.has_value());
      EXPECT_LT(m.quadratic_form(*cert.witness), 0) << "trial " << trial;
    }
  }
}

TEST(PsdCertificate, PsdVerdictHoldsOnThousandSamples) {
  std::mt19937_64 rng(7);
  const Matrix m = random_gram(rng, 6, 3);
  const auto cert = psd_certificate(m);
  ASSERT_TRUE(cert.is_psd());
  for (int i = 0; i < 1000; ++i) EXPECT_GE(m.quadratic_form(random_vector(rng, 6)), 0);
}

TEST(PsdCertificate, FactorizationReconstructsMatrix) {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 6);
    Matrix m = random_gram(rng, n, 1 + static_cast<std::size_t>(trial) % n);
    // Block structure exercises the component split.
    if (trial % 2 == 0)
      for (std::size_t j = 1; j < n; ++j) m(0, j) = m(j, 0) = 0;
    const auto cert = psd_certificate(m);
    ASSERT_TRUE(cert.is_psd());
    EXPECT_EQ(reconstruct(cert, n), m) << "trial " << trial;
    for (const auto& p : cert.pivots) EXPECT_GE(p, 0);
  }
}

TEST(PsdCertificate, MinPivot) {
  const Rational diag[] = {3, ratio(1, 2), 2};
  EXPECT_EQ(*psd_certificate(Matrix::diagonal(diag)).min_pivot(), ratio(1, 2));
}

TEST(SolveConsistent, SingularConsistentSystem) {
  const Matrix a = Matrix::from_rows({{1, 2}, {2, 4}});
  const auto x = solve_consistent(a, {3, 6});
  EXPECT_EQ(a.apply(x), (std::vector<Rational>{3, 6}));
  EXPECT_THROW(solve_consistent(a, {3, 7}), DomainError);
}

TEST(SolveConsistent, InvertibleSystem) {
  const Matrix a = Matrix::from_rows({{2, 1}, {1, 3}});
  const auto x = solve_consistent(a, {1, 2});
  EXPECT_EQ(x, (std::vector<Rational>{ratio(1, 5), ratio(3, 5)}));
}
