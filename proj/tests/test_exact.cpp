#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ulrich/errors.hpp"
#include "ulrich/random.hpp"

using namespace ulrich;

namespace {

// Random low-rank matrix: product of n x r and r x m integer factors.
Matrix low_rank(Rng& rng, Index n, Index m, Index r) {
  return rng.integer_matrix(n, r, -4, 4) * rng.integer_matrix(r, m, -4, 4);
}

}  // namespace

TEST(Exact, BareissMatchesLaplace) {
  for (int t = 0; t < 120; ++t) {
    Rng rng(trial_seed(1000, t));
    const Index n = 1 + t % 6;
    Matrix m = rng.integer_matrix(n, n);
    if (t % 4 == 0) m.col(0) = m.col(n - 1);  // singular now and then
    if (t % 5 == 0) m /= Rational(rng.nonzero(1, 7));
    EXPECT_EQ(det(m), oracle::laplace_det(m)) << "trial " << t;
  }
}

TEST(Exact, RankNullity) {
  for (int t = 0; t < 120; ++t) {
    Rng rng(trial_seed(2000, t));
    const Index n = 1 + rng.uniform(0, 7), m = 1 + rng.uniform(0, 7);
    const Index r = rng.uniform(0, std::min(n, m));
    const Matrix a = low_rank(rng, n, m, r);
    const auto kernel = kernel_basis(a);
    EXPECT_EQ(rank(a) + static_cast<Index>(kernel.size()), m);
    EXPECT_LE(rank(a), r);
    for (const auto& k : kernel) EXPECT_TRUE(Vector(a * k).isZero());
    if (!kernel.empty()) EXPECT_EQ(rank(columns(kernel, m)), static_cast<Index>(kernel.size()));
  }
}

TEST(Exact, PfaffianSquaresToDeterminant) {
  for (int t = 0; t < 60; ++t) {
    Rng rng(trial_seed(3000, t));
    const Index n = 2 * (1 + t % 4);
    const Matrix s = oracle::random_skew(rng, n);
    const Rational pf = pfaffian(s);
    EXPECT_EQ(pf, oracle::pfaffian_expand(s));
    EXPECT_EQ(pf * pf, det(s));
  }
  EXPECT_EQ(pfaffian(Matrix::Zero(3, 3)), 0);
}

TEST(Exact, SolveAndInverse) {
  for (int t = 0; t < 50; ++t) {
    Rng rng(trial_seed(4000, t));
    const Matrix g = rng.invertible(5);
    const Matrix gi = inverse(g);
    EXPECT_EQ(Matrix(g * gi), identity(5));
    const Vector b = rng.integer_vector(5);
    const auto x = solve(g, b);
    ASSERT_TRUE(x);
    EXPECT_EQ(Vector(g * *x), b);
    EXPECT_EQ(det(rng.unimodular(5)), 1);
  }
  Matrix singular = Matrix::Zero(3, 3);
  singular(0, 0) = 1;
  EXPECT_THROW(inverse(singular), PreconditionFailed);
  EXPECT_FALSE(solve(singular, Vector::Ones(3)));
}

TEST(Exact, SpanPredicates) {
  Rng rng(5000);
  const Matrix a = rng.integer_matrix(6, 3);
  const Matrix mix = rng.invertible(3);
  EXPECT_TRUE(same_span(a, Matrix(a * mix)));
  EXPECT_TRUE(in_span(a, Vector(a * rng.integer_vector(3))));
  EXPECT_EQ(column_space_basis(a).cols(), rank(a));
  Matrix b = a;
  b.col(2) = rng.integer_vector(6);
  b(0, 2) += 1000;
  EXPECT_FALSE(same_span(a, b));
}

TEST(Exact, RationalStrings) {
  EXPECT_EQ(to_string(Rational(6) / Rational(-4)), "-3/2");
  EXPECT_EQ(to_string(Rational(5)), "5/1");
  EXPECT_EQ(parse_rational("-3/2"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("3/-2"), Rational(-3, 2));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("x"), Error);
  for (int t = 0; t < 50; ++t) {
    Rng rng(trial_seed(6000, t));
    const Rational x(rng.uniform(-1000, 1000), rng.nonzero(1, 1000));
    EXPECT_EQ(parse_rational(to_string(x)), x);
  }
}

TEST(Exact, CubeRoots) {
  EXPECT_EQ(*exact_cube_root(Rational(-27, 8)), Rational(-3, 2));
  EXPECT_EQ(*exact_cube_root(Rational(0)), 0);
  EXPECT_FALSE(exact_cube_root(Rational(2)));
  EXPECT_FALSE(exact_cube_root(Rational(1, 4)));
  EXPECT_EQ(pow(Rational(-2, 3), 5), Rational(-32, 243));
}
