#include <gtest/gtest.h>

#include "ulrich/polynomial.hpp"
#include "ulrich/random.hpp"

using namespace ulrich;

namespace {

Polynomial random_poly(Rng& rng, int degree) {
  std::vector<Rational> c;
  for (int i = 0; i < degree; ++i) c.push_back(rng.uniform(-5, 5));
  c.push_back(rng.nonzero(-5, 5));
  return Polynomial(c);
}

}  // namespace

TEST(Polynomial, InterpolationRecovers) {
  for (int t = 0; t < 50; ++t) {
    Rng rng(trial_seed(10, t));
    const Polynomial p = random_poly(rng, t % 9);
    const auto nodes = interpolation_nodes(p.degree() + 3);
    std::vector<Rational> values;
    for (const auto& x : nodes) values.push_back(p(x));
    EXPECT_EQ(Polynomial::interpolate(nodes, values), p);
  }
}

TEST(Polynomial, CubeRootOfCube) {
  for (int t = 0; t < 50; ++t) {
    Rng rng(trial_seed(20, t));
    std::vector<Rational> c{1};
    for (int i = 0; i < 1 + t % 7; ++i) c.push_back(rng.uniform(-4, 4));
    const Polynomial q(c);
    const auto root = cube_root(q * q * q);
    ASSERT_TRUE(root);
    EXPECT_EQ(*root, q);
  }
  EXPECT_FALSE(cube_root(Polynomial({1, 1})));
  EXPECT_FALSE(cube_root(Polynomial({1, 0, 1})));
}

TEST(Polynomial, SquarefreeAndGcd) {
  const Polynomial x_minus_1({-1, 1}), x_plus_2({2, 1});
  EXPECT_TRUE(is_squarefree(x_minus_1 * x_plus_2));
  EXPECT_FALSE(is_squarefree(x_minus_1 * x_minus_1 * x_plus_2));
  EXPECT_EQ(gcd(x_minus_1 * x_plus_2, x_plus_2 * x_plus_2), x_plus_2);
  EXPECT_TRUE(remainder(x_minus_1 * x_plus_2, x_plus_2).is_zero());
  EXPECT_EQ(Polynomial({0, 0, 3}).derivative(), Polynomial({0, 6}));
  EXPECT_EQ(Polynomial().degree(), -1);
}
