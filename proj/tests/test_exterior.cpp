#include <gtest/gtest.h>

#include "oracles.hpp"
#include "ulrich/exterior.hpp"
#include "ulrich/random.hpp"

using namespace ulrich;

namespace {

ExtElement random_form(Rng& rng, int n, int g) {
  return ExtElement::from_coordinates(n, g, rng.integer_vector(binomial(n, g), -3, 3));
}

}  // namespace

TEST(Exterior, BasisOrderingAndSigns) {
  const auto masks = basis_masks(4, 2);
  ASSERT_EQ(masks.size(), 6U);
  EXPECT_EQ(masks.front(), mask_of({1, 2}));
  EXPECT_EQ(masks.back(), mask_of({3, 4}));
  for (std::size_t i = 0; i < masks.size(); ++i) {
    EXPECT_EQ(basis_index(4, masks[i]), static_cast<Index>(i));
  }
  EXPECT_EQ(ExtElement::basis(6, {3, 1, 5}), -ExtElement::basis(6, {1, 3, 5}));
  EXPECT_TRUE(ExtElement::basis(6, {2, 2}).is_zero());
  EXPECT_EQ(contract(ExtDualElement::basis(4, {1, 2}), ExtElement::basis(4, {1, 2, 3, 4})),
            ExtElement::basis(4, {3, 4}));
}

TEST(Exterior, GradedCommutativity) {
  for (int t = 0; t < 120; ++t) {
    Rng rng(trial_seed(100, t));
    const int n = 3 + t % 5;
    const int p = rng.uniform(0, n), q = rng.uniform(0, n - p);
    const ExtElement a = random_form(rng, n, p), b = random_form(rng, n, q);
    const Rational sign = (p * q) % 2 == 0 ? 1 : -1;
    EXPECT_EQ(wedge(a, b), sign * wedge(b, a)) << "n=" << n << " p=" << p << " q=" << q;
  }
}

TEST(Exterior, Associativity) {
  for (int t = 0; t < 100; ++t) {
    Rng rng(trial_seed(200, t));
    const int n = 6;
    const ExtElement a = random_form(rng, n, 1 + t % 2), b = random_form(rng, n, 2),
                     c = random_form(rng, n, 1);
    EXPECT_EQ(wedge(wedge(a, b), c), wedge(a, wedge(b, c)));
  }
}

TEST(Exterior, WedgeOfVectorsIsMinors) {
  for (int t = 0; t < 100; ++t) {
    Rng rng(trial_seed(300, t));
    const int n = 4 + t % 3, k = 1 + t % 3;
    const Matrix vs = rng.integer_matrix(n, k, -4, 4);
    ExtElement w = vector_form(vs.col(0));
    for (int j = 1; j < k; ++j) w = wedge(w, vector_form(vs.col(j)));
    EXPECT_EQ(w.coordinates(), oracle::wedge_by_minors(vs));
  }
}

TEST(Exterior, Functoriality) {
  for (int t = 0; t < 120; ++t) {
    Rng rng(trial_seed(400, t));
    const int n = 4 + t % 3, g = 1 + t % 3;
    const Matrix a = rng.integer_matrix(n, n, -2, 2), b = rng.integer_matrix(n, n, -2, 2);
    EXPECT_EQ(lambda_power_matrix(Matrix(a * b), g),
              Matrix(lambda_power_matrix(a, g) * lambda_power_matrix(b, g)));
    const ExtElement x = random_form(rng, n, g), y = random_form(rng, n, n - g);
    // Lambda g acts multiplicatively and scales the top degree by det g.
    EXPECT_EQ(wedge(lambda_power_action(a, x), lambda_power_action(a, y)),
              lambda_power_action(a, wedge(x, y)));
    EXPECT_EQ(top_pair(lambda_power_action(a, x), lambda_power_action(a, y)),
              det(a) * top_pair(x, y));
  }
}

TEST(Exterior, DerivationIsInfinitesimalAction) {
  for (int t = 0; t < 100; ++t) {
    Rng rng(trial_seed(500, t));
    const int n = 5, p = 1 + t % 3, q = 1 + (t / 3) % 2;
    const Matrix a = rng.integer_matrix(n, n, -3, 3);
    const ExtElement x = random_form(rng, n, p), y = random_form(rng, n, q);
    EXPECT_EQ(derivation_action(a, wedge(x, y)),
              wedge(derivation_action(a, x), y) + wedge(x, derivation_action(a, y)));
    EXPECT_EQ(derivation_matrix(a, p) * x.coordinates(), derivation_action(a, x).coordinates());
  }
}

TEST(Exterior, TopPairingMatchesPermutations) {
  for (int t = 0; t < 100; ++t) {
    Rng rng(trial_seed(600, t));
    const int n = 6, p = t % 7;
    const ExtElement a = random_form(rng, n, p), b = random_form(rng, n, n - p);
    EXPECT_EQ(top_pair(a, b), oracle::top_by_permutations(a, b));
  }
}

TEST(Exterior, ContractionIsAntiderivation) {
  for (int t = 0; t < 100; ++t) {
    Rng rng(trial_seed(700, t));
    const int n = 6, p = 1 + t % 3;
    const int i = rng.uniform(1, n);
    const ExtDualElement e = ExtDualElement::basis(n, {i});
    const ExtElement x = random_form(rng, n, p), y = random_form(rng, n, 2);
    const Rational sign = p % 2 == 0 ? 1 : -1;
    EXPECT_EQ(contract(e, wedge(x, y)), wedge(contract(e, x), y) + sign * wedge(x, contract(e, y)));
  }
}
