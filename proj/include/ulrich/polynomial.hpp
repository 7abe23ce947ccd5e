#pragma once

#include <optional>
#include <vector>

#include "ulrich/exact.hpp"

namespace ulrich {

/// Univariate polynomial over the rationals, coefficients in ascending degree.
/// The leading stored coefficient is nonzero; the zero polynomial stores none.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> ascending);

  static Polynomial constant(const Rational& c);
  static Polynomial monomial(const Rational& c, int degree);

  /// Exact Newton interpolation through (nodes[i], values[i]).
  static Polynomial interpolate(const std::vector<Rational>& nodes,
                                const std::vector<Rational>& values);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int k) const;
  Rational leading() const;

  Rational operator()(const Rational& t) const;
  Polynomial derivative() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& c, const Polynomial& p);
  friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Interpolation nodes 0, 1, -1, 2, -2, ...
std::vector<Rational> interpolation_nodes(int count);

/// The q with q(0) = 1 and q^3 = p / p(0), if it exists. Requires p(0) != 0.
std::optional<Polynomial> cube_root(const Polynomial& p);

/// Monic gcd (zero if both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// Remainder of a modulo b (b nonzero).
Polynomial remainder(Polynomial a, const Polynomial& b);

bool is_squarefree(const Polynomial& p);

}  // namespace ulrich
