#pragma once

// Exterior algebra of a small rational vector space V = Q^n.
//
// Basis monomials e_{i1...ig} (1-based, strictly increasing indices) are
// encoded as bit masks. Within a fixed grade, basis order is lexicographic
// in the index tuples; that order defines the row/column ordering of every
// matrix built on top of this module. The top generator is e_{1...n} with
// coefficient +1.

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

#include "ulrich/exact.hpp"

namespace ulrich {

using Mask = std::uint32_t;

/// Lexicographic order on index tuples of equal length, expressed on masks:
/// the tuple holding the lowest differing index comes first.
struct LexLess {
  bool operator()(Mask a, Mask b) const noexcept {
    const Mask diff = a ^ b;
    return diff != 0 && (a & (diff & (~diff + 1))) != 0;
  }
};

inline constexpr int kMaxAmbient = 16;

Mask mask_of(std::initializer_list<int> indices);
std::vector<int> indices_of(Mask m);

/// Basis masks of Lambda^g Q^n in lexicographic order.
std::vector<Mask> basis_masks(int n, int g);

/// Position of `m` in basis_masks(n, popcount(m)).
Index basis_index(int n, Mask m);

long binomial(int n, int k);

/// Sign of e_a ^ e_b relative to e_{a|b}; zero when the index sets meet.
int wedge_sign(Mask a, Mask b);

enum class Variance { primal, dual };

/// Homogeneous element of Lambda^g V (primal) or Lambda^g V* (dual).
/// Zero coefficients are never stored.
template <Variance V>
class Form {
 public:
  using Terms = std::map<Mask, Rational, LexLess>;

  Form(int ambient, int grade);

  /// Signed basis element e_{i1...ig}; indices are 1-based and may be given
  /// in any order (a repeated index yields zero).
  static Form basis(int ambient, std::initializer_list<int> indices);
  static Form from_coordinates(int ambient, int grade, const Vector& coords);

  int ambient() const { return ambient_; }
  int grade() const { return grade_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Rational coefficient(Mask m) const;
  void add(Mask m, const Rational& c);

  /// Coordinates over basis_masks(ambient, grade).
  Vector coordinates() const;

  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  Form& operator*=(const Rational& c);

  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }
  friend Form operator-(Form a) { return a *= Rational(-1); }
  friend Form operator*(const Rational& c, Form a) { return a *= c; }
  friend Form operator*(Form a, const Rational& c) { return a *= c; }
  friend bool operator==(const Form& a, const Form& b) {
    return a.ambient_ == b.ambient_ && a.grade_ == b.grade_ && a.terms_ == b.terms_;
  }

 private:
  void check_compatible(const Form& other) const;

  int ambient_;
  int grade_;
  Terms terms_;
};

using ExtElement = Form<Variance::primal>;
using ExtDualElement = Form<Variance::dual>;

extern template class Form<Variance::primal>;
extern template class Form<Variance::dual>;

/// Degree-one element with the given coordinates.
ExtElement vector_form(const Vector& v);

/// Exterior product (sign from the sorting permutation).
template <Variance V>
Form<V> wedge(const Form<V>& a, const Form<V>& b);

/// Interior product; contract(e*_i, e_{i1..ig}) = sum_k (-1)^(k-1) [i = i_k] e_{..^i_k..},
/// and a dual monomial e*_{j1<...<jp} contracts e*_{j1} first.
ExtElement contract(const ExtDualElement& a, const ExtElement& b);

/// Coefficient of e_{1...n} in a ^ b.
Rational top_pair(const ExtElement& a, const ExtElement& b);

/// Lambda^g of the linear map `g` applied to `a`.
ExtElement lambda_power_action(const Matrix& g, const ExtElement& a);

/// Matrix of Lambda^grade(g) in the lexicographic basis.
Matrix lambda_power_matrix(const Matrix& g, int grade);

/// Derivation extension of the endomorphism `a` (gl(V) action on Lambda V).
ExtElement derivation_action(const Matrix& a, const ExtElement& x);
Matrix derivation_matrix(const Matrix& a, int grade);

/// Human-readable form such as "e123 + 2/1 e456".
template <Variance V>
std::string to_string(const Form<V>& f);

}  // namespace ulrich
