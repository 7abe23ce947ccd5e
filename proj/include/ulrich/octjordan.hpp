#pragma once

// Octonions over Q and the exceptional Jordan algebra H3(O).
//
// Octonions are pairs of quaternions (coordinates 0..3 and 4..7) multiplied
// by the Cayley-Dickson rule (a,b)(c,d) = (ac - conj(d) b, d a + b conj(c)).
// A Jordan element is the Hermitian matrix
//
//   [ a        z        conj(y) ]
//   [ conj(z)  b        x       ]
//   [ y        conj(x)  c       ]
//
// stored as 27 coordinates (a, b, c, x[0..7], y[0..7], z[0..7]).

#include <array>
#include <cstdint>

#include "ulrich/exact.hpp"
#include "ulrich/random.hpp"

namespace ulrich {

struct Octonion {
  std::array<Rational, 8> c{};

  static Octonion real(const Rational& r);
  /// Basis unit: 0 is the identity, 1..7 the imaginary units.
  static Octonion unit(int k);
  static Octonion random(Rng& rng, long lo = -3, long hi = 3);

  Octonion& operator+=(const Octonion& o);
  Octonion& operator-=(const Octonion& o);
  Octonion& operator*=(const Rational& s);

  friend Octonion operator+(Octonion a, const Octonion& b) { return a += b; }
  friend Octonion operator-(Octonion a, const Octonion& b) { return a -= b; }
  friend Octonion operator-(Octonion a) { return a *= Rational(-1); }
  friend Octonion operator*(const Rational& s, Octonion a) { return a *= s; }
  friend Octonion operator*(const Octonion& a, const Octonion& b);
  friend bool operator==(const Octonion& a, const Octonion& b) = default;
};

Octonion conj(const Octonion& u);
Rational norm(const Octonion& u);
Rational re(const Octonion& u);
/// Euclidean inner product of coordinates (= Re(u conj(v))).
Rational dot(const Octonion& u, const Octonion& v);

struct JordanElement {
  Rational a, b, c;
  Octonion x, y, z;

  static constexpr Index kDim = 27;

  static JordanElement identity();
  static JordanElement diag(const Rational& a, const Rational& b, const Rational& c);
  static JordanElement from_coordinates(const Vector& v);
  Vector coordinates() const;

  JordanElement& operator+=(const JordanElement& o);
  JordanElement& operator-=(const JordanElement& o);
  JordanElement& operator*=(const Rational& s);

  friend JordanElement operator+(JordanElement p, const JordanElement& q) { return p += q; }
  friend JordanElement operator-(JordanElement p, const JordanElement& q) { return p -= q; }
  friend JordanElement operator*(const Rational& s, JordanElement p) { return p *= s; }
  friend bool operator==(const JordanElement& p, const JordanElement& q) = default;

  bool is_zero() const { return *this == JordanElement{}; }
};

/// N = abc - a n(x) - b n(y) - c n(z) + 2 Re((xy)z); N(identity) = 1.
Rational cubic_norm(const JordanElement& X);

/// T(X, Y) = aa' + bb' + cc' + 2 (x.x' + y.y' + z.z').
Rational trace_pairing(const JordanElement& X, const JordanElement& Y);

/// Quadratic adjoint: T(sharp(X), Y) is the derivative of N at X along Y.
/// Computed by exact finite differences of cubic_norm.
JordanElement sharp(const JordanElement& X);

JordanElement cross(const JordanElement& X, const JordanElement& Y);

/// A random nonzero element with sharp(X) = 0 (a point of the rank-one cone).
JordanElement rank1_sample(Rng& rng);
JordanElement rank1_sample(std::uint64_t seed);

}  // namespace ulrich
