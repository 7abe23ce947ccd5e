#pragma once

// The half-spin representation Delta+ = Q + Lambda^2 E + Lambda^4 E + Lambda^6 E
// of Spin12 (E = Q^6, V12 = E + E*) and the equivariant quadratic map
// theta: Delta+ -> so12 = Lambda^2 E + End(E) + Lambda^2 E*.
//
// Spinor coordinates (32): omega0, omega2 (lex), omega4 (lex), omega6.
// so12 elements act on V12 by the block matrix
//
//   [  A       plus  ]
//   [ -minus  -A^T   ]
//
// where plus/minus are the skew matrices of the 2-forms; these are exactly
// the matrices skew for the split form <(e, f), (e', f')> = f(e') + f'(e).

#include <cstdint>

#include "ulrich/exterior.hpp"
#include "ulrich/random.hpp"

namespace ulrich {

struct Spinor {
  Rational omega0;
  ExtElement omega2{6, 2};
  ExtElement omega4{6, 4};
  ExtElement omega6{6, 6};

  static constexpr Index kDim = 32;

  static Spinor from_coordinates(const Vector& v);
  Vector coordinates() const;

  /// Coefficient of e123456 in omega6.
  Rational top() const;

  Spinor& operator+=(const Spinor& o);
  Spinor& operator*=(const Rational& s);
  friend Spinor operator+(Spinor a, const Spinor& b) { return a += b; }
  friend Spinor operator-(Spinor a, const Spinor& b) { return a += Rational(-1) * b; }
  friend Spinor operator*(const Rational& s, Spinor a) { return a *= s; }
  friend bool operator==(const Spinor& a, const Spinor& b) = default;
};

struct So12Element {
  ExtElement plus{6, 2};
  Matrix zero = Matrix::Zero(6, 6);
  ExtDualElement minus{6, 2};

  friend bool operator==(const So12Element& a, const So12Element& b) = default;
};

/// [1, 0, 0, e123456].
Spinor spin_w0();
/// [1, e12 + e34 + e56, 0, 0].
Spinor spin_w1();

/// Frozen normalizations: component scalars of theta and the divisors in
/// the pure-spinor parametrization [1, w, w^w / alpha2, w^w^w / alpha3].
struct SpinCalibration {
  Rational plus, zero, minus;
  int alpha2 = 0;
  int alpha3 = 0;
};

/// Computed once: the scalars are the unique solution (up to one overall
/// factor, fixed by theta(w0) = Id_E) of infinitesimal equivariance; the
/// divisors are searched over {1, 2, 6}^2. Throws CalibrationFailed.
const SpinCalibration& spin_calibration();

So12Element spin_theta(const Spinor& w);
Spinor spin_param(const ExtElement& omega);

Matrix spin_so12_matrix(const So12Element& x);
Matrix spin_theta_v12(const Spinor& w);

/// Gram matrix of the split form on V12.
Matrix split_form();

/// tr(theta_V12(w)^2) / 12, so that h(w0) = 1.
Rational spin_quartic(const Spinor& w);

// Infinitesimal actions of so12 on Delta+.
Spinor spin_act_plus(const ExtElement& beta, const Spinor& w);
Spinor spin_act_minus(const ExtDualElement& gamma, const Spinor& w);
Spinor spin_act_zero(const Matrix& a, const Spinor& w);

/// exp of the nilpotent actions above (exact: the series stops at 1/3!).
Spinor spin_exp_plus(const ExtElement& beta, const Spinor& w);
Spinor spin_exp_minus(const ExtDualElement& gamma, const Spinor& w);
/// Lambda^even(g), i.e. the GL(E) action up to a scalar.
Spinor spin_act_gl(const Matrix& g, const Spinor& w);

/// Random orbit translate of w1 with h = 0 and corank 6 on V12.
Spinor spin_sample_H(Rng& rng);
Spinor spin_sample_H(std::uint64_t seed);

/// Whether the column span of `image` (12 x k) is isotropic for the split form.
bool is_isotropic(const Matrix& image);

struct SpinSurvey {
  int trials = 0;
  int generic_invertible = 0;  // random points with h != 0 and corank 0
  int h_corank6_isotropic = 0;
};

SpinSurvey spin_corank_suite(int trials, std::uint64_t seed);

}  // namespace ulrich
