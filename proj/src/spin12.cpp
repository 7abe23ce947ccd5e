#include "ulrich/spin12.hpp"

#include <array>

namespace ulrich {
namespace {

constexpr int kN = 6;
constexpr Mask kTop = (Mask{1} << kN) - 1;
constexpr int kMaxDraws = 32;

struct Components {
  ExtElement plus{kN, 2};
  Matrix zero = Matrix::Zero(kN, kN);
  ExtDualElement minus{kN, 2};
};

ExtElement unit(int i) { return ExtElement::basis(kN, {i}); }

// theta before the per-component scalars are applied.
Components raw_components(const Spinor& w) {
  Components c;
  const Rational s6 = w.top();
  const auto pairs = basis_masks(kN, 2);

  // plus: s6 omega2 - (omega4 * omega4), (omega4 * omega4)_ij = 1/2 top(i_ij omega4 ^ omega4).
  c.plus = s6 * w.omega2;
  for (Mask m : pairs) {
    ExtDualElement e(kN, 2);
    e.add(m, Rational(1));
    c.plus.add(m, -top_pair(contract(e, w.omega4), w.omega4) / 2);
  }

  // zero: (omega0 s6 - top(omega2 ^ omega4)) Id + 2 P, P_rc = top(e_c ^ i_r omega2 ^ omega4).
  const Rational t = top_pair(w.omega2, w.omega4);
  for (int r = 0; r < kN; ++r) {
    const ExtElement ir = contract(ExtDualElement::basis(kN, {r + 1}), w.omega2);
    for (int col = 0; col < kN; ++col) {
      c.zero(r, col) = 2 * top_pair(wedge(unit(col + 1), ir), w.omega4);
    }
    c.zero(r, r) += w.omega0 * s6 - t;
  }

  // minus: omega0 *omega4 - 1/2 *(omega2 ^ omega2), (*alpha)_ij = top(e_ij ^ alpha).
  const ExtElement square = wedge(w.omega2, w.omega2);
  for (Mask m : pairs) {
    ExtElement e(kN, 2);
    e.add(m, Rational(1));
    c.minus.add(m, w.omega0 * top_pair(e, w.omega4) - top_pair(e, square) / 2);
  }
  return c;
}

Matrix skew_matrix(const std::map<Mask, Rational, LexLess>& terms) {
  Matrix s = Matrix::Zero(kN, kN);
  for (const auto& [m, c] : terms) {
    const auto idx = indices_of(m);
    s(idx[0] - 1, idx[1] - 1) = c;
    s(idx[1] - 1, idx[0] - 1) = -c;
  }
  return s;
}

std::array<Matrix, 3> component_matrices(const Components& c) {
  So12Element p, z, m;
  p.plus = c.plus;
  z.zero = c.zero;
  m.minus = c.minus;
  return {spin_so12_matrix(p), spin_so12_matrix(z), spin_so12_matrix(m)};
}

Spinor random_spinor(Rng& rng, long lo, long hi) {
  return Spinor::from_coordinates(rng.integer_vector(Spinor::kDim, lo, hi));
}

Spinor param(const ExtElement& omega, int alpha2, int alpha3) {
  Spinor w;
  w.omega0 = 1;
  w.omega2 = omega;
  const ExtElement square = wedge(omega, omega);
  w.omega4 = Rational(1, alpha2) * square;
  w.omega6 = Rational(1, alpha3) * wedge(square, omega);
  return w;
}

So12Element apply(const SpinCalibration& k, const Components& c) {
  So12Element x;
  x.plus = k.plus * c.plus;
  x.zero = k.zero * c.zero;
  x.minus = k.minus * c.minus;
  return x;
}

SpinCalibration calibrate() {
  SpinCalibration k;
  Rng rng(0x5350494eULL);

  // d theta_w(X w) = [X, theta(w)] for X in each summand of so12; the three
  // component scalars enter linearly.
  std::vector<Vector> rows;
  for (int trial = 0; trial < 2; ++trial) {
    const Spinor w = random_spinor(rng, -3, 3);
    const ExtElement beta = ExtElement::from_coordinates(kN, 2, rng.integer_vector(15, -3, 3));
    const ExtDualElement gamma =
        ExtDualElement::from_coordinates(kN, 2, rng.integer_vector(15, -3, 3));
    const Matrix a = rng.integer_matrix(kN, kN, -3, 3);

    So12Element xp, xz, xm;
    xp.plus = beta;
    xz.zero = a;
    xm.minus = gamma;
    const std::array<std::pair<Spinor, Matrix>, 3> generators{{
        {spin_act_plus(beta, w), spin_so12_matrix(xp)},
        {spin_act_zero(a, w), spin_so12_matrix(xz)},
        {spin_act_minus(gamma, w), spin_so12_matrix(xm)},
    }};
    const auto at_w = component_matrices(raw_components(w));
    for (const auto& [u, x] : generators) {
      const auto sum = component_matrices(raw_components(w + u));
      const auto at_u = component_matrices(raw_components(u));
      std::array<Matrix, 3> lhs;
      for (std::size_t c = 0; c < 3; ++c) {
        lhs[c] = sum[c] - at_w[c] - at_u[c] - (x * at_w[c] - at_w[c] * x);
      }
      for (Index i = 0; i < 12; ++i) {
        for (Index j = 0; j < 12; ++j) {
          Vector row(3);
          row << lhs[0](i, j), lhs[1](i, j), lhs[2](i, j);
          if (!row.isZero()) rows.push_back(row);
        }
      }
    }
  }
  const Matrix system = columns(rows, 3).transpose();
  const auto kernel = kernel_basis(system);
  if (kernel.size() != 1) {
    throw CalibrationFailed("spin: equivariance leaves " + std::to_string(kernel.size()) +
                            " free scalars instead of 1");
  }
  const Components c0 = raw_components(spin_w0());
  if (c0.zero(0, 0).is_zero() || kernel[0](1).is_zero()) {
    throw CalibrationFailed("spin: zero component vanishes at w0");
  }
  const Rational scale = 1 / (kernel[0](1) * c0.zero(0, 0));
  k.plus = kernel[0](0) * scale;
  k.zero = kernel[0](1) * scale;
  k.minus = kernel[0](2) * scale;

  So12Element expected;
  expected.zero = identity(kN);
  if (!(apply(k, c0) == expected)) {
    throw CalibrationFailed("spin: theta(w0) is not Id_E after normalization");
  }

  // Divided-power normalization of the pure-spinor parametrization.
  std::vector<ExtElement> probes;
  for (int i = 0; i < 20; ++i) {
    probes.push_back(ExtElement::from_coordinates(kN, 2, rng.integer_vector(15, -3, 3)));
  }
  for (int a2 : {1, 2, 6}) {
    for (int a3 : {1, 2, 6}) {
      bool vanishes = true;
      for (const auto& omega : probes) {
        if (!(apply(k, raw_components(param(omega, a2, a3))) == So12Element{})) {
          vanishes = false;
          break;
        }
      }
      if (vanishes) {
        k.alpha2 = a2;
        k.alpha3 = a3;
        return k;
      }
    }
  }
  throw CalibrationFailed("spin: no divided-power normalization makes theta vanish on pure spinors");
}

}  // namespace

Spinor Spinor::from_coordinates(const Vector& v) {
  if (v.size() != kDim) throw DimensionMismatch("Spinor: expected 32 coordinates");
  Spinor w;
  w.omega0 = v(0);
  w.omega2 = ExtElement::from_coordinates(kN, 2, v.segment(1, 15));
  w.omega4 = ExtElement::from_coordinates(kN, 4, v.segment(16, 15));
  w.omega6 = ExtElement::from_coordinates(kN, 6, v.segment(31, 1));
  return w;
}

Vector Spinor::coordinates() const {
  Vector v(kDim);
  v(0) = omega0;
  v.segment(1, 15) = omega2.coordinates();
  v.segment(16, 15) = omega4.coordinates();
  v(31) = top();
  return v;
}

Rational Spinor::top() const { return omega6.coefficient(kTop); }

Spinor& Spinor::operator+=(const Spinor& o) {
  omega0 += o.omega0;
  omega2 += o.omega2;
  omega4 += o.omega4;
  omega6 += o.omega6;
  return *this;
}

Spinor& Spinor::operator*=(const Rational& s) {
  omega0 *= s;
  omega2 *= s;
  omega4 *= s;
  omega6 *= s;
  return *this;
}

Spinor spin_w0() {
  Spinor w;
  w.omega0 = 1;
  w.omega6 = ExtElement::basis(kN, {1, 2, 3, 4, 5, 6});
  return w;
}

Spinor spin_w1() {
  Spinor w;
  w.omega0 = 1;
  w.omega2 = ExtElement::basis(kN, {1, 2}) + ExtElement::basis(kN, {3, 4}) +
             ExtElement::basis(kN, {5, 6});
  return w;
}

const SpinCalibration& spin_calibration() {
  static const SpinCalibration k = calibrate();
  return k;
}

So12Element spin_theta(const Spinor& w) { return apply(spin_calibration(), raw_components(w)); }

Spinor spin_param(const ExtElement& omega) {
  if (omega.ambient() != kN || omega.grade() != 2) {
    throw GradeMismatch("spin_param: expected a 2-form in dimension 6");
  }
  const SpinCalibration& k = spin_calibration();
  return param(omega, k.alpha2, k.alpha3);
}

Matrix spin_so12_matrix(const So12Element& x) {
  if (x.zero.rows() != kN || x.zero.cols() != kN) {
    throw DimensionMismatch("spin_so12_matrix: End(E) block must be 6x6");
  }
  Matrix m(2 * kN, 2 * kN);
  m << x.zero, skew_matrix(x.plus.terms()),
       -skew_matrix(x.minus.terms()), -x.zero.transpose();
  return m;
}

Matrix spin_theta_v12(const Spinor& w) { return spin_so12_matrix(spin_theta(w)); }

Matrix split_form() {
  Matrix j = Matrix::Zero(2 * kN, 2 * kN);
  j.topRightCorner(kN, kN) = identity(kN);
  j.bottomLeftCorner(kN, kN) = identity(kN);
  return j;
}

Rational spin_quartic(const Spinor& w) {
  const Matrix m = spin_theta_v12(w);
  return Matrix(m * m).trace() / (2 * kN);
}

Spinor spin_act_plus(const ExtElement& beta, const Spinor& w) {
  Spinor out;
  out.omega2 = w.omega0 * beta;
  out.omega4 = wedge(beta, w.omega2);
  out.omega6 = wedge(beta, w.omega4);
  return out;
}

Spinor spin_act_minus(const ExtDualElement& gamma, const Spinor& w) {
  Spinor out;
  out.omega0 = contract(gamma, w.omega2).coefficient(0);
  out.omega2 = contract(gamma, w.omega4);
  out.omega4 = contract(gamma, w.omega6);
  return out;
}

Spinor spin_act_zero(const Matrix& a, const Spinor& w) {
  const Rational half_trace = a.trace() / 2;
  Spinor out;
  out.omega0 = -half_trace * w.omega0;
  out.omega2 = derivation_action(a, w.omega2) - half_trace * w.omega2;
  out.omega4 = derivation_action(a, w.omega4) - half_trace * w.omega4;
  out.omega6 = derivation_action(a, w.omega6) - half_trace * w.omega6;
  return out;
}

namespace {

template <typename Step>
Spinor exp_nilpotent(const Spinor& w, Step step) {
  const Spinor x1 = step(w);
  const Spinor x2 = step(x1);
  const Spinor x3 = step(x2);
  return w + x1 + Rational(1, 2) * x2 + Rational(1, 6) * x3;
}

}  // namespace

Spinor spin_exp_plus(const ExtElement& beta, const Spinor& w) {
  return exp_nilpotent(w, [&](const Spinor& s) { return spin_act_plus(beta, s); });
}

Spinor spin_exp_minus(const ExtDualElement& gamma, const Spinor& w) {
  return exp_nilpotent(w, [&](const Spinor& s) { return spin_act_minus(gamma, s); });
}

Spinor spin_act_gl(const Matrix& g, const Spinor& w) {
  Spinor out;
  out.omega0 = w.omega0;
  out.omega2 = lambda_power_action(g, w.omega2);
  out.omega4 = lambda_power_action(g, w.omega4);
  out.omega6 = lambda_power_action(g, w.omega6);
  return out;
}

Spinor spin_sample_H(Rng& rng) {
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const auto beta = [&] {
      return ExtElement::from_coordinates(kN, 2, rng.integer_vector(15, -2, 2));
    };
    const auto gamma = [&] {
      return ExtDualElement::from_coordinates(kN, 2, rng.integer_vector(15, -2, 2));
    };
    Spinor w = spin_act_gl(rng.invertible(kN), spin_w1());
    w = spin_exp_plus(beta(), w);
    w = spin_exp_minus(gamma(), w);
    w = spin_exp_plus(beta(), w);
    if (!spin_quartic(w).is_zero()) {
      throw InvariantViolation("spin_sample_H: orbit translate of w1 has h != 0");
    }
    if (corank(spin_theta_v12(w)) == 6) return w;
  }
  throw SamplerExhausted("spin_sample_H: no corank-6 translate found");
}

Spinor spin_sample_H(std::uint64_t seed) {
  Rng rng(seed);
  return spin_sample_H(rng);
}

bool is_isotropic(const Matrix& image) {
  if (image.rows() != 2 * kN) throw DimensionMismatch("is_isotropic: vectors must lie in V12");
  return Matrix(image.transpose() * split_form() * image).isZero();
}

SpinSurvey spin_corank_suite(int trials, std::uint64_t seed) {
  if (trials < 1) throw PreconditionFailed("spin_corank_suite: trials must be >= 1");
  SpinSurvey s;
  s.trials = trials;
  for (int t = 0; t < trials; ++t) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
    Spinor w = random_spinor(rng, -9, 9);
    while (spin_quartic(w).is_zero()) w = random_spinor(rng, -9, 9);
    if (corank(spin_theta_v12(w)) == 0) ++s.generic_invertible;
    const Matrix m = spin_theta_v12(spin_sample_H(rng));
    if (corank(m) == 6 && is_isotropic(column_space_basis(m))) ++s.h_corank6_isotropic;
  }
  return s;
}

}  // namespace ulrich
