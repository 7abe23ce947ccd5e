#include "ulrich/sl6.hpp"

namespace ulrich {
namespace {

constexpr int kN = 6;
constexpr int kMaxDraws = 32;

void check_three_form(const ExtElement& omega) {
  if (omega.ambient() != kN) throw AmbientMismatch("sl6: form must live in dimension 6");
  if (omega.grade() != 3) throw GradeMismatch("sl6: form must have grade 3");
}

Matrix raw_theta(const ExtElement& omega) {
  Matrix m(kN, kN);
  for (int i = 0; i < kN; ++i) {
    const ExtElement partial = wedge(omega, contract(ExtDualElement::basis(kN, {i + 1}), omega));
    for (int j = 0; j < kN; ++j) m(i, j) = top_pair(ExtElement::basis(kN, {j + 1}), partial);
  }
  const Rational mean = m.trace() / kN;
  for (int i = 0; i < kN; ++i) m(i, i) -= mean;
  return m;
}

// Scalar fixing theta(omega0) = Id_A - Id_B.
const Rational& calibration() {
  static const Rational kappa = [] {
    const Matrix raw = raw_theta(sl6_omega0());
    Matrix target = identity(kN);
    for (int i = 3; i < kN; ++i) target(i, i) = -1;
    const Rational k = Rational(1) / raw(0, 0);
    if (Matrix(k * raw) != target) {
      throw CalibrationFailed("sl6: theta(omega0) is not proportional to Id_A - Id_B");
    }
    return k;
  }();
  return kappa;
}

}  // namespace

Sl6Module parse_sl6_module(std::string_view name) {
  if (name == "V6") return Sl6Module::V6;
  if (name == "V6dual") return Sl6Module::V6dual;
  if (name == "Wedge3V6") return Sl6Module::Wedge3V6;
  throw UnknownModule("unknown sl6 module '" + std::string(name) + "'");
}

std::string module_name(Sl6Module m) {
  switch (m) {
    case Sl6Module::V6: return "V6";
    case Sl6Module::V6dual: return "V6dual";
    case Sl6Module::Wedge3V6: return "Wedge3V6";
  }
  return {};
}

Index module_dim(Sl6Module m) { return m == Sl6Module::Wedge3V6 ? 20 : 6; }

ExtElement sl6_omega0() {
  return ExtElement::basis(kN, {1, 2, 3}) + ExtElement::basis(kN, {4, 5, 6});
}

ExtElement sl6_omega1() {
  return ExtElement::basis(kN, {1, 2, 6}) + ExtElement::basis(kN, {2, 3, 4}) +
         ExtElement::basis(kN, {3, 1, 5});
}

Matrix sl6_theta(const ExtElement& omega) {
  check_three_form(omega);
  return calibration() * raw_theta(omega);
}

Matrix sl6_theta_module(const ExtElement& omega, Sl6Module m) {
  const Matrix t = sl6_theta(omega);
  switch (m) {
    case Sl6Module::V6: return t;
    case Sl6Module::V6dual: return -t.transpose();
    case Sl6Module::Wedge3V6: return derivation_matrix(t, 3);
  }
  throw UnknownModule("sl6_theta_module: unknown module");
}

Rational sl6_quartic(const ExtElement& omega) {
  const Matrix t = sl6_theta(omega);
  return Matrix(t * t).trace() / kN;
}

ExtElement sl6_sample_H(Rng& rng) {
  const ExtElement w1 = sl6_omega1();
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const ExtElement w = lambda_power_action(rng.unimodular(kN), w1);
    if (!sl6_quartic(w).is_zero()) {
      throw InvariantViolation("sl6_sample_H: translate of omega1 has h != 0");
    }
    if (corank(sl6_theta(w)) == 3) return w;
  }
  throw SamplerExhausted("sl6_sample_H: no corank-3 translate found");
}

ExtElement sl6_sample_H(std::uint64_t seed) {
  Rng rng(seed);
  return sl6_sample_H(rng);
}

Matrix sl6_pi_fiber(const ExtElement& omega) {
  const Matrix t = sl6_theta(omega);
  if (corank(t) != 3) throw PreconditionFailed("sl6_pi_fiber: theta(omega) must have corank 3");
  const Matrix a = column_space_basis(t);
  if (!same_span(a, columns(kernel_basis(t), kN))) {
    throw InvariantViolation("sl6_pi_fiber: image and kernel of theta(omega) differ");
  }
  std::vector<Vector> gens;
  for (Index i = 0; i < a.cols(); ++i) {
    for (Index j = i + 1; j < a.cols(); ++j) {
      const ExtElement aij = wedge(vector_form(a.col(i)), vector_form(a.col(j)));
      for (int k = 1; k <= kN; ++k) {
        gens.push_back(wedge(aij, ExtElement::basis(kN, {k})).coordinates());
      }
    }
  }
  if (!in_span(columns(gens, binomial(kN, 3)), omega.coordinates())) {
    throw InvariantViolation("sl6_pi_fiber: omega is not in Lambda^2 A ^ V6");
  }
  return a;
}

Index eigen_multiplicity(const Matrix& m, const Rational& lambda) {
  if (m.rows() != m.cols()) throw NonSquare("eigen_multiplicity: matrix is not square");
  return corank(Matrix(m - lambda * identity(m.rows())));
}

int nilpotency_index(const Matrix& m) {
  if (m.rows() != m.cols()) throw NonSquare("nilpotency_index: matrix is not square");
  Matrix power = m;
  for (int k = 1; k <= m.rows(); ++k) {
    if (power.isZero()) return k;
    power = power * m;
  }
  return 0;
}

}  // namespace ulrich
