#include "ulrich/heptic.hpp"

namespace ulrich {
namespace {

constexpr int kN = 7;
constexpr int kMaxDraws = 32;
constexpr Mask kTop = (Mask{1} << kN) - 1;

void check_three_form(const ExtElement& omega) {
  if (omega.ambient() != kN) throw AmbientMismatch("heptic: form must live in dimension 7");
  if (omega.grade() != 3) throw GradeMismatch("heptic: form must have grade 3");
}

ExtElement form(std::initializer_list<std::initializer_list<int>> terms) {
  ExtElement w(kN, 3);
  for (auto t : terms) w += ExtElement::basis(kN, t);
  return w;
}

}  // namespace

ExtElement heptic_omega0() { return form({{1, 2, 3}, {4, 5, 6}, {1, 4, 7}, {2, 5, 7}, {3, 6, 7}}); }
ExtElement heptic_omega1() { return form({{1, 2, 3}, {4, 5, 6}, {1, 4, 7}, {2, 5, 7}}); }
ExtElement heptic_omega2() { return form({{1, 2, 3}, {4, 5, 6}, {1, 4, 7}}); }

Matrix heptic_phi(const ExtElement& omega) {
  check_three_form(omega);
  const auto masks = basis_masks(kN, 2);
  const auto size = static_cast<Index>(masks.size());
  Matrix m = Matrix::Zero(size, size);
  for (Index i = 0; i < size; ++i) {
    for (Index j = i + 1; j < size; ++j) {
      const Mask a = masks[static_cast<std::size_t>(i)];
      const Mask b = masks[static_cast<std::size_t>(j)];
      if (a & b) continue;
      const Mask rest = kTop & ~(a | b);
      const Rational c = omega.coefficient(rest);
      if (c.is_zero()) continue;
      const int s = wedge_sign(a, b) * wedge_sign(rest, a | b);
      m(i, j) = s > 0 ? c : -c;
      m(j, i) = m(i, j);  // even-degree factors commute
    }
  }
  return m;
}

ExtElement heptic_sample_H(Rng& rng) {
  const ExtElement w1 = heptic_omega1();
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const ExtElement w = lambda_power_action(rng.invertible(kN), w1);
    if (corank(heptic_phi(w)) == 3) return w;
  }
  throw SamplerExhausted("heptic_sample_H: no corank-3 translate found");
}

ExtElement heptic_sample_H(std::uint64_t seed) {
  Rng rng(seed);
  return heptic_sample_H(rng);
}

Polynomial heptic_det_line(const ExtElement& a, const ExtElement& b) {
  check_three_form(a);
  check_three_form(b);
  const auto nodes = interpolation_nodes(22);
  std::vector<Rational> values;
  values.reserve(nodes.size());
  for (const Rational& t : nodes) values.push_back(det(heptic_phi(a + t * b)));
  return Polynomial::interpolate(nodes, values);
}

Polynomial heptic_cuberoot_line(const ExtElement& a, const ExtElement& b) {
  const Polynomial p = heptic_det_line(a, b);
  if (p.coefficient(0).is_zero()) {
    throw PreconditionFailed("heptic_cuberoot_line: det phi vanishes at the base point");
  }
  auto q = cube_root(p);
  if (!q) throw NotAPerfectCube("heptic_cuberoot_line: det phi along the line is not a cube");
  return *q;
}

Rational heptic_invariant_pointwise(const ExtElement& omega) {
  static const Rational base = det(heptic_phi(heptic_omega0()));
  const Rational ratio = det(heptic_phi(omega)) / base;
  auto root = exact_cube_root(ratio);
  if (!root) throw NotAPerfectCube("heptic_invariant: det ratio " + to_string(ratio) +
                                   " is not a rational cube");
  return *root;
}

Rational heptic_invariant_line(const ExtElement& omega) {
  const ExtElement w0 = heptic_omega0();
  return heptic_cuberoot_line(w0, omega - w0)(Rational(1));
}

Rational heptic_invariant(const ExtElement& omega) {
  const Rational pointwise = heptic_invariant_pointwise(omega);
  const Rational line = heptic_invariant_line(omega);
  if (pointwise != line) {
    throw IdentityViolation("heptic_invariant: pointwise " + to_string(pointwise) +
                            " differs from line value " + to_string(line));
  }
  return pointwise;
}

Matrix wedge2_u_wedge_v(const Matrix& u) {
  if (u.rows() != kN) throw DimensionMismatch("wedge2_u_wedge_v: U must sit in V7");
  std::vector<Vector> gens;
  for (Index i = 0; i < u.cols(); ++i) {
    for (Index j = i + 1; j < u.cols(); ++j) {
      const ExtElement uij = wedge(vector_form(u.col(i)), vector_form(u.col(j)));
      for (int k = 1; k <= kN; ++k) {
        gens.push_back(wedge(uij, ExtElement::basis(kN, {k})).coordinates());
      }
    }
  }
  return columns(gens, binomial(kN, 3));
}

bool heptic_fiber_family(const Rational& s, const Rational& t, const Rational& u,
                         const Rational& v) {
  if ((s.is_zero() && t.is_zero()) || (u.is_zero() && v.is_zero())) {
    throw PreconditionFailed("heptic_fiber_family: (s, t) and (u, v) must be nonzero");
  }
  Matrix basis = Matrix::Zero(kN, 4);
  basis(0, 0) = 1;
  basis(3, 1) = 1;
  basis(1, 2) = s;
  basis(2, 2) = t;
  basis(4, 3) = u;
  basis(5, 3) = v;
  return in_span(wedge2_u_wedge_v(basis), heptic_omega2().coordinates());
}

bool heptic_kernel_vs_wedge(const ExtElement& omega, const Matrix& u) {
  check_three_form(omega);
  if (u.rows() != kN || u.cols() != 4 || rank(u) != 4) {
    throw PreconditionFailed("heptic_kernel_vs_wedge: U must be a 4-dimensional subspace of V7");
  }
  if (!in_span(wedge2_u_wedge_v(u), omega.coordinates())) {
    throw PreconditionFailed("heptic_kernel_vs_wedge: omega is not in Lambda^2 U ^ V7");
  }
  const Matrix phi = heptic_phi(omega);
  if (corank(phi) != 3) throw PreconditionFailed("heptic_kernel_vs_wedge: corank of phi is not 3");

  // Basis u_i ^ u_j of Lambda^2 U, in Lambda^2 V7 coordinates, and the images
  // omega ^ u_i ^ u_j in Lambda^5 V7.
  std::vector<Vector> pairs;
  std::vector<Vector> images;
  for (Index i = 0; i < 4; ++i) {
    for (Index j = i + 1; j < 4; ++j) {
      const ExtElement uij = wedge(vector_form(u.col(i)), vector_form(u.col(j)));
      pairs.push_back(uij.coordinates());
      images.push_back(wedge(omega, uij).coordinates());
    }
  }
  const Matrix to_v = columns(pairs, binomial(kN, 2));
  const Matrix map = columns(images, binomial(kN, 5));
  const auto kernel = kernel_basis(map);
  if (kernel.size() != 3) return false;
  const Matrix lifted = to_v * columns(kernel, 6);
  return same_span(lifted, columns(kernel_basis(phi), binomial(kN, 2)));
}

HepticDimensionCount heptic_dimension_count() {
  HepticDimensionCount c;
  const long forms = binomial(kN, 3);
  c.grassmannian = 4 * (forms - 4);
  c.group = kN * kN - 1;
  c.family = c.grassmannian - c.group;
  return c;
}

}  // namespace ulrich
