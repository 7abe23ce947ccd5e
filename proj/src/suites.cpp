#include "suites.hpp"

#include <algorithm>

#include "ulrich/heptic.hpp"
#include "ulrich/octjordan.hpp"
#include "ulrich/severi.hpp"
#include "ulrich/sl6.hpp"
#include "ulrich/spin12.hpp"

namespace ulrich {
namespace {

Check make(std::string id, std::string anchor, bool passed, Json witness = Json::object()) {
  return Check{std::move(id), std::move(anchor), passed, std::move(witness)};
}

Matrix span_of(int n, std::initializer_list<int> units) {
  Matrix m = Matrix::Zero(n, static_cast<Index>(units.size()));
  Index k = 0;
  for (int i : units) m(i - 1, k++) = 1;
  return m;
}

int capped(int trials, int cap) { return std::max(1, std::min(trials, cap)); }

// ---------------------------------------------------------------- Severi

std::vector<Check> severi_checks(int a, int trials, std::uint64_t seed) {
  std::vector<Check> out;
  const Index n = severi_dim(a);

  out.push_back(make("dimensions", "dim V = (a+1) * 3", n == (a + 1) * 3,
                     Json{{"a", a}, {"dimV", n}, {"rank_times_degree", (a + 1) * 3}}));

  const Vector g = severi_generic_rep(a);
  const Matrix pg = severi_phi(a, g);
  out.push_back(make("rep-generic", "phi invertible off H",
                     severi_invariant(a, g) == 1 && rank(pg) == n && is_symmetric(pg),
                     Json{{"h", to_string(severi_invariant(a, g))}, {"rank", rank(pg)}}));

  const Vector x = severi_h_rep(a);
  const Index cx = corank(severi_phi(a, x));
  out.push_back(make("rep-h", "corank a+1 at a rank-two point",
                     severi_invariant(a, x).is_zero() && cx == a + 1,
                     Json{{"h", to_string(severi_invariant(a, x))}, {"corank", cx}}));

  int cone_ok = 0, polar_ok = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
    if (severi_invariant(a, severi_rank1_sample(a, rng)).is_zero()) ++cone_ok;
    const Vector v = rng.integer_vector(n);
    const Matrix p = severi_phi(a, v);
    const Rational cubic = (v.transpose() * p * v)(0, 0);
    if (is_symmetric(p) && cubic == severi_invariant(a, v)) ++polar_ok;
  }
  out.push_back(make("rank-one-cone", "h vanishes on the Severi cone", cone_ok == trials,
                     Json{{"trials", trials}, {"vanishing", cone_ok}}));
  out.push_back(make("polarization", "phi(v) symmetric with T(v,v,v) = h(v)", polar_ok == trials,
                     Json{{"trials", trials}, {"consistent", polar_ok}}));

  if (a == 8) {
    int ok = 0;
    const int count = capped(trials, 10);
    for (int t = 0; t < count; ++t) {
      Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)) ^ 0x8888ULL);
      const Vector v = rng.integer_vector(n, -3, 3);
      const Vector u = rng.integer_vector(n, -3, 3);
      const Vector y = rng.integer_vector(n, -3, 3);
      const Rational lhs = (u.transpose() * severi_phi(a, v) * y)(0, 0);
      const JordanElement c = cross(JordanElement::from_coordinates(v),
                                    JordanElement::from_coordinates(u));
      if (lhs == trace_pairing(c, JordanElement::from_coordinates(y)) / 6) ++ok;
    }
    out.push_back(make("cross-consistency", "phi is the polarized cross product", ok == count,
                       Json{{"trials", count}, {"consistent", ok}}));
  }
  return out;
}

// ---------------------------------------------------------------- heptic

std::vector<Check> heptic_checks(int trials, std::uint64_t seed) {
  std::vector<Check> out;
  const ExtElement w0 = heptic_omega0(), w1 = heptic_omega1(), w2 = heptic_omega2();

  const Index r0 = rank(heptic_phi(w0));
  out.push_back(make("rank-omega0", "phi(omega0) injective", r0 == 21, Json{{"rank", r0}}));

  const Matrix p1 = heptic_phi(w1);
  const auto kernel = kernel_basis(p1);
  const ExtElement k3 = ExtElement::basis(7, {1, 4}) - ExtElement::basis(7, {2, 5});
  const Matrix expected = columns({ExtElement::basis(7, {1, 5}).coordinates(),
                                   ExtElement::basis(7, {2, 4}).coordinates(), k3.coordinates()},
                                  21);
  Json kernel_json = Json::array();
  for (const auto& k : kernel) kernel_json.push_back(to_string(ExtElement::from_coordinates(7, 2, k)));
  out.push_back(make("kernel-omega1", "phi(omega1) has corank 3 with kernel <e15, e24, e14-e25>",
                     rank(p1) == 18 && same_span(columns(kernel, 21), expected),
                     Json{{"rank", rank(p1)}, {"kernel", kernel_json}}));

  const Rational h0 = heptic_invariant(w0), h1 = heptic_invariant(w1), h2 = heptic_invariant(w2);
  out.push_back(make("invariant-values", "h(omega0) = 1, h(omega1) = h(omega2) = 0",
                     h0 == 1 && h1.is_zero() && h2.is_zero(),
                     Json{{"omega0", to_string(h0)}, {"omega1", to_string(h1)},
                          {"omega2", to_string(h2)}}));

  // Perfect cubes along random pencils.
  int cubes = 0;
  Json degrees = Json::array();
  const int lines = std::max(10, trials);
  for (int t = 0; t < lines; ++t) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)) ^ 0x7777ULL);
    ExtElement a = ExtElement::from_coordinates(7, 3, rng.integer_vector(35, -3, 3));
    while (det(heptic_phi(a)).is_zero()) {
      a = ExtElement::from_coordinates(7, 3, rng.integer_vector(35, -3, 3));
    }
    const ExtElement b = ExtElement::from_coordinates(7, 3, rng.integer_vector(35, -3, 3));
    const auto q = cube_root(heptic_det_line(a, b));
    if (q && q->degree() == 7) ++cubes;
    degrees.push_back(q ? q->degree() : -1);
  }
  out.push_back(make("perfect-cube-lines", "det phi = h^3 along random pencils", cubes == lines,
                     Json{{"lines", lines}, {"cube_root_degrees", degrees}}));

  // On omega0 + t omega1 the t^7 coefficient of q is h(omega1) = 0, and on
  // (1 - t) omega0 + t omega1 the cube root vanishes at t = 1.
  const Polynomial q01 = heptic_cuberoot_line(w0, w1);
  const Polynomial qseg = heptic_cuberoot_line(w0, w1 - w0);
  out.push_back(make("cuberoot-omega0-omega1", "cube root vanishes where corank is 3",
                     q01.coefficient(7) == h1 && qseg(Rational(1)).is_zero() &&
                         corank(p1) == 3,
                     Json{{"degree", q01.degree()},
                          {"t7_coefficient", to_string(q01.coefficient(7))},
                          {"value_at_omega1", to_string(qseg(Rational(1)))}}));

  bool family = heptic_fiber_family(1, 0, 1, 0) && heptic_fiber_family(2, 3, -1, 5);
  int random_ok = 0;
  const int fiber_trials = capped(trials, 20);
  for (int t = 0; t < fiber_trials; ++t) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)) ^ 0xf1beULL);
    if (heptic_fiber_family(rng.nonzero(-9, 9), rng.uniform(-9, 9), rng.nonzero(-9, 9),
                            rng.uniform(-9, 9))) {
      ++random_ok;
    }
  }
  const bool outside = !in_span(wedge2_u_wedge_v(span_of(7, {1, 2, 3, 4})), w2.coordinates());
  out.push_back(make("fiber-family", "omega2 in Lambda^2 U ^ V for U = <e1, e4, e23, e56>",
                     family && random_ok == fiber_trials && outside,
                     Json{{"stated_points", family}, {"random_points", random_ok},
                          {"excluded_e1234", outside}}));

  const Matrix u = span_of(7, {1, 2, 4, 5});
  Rng rng(seed ^ 0x6b76ULL);
  const Matrix g = rng.invertible(7);
  const bool kv_rep = heptic_kernel_vs_wedge(w1, u);
  const bool kv_translate = heptic_kernel_vs_wedge(lambda_power_action(g, w1), Matrix(g * u));
  out.push_back(make("kernel-vs-wedge", "kernel of phi equals kernel of wedge on Lambda^2 U",
                     kv_rep && kv_translate,
                     Json{{"omega1", kv_rep}, {"translate", kv_translate}}));

  const HepticDimensionCount dc = heptic_dimension_count();
  out.push_back(make("dimension-count", "dim G(4,35) - dim sl7 = 76",
                     dc.grassmannian == 124 && dc.group == 48 && dc.family == 76,
                     Json{{"grassmannian", dc.grassmannian}, {"group", dc.group},
                          {"family", dc.family}}));

  int equi = 0, sym = 0;
  const int eq_trials = capped(trials, 10);
  for (int t = 0; t < eq_trials; ++t) {
    Rng r(trial_seed(seed, static_cast<std::uint64_t>(t)) ^ 0xe9ULL);
    const Matrix gg = r.unipotent(7, true) * r.unipotent(7, false);
    const ExtElement w = ExtElement::from_coordinates(7, 3, r.integer_vector(35));
    const Matrix l = lambda_power_matrix(gg, 2);
    const Matrix lhs = l.transpose() * heptic_phi(lambda_power_action(gg, w)) * l;
    if (lhs == det(gg) * heptic_phi(w)) ++equi;
    if (is_symmetric(heptic_phi(w))) ++sym;
  }
  out.push_back(make("equivariance", "L^T phi(g omega) L = det(g) phi(omega), L = Lambda^2 g",
                     equi == eq_trials && sym == eq_trials,
                     Json{{"trials", eq_trials}, {"equivariant", equi}, {"symmetric", sym}}));
  return out;
}

// ---------------------------------------------------------------- SL6

std::vector<Check> sl6_checks(int trials, std::uint64_t seed) {
  std::vector<Check> out;
  const ExtElement w0 = sl6_omega0(), w1 = sl6_omega1();

  Matrix target = identity(6);
  for (int i = 3; i < 6; ++i) target(i, i) = -1;
  out.push_back(make("theta-omega0", "theta(omega0) = Id_A - Id_B", sl6_theta(w0) == target));

  const Matrix t1 = sl6_theta(w1);
  Matrix n = Matrix::Zero(6, 6);
  n(0, 3) = n(1, 4) = n(2, 5) = 1;
  const Rational scalar = t1(0, 3);
  const Matrix a = span_of(6, {1, 2, 3});
  const bool proportional = !scalar.is_zero() && t1 == scalar * n;
  const bool square_zero = Matrix(t1 * t1).isZero();
  const bool image_kernel = same_span(column_space_basis(t1), a) &&
                            same_span(columns(kernel_basis(t1), 6), a);
  out.push_back(make("theta-omega1", "theta(omega1) square zero, image = kernel = A",
                     proportional && square_zero && rank(t1) == 3 && image_kernel,
                     Json{{"scalar", to_string(scalar)}, {"rank", rank(t1)},
                          {"square_zero", square_zero}, {"image_equals_kernel", image_kernel}}));

  const Matrix w3 = sl6_theta_module(w0, Sl6Module::Wedge3V6);
  Json mult = Json::object();
  bool mult_ok = true;
  const std::pair<int, Index> expected[] = {{3, 1}, {1, 9}, {-1, 9}, {-3, 1}};
  for (auto [lambda, m] : expected) {
    const Index got = eigen_multiplicity(w3, lambda);
    mult[std::to_string(lambda)] = got;
    mult_ok = mult_ok && got == m;
  }
  out.push_back(make("wedge3-eigenvalues-omega0", "eigenvalues 3, 1, -1, -3 on Lambda^3 V6",
                     mult_ok && rank(w3) == 20,
                     Json{{"multiplicities", mult}, {"rank", rank(w3)}}));

  const int nil = nilpotency_index(sl6_theta_module(w1, Sl6Module::Wedge3V6));
  out.push_back(make("wedge3-nilpotency-omega1", "theta(omega1) nilpotent of order four on Lambda^3",
                     nil == 4, Json{{"index", nil}}));

  const Rational h0 = sl6_quartic(w0), h1 = sl6_quartic(w1);
  int homogeneous = 0;
  const int hom_trials = capped(trials, 10);
  for (int t = 0; t < hom_trials; ++t) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)) ^ 0x4444ULL);
    const ExtElement w = ExtElement::from_coordinates(6, 3, rng.integer_vector(20));
    const Rational lambda = rng.nonzero(-5, 5);
    if (sl6_quartic(lambda * w) == pow(lambda, 4) * sl6_quartic(w) &&
        sl6_theta(lambda * w) == lambda * lambda * sl6_theta(w)) {
      ++homogeneous;
    }
  }
  out.push_back(make("invariant-values", "h(omega0) = 1, h(omega1) = 0, h quartic",
                     h0 == 1 && h1.is_zero() && homogeneous == hom_trials,
                     Json{{"omega0", to_string(h0)}, {"omega1", to_string(h1)},
                          {"homogeneity_trials", hom_trials}}));

  int fiber_ok = 0;
  const int fiber_trials = capped(trials, 10);
  for (int t = 0; t < fiber_trials; ++t) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)) ^ 0x5555ULL);
    const Matrix g = rng.unimodular(6);
    if (same_span(sl6_pi_fiber(lambda_power_action(g, w1)), Matrix(g * a))) ++fiber_ok;
  }
  const bool rep_fiber = same_span(sl6_pi_fiber(w1), a);
  out.push_back(make("pi-fiber", "open orbit fibered over G(3, V6) via A(omega)",
                     rep_fiber && fiber_ok == fiber_trials,
                     Json{{"omega1", rep_fiber}, {"translates", fiber_ok}}));

  int equi = 0;
  const int eq_trials = capped(trials, 10);
  for (int t = 0; t < eq_trials; ++t) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)) ^ 0x6666ULL);
    const Matrix g = rng.unipotent(6, true) * rng.unipotent(6, false);
    const ExtElement w = ExtElement::from_coordinates(6, 3, rng.integer_vector(20));
    if (sl6_theta(lambda_power_action(g, w)) == Matrix(g * sl6_theta(w) * inverse(g))) ++equi;
  }
  out.push_back(make("equivariance", "theta(g omega) = g theta(omega) g^-1", equi == eq_trials,
                     Json{{"trials", eq_trials}, {"equivariant", equi}}));
  return out;
}

// ---------------------------------------------------------------- Spin12

So12Element random_so12(Rng& rng) {
  So12Element x;
  x.plus = ExtElement::from_coordinates(6, 2, rng.integer_vector(15));
  x.zero = rng.integer_matrix(6, 6);
  x.minus = ExtDualElement::from_coordinates(6, 2, rng.integer_vector(15));
  return x;
}

std::vector<Check> spin_checks(int trials, std::uint64_t seed) {
  std::vector<Check> out;
  const SpinCalibration& k = spin_calibration();
  out.push_back(make("calibration", "theta unique up to scale; pure spinors [1, w, w^2, w^3]", true,
                     Json{{"plus", to_string(k.plus)}, {"zero", to_string(k.zero)},
                          {"minus", to_string(k.minus)}, {"alpha2", k.alpha2},
                          {"alpha3", k.alpha3}}));

  const So12Element t0 = spin_theta(spin_w0());
  Matrix diag = identity(12);
  for (int i = 6; i < 12; ++i) diag(i, i) = -1;
  So12Element id;
  id.zero = identity(6);
  out.push_back(make("theta-w0", "theta(w0) = Id_E, theta_V12(w0) = Id_E - Id_E*",
                     t0 == id && spin_so12_matrix(t0) == diag));

  const So12Element t1 = spin_theta(spin_w1());
  const ExtDualElement sigma = ExtDualElement::basis(6, {1, 2}) + ExtDualElement::basis(6, {3, 4}) +
                               ExtDualElement::basis(6, {5, 6});
  const Rational scalar = t1.minus.coefficient(mask_of({1, 2}));
  const bool shape = t1.plus.is_zero() && t1.zero.isZero() && !scalar.is_zero() &&
                     t1.minus == scalar * sigma;
  const Matrix m1 = spin_so12_matrix(t1);
  const Matrix image = column_space_basis(m1);
  // Image inside the E* summand; the cokernel is then V12 / E* = E.
  const bool in_dual = image.topRows(6).isZero();
  out.push_back(make("theta-w1", "theta(w1) = (0, 0, e*12 + e*34 + e*56) up to a scalar",
                     shape && rank(m1) == 6 && Matrix(m1 * m1).isZero() && is_isotropic(image),
                     Json{{"scalar", to_string(scalar)}, {"rank", rank(m1)},
                          {"image_in_dual_summand", in_dual}}));

  const int pure_trials = std::max(50, trials);
  int pure_ok = 0;
  for (int t = 0; t < pure_trials; ++t) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)) ^ 0x9999ULL);
    const Spinor p = spin_param(ExtElement::from_coordinates(6, 2, rng.integer_vector(15)));
    if (spin_theta(p) == So12Element{} && spin_quartic(p).is_zero()) ++pure_ok;
  }
  out.push_back(make("pure-spinor-vanishing", "theta vanishes on the spinor variety",
                     pure_ok == pure_trials, Json{{"trials", pure_trials}, {"vanishing", pure_ok}}));

  const Rational h0 = spin_quartic(spin_w0()), h1 = spin_quartic(spin_w1());
  out.push_back(make("invariant-values", "h(w0) = 1, h(w1) = 0", h0 == 1 && h1.is_zero(),
                     Json{{"w0", to_string(h0)}, {"w1", to_string(h1)}}));

  int skew = 0;
  const Matrix j = split_form();
  const int skew_trials = capped(trials, 50);
  for (int t = 0; t < skew_trials; ++t) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)) ^ 0xaaaaULL);
    const Matrix m = spin_so12_matrix(random_so12(rng));
    const Matrix mt = spin_theta_v12(Spinor::from_coordinates(rng.integer_vector(32)));
    if (Matrix(m.transpose() * j + j * m).isZero() && Matrix(mt.transpose() * j + j * mt).isZero()) {
      ++skew;
    }
  }
  out.push_back(make("split-skew", "theta lands in so(V12)", skew == skew_trials,
                     Json{{"trials", skew_trials}, {"skew", skew}}));

  int equi = 0;
  const int eq_trials = capped(trials, 10);
  for (int t = 0; t < eq_trials; ++t) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)) ^ 0xbbbbULL);
    const Spinor w = Spinor::from_coordinates(rng.integer_vector(32, -3, 3));
    const Matrix tw = spin_theta_v12(w);
    const auto conj = [&](const Matrix& g) { return Matrix(g * tw * inverse(g)); };

    So12Element xb, xg;
    xb.plus = ExtElement::from_coordinates(6, 2, rng.integer_vector(15, -2, 2));
    xg.minus = ExtDualElement::from_coordinates(6, 2, rng.integer_vector(15, -2, 2));
    const Matrix gb = identity(12) + spin_so12_matrix(xb);
    const Matrix gg = identity(12) + spin_so12_matrix(xg);
    const Matrix u = rng.unipotent(6, true);
    Matrix gu = Matrix::Zero(12, 12);
    gu.topLeftCorner(6, 6) = u;
    gu.bottomRightCorner(6, 6) = inverse(u).transpose();

    if (spin_theta_v12(spin_exp_plus(xb.plus, w)) == conj(gb) &&
        spin_theta_v12(spin_exp_minus(xg.minus, w)) == conj(gg) &&
        spin_theta_v12(spin_act_gl(u, w)) == conj(gu)) {
      ++equi;
    }
  }
  out.push_back(make("equivariance", "theta(g w) = g theta(w) g^-1", equi == eq_trials,
                     Json{{"trials", eq_trials}, {"equivariant", equi}}));

  int iso = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)) ^ 0xccccULL);
    const Matrix m = spin_theta_v12(spin_sample_H(rng));
    if (corank(m) == 6 && is_isotropic(column_space_basis(m))) ++iso;
  }
  out.push_back(make("h-image-isotropic", "rank six with maximal isotropic image on H",
                     iso == trials, Json{{"trials", trials}, {"isotropic", iso}}));
  return out;
}

}  // namespace

std::vector<Check> severi_suite(int a, int trials, std::uint64_t seed) {
  return severi_checks(a, trials, seed);
}

std::vector<Check> heptic_suite(int trials, std::uint64_t seed) { return heptic_checks(trials, seed); }

std::vector<Check> sl6_suite(int trials, std::uint64_t seed) { return sl6_checks(trials, seed); }

std::vector<Check> spin_suite(int trials, std::uint64_t seed) { return spin_checks(trials, seed); }

}  // namespace ulrich
