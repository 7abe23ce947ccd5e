// Acceptance run: one line per criterion with its outcome, elapsed time and
// budget. Exit status is nonzero if any criterion fails.

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "oracles.hpp"
#include "ulrich/engine.hpp"
#include "ulrich/heptic.hpp"
#include "ulrich/octjordan.hpp"
#include "ulrich/section.hpp"
#include "ulrich/severi.hpp"
#include "ulrich/sl6.hpp"
#include "ulrich/spin12.hpp"

using namespace ulrich;

namespace {

struct Outcome {
  bool passed = true;
  std::ostringstream notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      notes << " [failed: " << what << "]";
    }
  }
};

struct Criterion {
  std::string id;
  std::string title;
  double budget_s;
  std::function<void(Outcome&)> body;
};

Matrix unit_columns(int n, std::initializer_list<int> units) {
  Matrix m = Matrix::Zero(n, static_cast<Index>(units.size()));
  Index k = 0;
  for (int i : units) m(i - 1, k++) = 1;
  return m;
}

void heptic_representatives(Outcome& o) {
  o.require(rank(heptic_phi(heptic_omega0())) == 21, "rank phi(omega0) = 21");
  const Matrix p1 = heptic_phi(heptic_omega1());
  o.require(rank(p1) == 18, "rank phi(omega1) = 18");
  const Matrix expected = columns({ExtElement::basis(7, {1, 5}).coordinates(),
                                   ExtElement::basis(7, {2, 4}).coordinates(),
                                   (ExtElement::basis(7, {1, 4}) - ExtElement::basis(7, {2, 5}))
                                       .coordinates()},
                                  21);
  o.require(same_span(columns(kernel_basis(p1), 21), expected), "kernel span <e15, e24, e14-e25>");
  o.require(heptic_invariant(heptic_omega1()) == 0, "h(omega1) = 0");
  o.require(heptic_invariant(heptic_omega2()) == 0, "h(omega2) = 0");
}

void heptic_cubes(Outcome& o) {
  constexpr int kPencils = 12;
  int cubes = 0;
  for (int t = 0; t < kPencils; ++t) {
    Rng rng(trial_seed(2024, t));
    ExtElement a = ExtElement::from_coordinates(7, 3, rng.integer_vector(35, -3, 3));
    while (det(heptic_phi(a)) == 0) {
      a = ExtElement::from_coordinates(7, 3, rng.integer_vector(35, -3, 3));
    }
    const ExtElement b = ExtElement::from_coordinates(7, 3, rng.integer_vector(35, -3, 3));
    const Polynomial d = heptic_det_line(a, b);
    const auto q = cube_root(d);
    if (d.degree() <= 21 && q && q->degree() == 7) ++cubes;
  }
  o.notes << " pencils=" << kPencils << " cubes=" << cubes;
  o.require(cubes == kPencils, "every pencil gives a degree 7 cube root");
}

void severi_series(Outcome& o) {
  for (int a : {1, 2, 4, 8}) {
    const CaseDescriptor& c = find_case("severi-a" + std::to_string(a));
    const Check det_check = det_identity_trials(c, 20, 1);
    o.require(det_check.passed, c.name + " det identity at 20 points");
    int secant = 0;
    for (int t = 0; t < 20; ++t) {
      Rng rng(trial_seed(77, t));
      const Vector x = c.sample_H(rng);
      if (c.h(x) == 0 && corank(c.phi(x)) == a + 1) ++secant;
    }
    o.require(secant == 20, c.name + " corank a+1 at 20 secant samples");
    o.notes << " " << c.name << ":c=" << det_check.witness["c"].get<std::string>();
  }
}

void sl6_suite(Outcome& o) {
  Matrix d = identity(6);
  d(3, 3) = d(4, 4) = d(5, 5) = -1;
  o.require(sl6_theta(sl6_omega0()) == d, "theta(omega0) = diag(1,1,1,-1,-1,-1)");
  const Matrix t1 = sl6_theta(sl6_omega1());
  const Matrix a = unit_columns(6, {1, 2, 3});
  o.require(Matrix(t1 * t1).isZero() && rank(t1) == 3, "theta(omega1) square zero of rank 3");
  o.require(same_span(column_space_basis(t1), a) && same_span(columns(kernel_basis(t1), 6), a),
            "image = kernel = <e1, e2, e3>");
  const Matrix w3 = sl6_theta_module(sl6_omega0(), Sl6Module::Wedge3V6);
  o.require(eigen_multiplicity(w3, 3) == 1 && eigen_multiplicity(w3, 1) == 9 &&
                eigen_multiplicity(w3, -1) == 9 && eigen_multiplicity(w3, -3) == 1,
            "multiplicities (1,9,9,1)");
  const Index cr = corank(sl6_theta_module(sl6_omega1(), Sl6Module::Wedge3V6));
  o.notes << " wedge3_corank=" << cr;
  o.require(cr == 11, "corank on Lambda^3 V6 at omega1 = 11 (observed " + std::to_string(cr) + ")");
  const CaseDescriptor& c = find_case("freud-sl6");
  o.require(det_identity_trials(c, 30, 3).passed, "det theta = c h^3 at 30 points");
}

void spin_suite(Outcome& o) {
  const SpinCalibration& k = spin_calibration();
  o.notes << " kappa=(" << to_string(k.plus) << "," << to_string(k.zero) << ","
          << to_string(k.minus) << ")";
  int pure = 0;
  for (int t = 0; t < 50; ++t) {
    Rng rng(trial_seed(4, t));
    const Spinor p = spin_param(ExtElement::from_coordinates(6, 2, rng.integer_vector(15)));
    if (spin_theta(p) == So12Element{}) ++pure;
  }
  o.require(pure == 50, "theta vanishes on 50 pure spinors");
  const So12Element t1 = spin_theta(spin_w1());
  const ExtDualElement sigma = ExtDualElement::basis(6, {1, 2}) + ExtDualElement::basis(6, {3, 4}) +
                               ExtDualElement::basis(6, {5, 6});
  const Rational s = t1.minus.coefficient(mask_of({1, 2}));
  o.require(t1.plus.is_zero() && t1.zero.isZero() && s != 0 && t1.minus == s * sigma,
            "theta(w1) proportional to (0, 0, e*12 + e*34 + e*56)");
  Matrix d = identity(12);
  for (int i = 6; i < 12; ++i) d(i, i) = -1;
  o.require(spin_theta_v12(spin_w0()) == d, "theta_V12(w0) = diag(Id, -Id)");
  int isotropic = 0;
  for (int t = 0; t < 20; ++t) {
    Rng rng(trial_seed(5, t));
    const Matrix m = spin_theta_v12(spin_sample_H(rng));
    if (corank(m) == 6 && is_isotropic(column_space_basis(m))) ++isotropic;
  }
  o.require(isotropic == 20, "corank 6 with isotropic image at 20 samples");
  o.require(det_identity_trials(find_case("freud-spin12"), 30, 6).passed,
            "det theta_V12 = c h^6 at 30 points");
}

void hilbert_functions(Outcome& o) {
  const auto sl6 = hilbert_function(find_case("freud-sl6"), 3, 4, 0);
  bool ok = sl6.size() == 5;
  for (int m = 0; ok && m <= 4; ++m) ok = sl6[m] == 6L * (m + 1) * (m + 1);
  o.require(ok, "freud-sl6 HF = 6(m+1)^2");
  o.require(hilbert_function(find_case("heptic7"), 3, 2, 0) == std::vector<long>{21, 63, 126},
            "heptic7 HF = 21, 63, 126");
  o.require(unsplit_witness(0).passed, "freud-spin12 HF(0) = 12 not in {36,46,56,66}");
}

void registration(Outcome& o) {
  const auto& cases = register_cases();
  o.require(cases.size() == 7, "seven cases registered");
  for (const auto& c : cases) o.require(registration_check(c).passed, c.name + " k dimA = r degH");
  const auto dc = heptic_dimension_count();
  o.require(dc.grassmannian - dc.group == 76 && dc.family == 76, "124 - 48 = 76");
}

void property_suites(Outcome& o) {
  int failures = 0;
  for (int t = 0; t < 100; ++t) {
    Rng rng(trial_seed(800, t));
    const Octonion u = Octonion::random(rng), v = Octonion::random(rng);
    if ((u * u) * v != u * (u * v) || (v * u) * u != v * (u * u)) ++failures;
    if (norm(u * v) != norm(u) * norm(v)) ++failures;
  }
  o.require(failures == 0, "octonion alternativity and composition");
  failures = 0;
  for (int t = 0; t < 50; ++t) {
    Rng rng(trial_seed(900, t));
    const JordanElement x =
        JordanElement::from_coordinates(rng.integer_vector(JordanElement::kDim, -3, 3));
    const Rational n = cubic_norm(x);
    if (cubic_norm(sharp(x)) != n * n || sharp(sharp(x)) != n * x) ++failures;
  }
  o.require(failures == 0, "Jordan adjoint identities");
  failures = 0;
  for (int t = 0; t < 100; ++t) {
    Rng rng(trial_seed(1000, t));
    const int n = 5, p = t % 4, q = 1 + t % 2;
    const ExtElement a = ExtElement::from_coordinates(n, p, rng.integer_vector(binomial(n, p)));
    const ExtElement b = ExtElement::from_coordinates(n, q, rng.integer_vector(binomial(n, q)));
    if (wedge(a, b) != Rational((p * q) % 2 == 0 ? 1 : -1) * wedge(b, a)) ++failures;
    const Matrix g = rng.integer_matrix(n, n, -2, 2), h = rng.integer_matrix(n, n, -2, 2);
    if (lambda_power_matrix(Matrix(g * h), 2) !=
        Matrix(lambda_power_matrix(g, 2) * lambda_power_matrix(h, 2))) {
      ++failures;
    }
  }
  o.require(failures == 0, "exterior graded commutativity and functoriality");
  failures = 0;
  for (int t = 0; t < 100; ++t) {
    Rng rng(trial_seed(1100, t));
    const Index n = 1 + t % 6;
    Matrix m = rng.integer_matrix(n, n);
    if (t % 3 == 0) m.row(0) = m.row(n - 1);
    if (det(m) != oracle::laplace_det(m)) ++failures;
    if (rank(m) + static_cast<Index>(kernel_basis(m).size()) != n) ++failures;
  }
  o.require(failures == 0, "Bareiss vs cofactor determinants and rank-nullity");
}

std::string capture(const std::string& args) {
  const std::string cmd = std::string(ULRICH_CLI_PATH) + " " + args + " 2>/dev/null";
  std::string out;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return out;
  std::array<char, 4096> buf{};
  while (const std::size_t n = fread(buf.data(), 1, buf.size(), p)) out.append(buf.data(), n);
  pclose(p);
  return out;
}

void determinism(Outcome& o) {
  for (const std::string args : {"verify --case freud-sl6 --trials 1 --seed 0 --json",
                                 "verify --case heptic7 --trials 3 --seed 7 --json",
                                 "verify --case freud-spin12 --trials 2 --seed 1 --json --threads 2",
                                 "hilbert --case freud-sl6 --dim 3 --max-degree 4 --json",
                                 "sample --case freud-spin12 --on-hypersurface --seed 3 --json",
                                 "section --case heptic7 --dim 3 --seed 11 --json"}) {
    const std::string a = capture(args), b = capture(args);
    o.require(!a.empty() && a == b, args);
  }
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"AC1", "heptic representatives", 5, heptic_representatives},
      {"AC2", "perfect-cube law on pencils", 60, heptic_cubes},
      {"AC3", "Severi series determinant and corank", 120, severi_series},
      {"AC4", "SL6 suite", 30, sl6_suite},
      {"AC5", "Spin12 suite", 60, spin_suite},
      {"AC6", "Hilbert functions", 60, hilbert_functions},
      {"AC7", "registration arithmetic", 5, registration},
      {"AC8", "property suites", 60, property_suites},
      {"AC9", "CLI determinism", 120, determinism},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(o);
    } catch (const std::exception& e) {
      o.passed = false;
      o.notes << " [exception: " << e.what() << "]";
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_s) {
      o.passed = false;
      o.notes << " [over budget]";
    }
    if (!o.passed) ++failed;
    std::printf("%s %s %s (%.2f s, budget %.0f s)%s\n", c.id.c_str(), o.passed ? "PASS" : "FAIL",
                c.title.c_str(), secs, c.budget_s, o.notes.str().c_str());
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed,
              criteria.size());
  return failed == 0 ? 0 : 1;
}
