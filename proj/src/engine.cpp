#include "ulrich/engine.hpp"

#include <algorithm>
#include <chrono>
#include <mutex>
#include <set>

#include "suites.hpp"
#include "ulrich/heptic.hpp"
#include "ulrich/parallel.hpp"
#include "ulrich/severi.hpp"
#include "ulrich/sl6.hpp"
#include "ulrich/spin12.hpp"

namespace ulrich {
namespace {

std::atomic<unsigned> g_workers{0};

ExtElement three_form(int n, const Vector& v) { return ExtElement::from_coordinates(n, 3, v); }

CaseDescriptor severi_case(int a) {
  CaseDescriptor c;
  c.name = "severi-a" + std::to_string(a);
  c.dimV = severi_dim(a);
  c.dimA = c.dimV;
  c.k = 1;
  c.degH = 3;
  c.r = a + 1;
  c.max_section_dim = a + 1;
  c.phi = [a](const Vector& v) { return severi_phi(a, v); };
  c.h = [a](const Vector& v) { return severi_invariant(a, v); };
  c.generic_rep = severi_generic_rep(a);
  c.h_rep = severi_h_rep(a);
  c.sample_H = [a](Rng& rng) { return severi_sample_H(a, rng); };
  c.representative_suite = [a](int trials, std::uint64_t seed) {
    return severi_suite(a, trials, seed);
  };
  return c;
}

CaseDescriptor heptic_case() {
  CaseDescriptor c;
  c.name = "heptic7";
  c.dimV = 35;
  c.dimA = 21;
  c.k = 1;
  c.degH = 7;
  c.r = 3;
  c.max_section_dim = 3;
  c.phi = [](const Vector& v) { return heptic_phi(three_form(7, v)); };
  c.h = [](const Vector& v) { return heptic_invariant(three_form(7, v)); };
  c.generic_rep = heptic_omega0().coordinates();
  c.h_rep = heptic_omega1().coordinates();
  c.sample_H = [](Rng& rng) { return heptic_sample_H(rng).coordinates(); };
  c.representative_suite = heptic_suite;
  return c;
}

CaseDescriptor sl6_case() {
  CaseDescriptor c;
  c.name = "freud-sl6";
  c.dimV = 20;
  c.dimA = 6;
  c.k = 2;
  c.degH = 4;
  c.r = 3;
  c.max_section_dim = 3;
  c.phi = [](const Vector& v) { return sl6_theta(three_form(6, v)); };
  c.h = [](const Vector& v) { return sl6_quartic(three_form(6, v)); };
  c.generic_rep = sl6_omega0().coordinates();
  c.h_rep = sl6_omega1().coordinates();
  c.sample_H = [](Rng& rng) { return sl6_sample_H(rng).coordinates(); };
  for (auto [m, corank] : {std::pair{Sl6Module::V6dual, Index{3}},
                           std::pair{Sl6Module::Wedge3V6, Index{11}}}) {
    c.modules.push_back({module_name(m), module_dim(m),
                         [m](const Vector& v) { return sl6_theta_module(three_form(6, v), m); },
                         corank});
  }
  c.representative_suite = sl6_suite;
  return c;
}

CaseDescriptor spin_case() {
  CaseDescriptor c;
  c.name = "freud-spin12";
  c.dimV = Spinor::kDim;
  c.dimA = 12;
  c.k = 2;
  c.degH = 4;
  c.r = 6;
  c.max_section_dim = 5;
  c.phi = [](const Vector& v) { return spin_theta_v12(Spinor::from_coordinates(v)); };
  c.h = [](const Vector& v) { return spin_quartic(Spinor::from_coordinates(v)); };
  c.generic_rep = spin_w0().coordinates();
  c.h_rep = spin_w1().coordinates();
  c.sample_H = [](Rng& rng) { return spin_sample_H(rng).coordinates(); };
  c.representative_suite = spin_suite;
  return c;
}

std::vector<CaseDescriptor> build_registry() {
  std::vector<CaseDescriptor> cases;
  for (int a : {1, 2, 4, 8}) cases.push_back(severi_case(a));
  cases.push_back(heptic_case());
  cases.push_back(sl6_case());
  cases.push_back(spin_case());
  for (const auto& c : cases) {
    if (c.k * c.dimA != c.r * c.degH) {
      throw InvariantViolation("register_cases: k*dimA != r*degH for " + c.name);
    }
  }
  return cases;
}

Json coordinates_json(const Vector& v) {
  Json out = Json::array();
  for (Index i = 0; i < v.size(); ++i) out.push_back(to_string(v(i)));
  return out;
}

}  // namespace

unsigned worker_count() {
  const unsigned n = g_workers.load();
  if (n != 0) return n;
  return std::max(1U, std::thread::hardware_concurrency());
}

void set_worker_count(unsigned n) { g_workers.store(n); }

bool Report::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const std::vector<CaseDescriptor>& register_cases() {
  static const std::vector<CaseDescriptor> cases = build_registry();
  return cases;
}

const CaseDescriptor& find_case(std::string_view name) {
  for (const auto& c : register_cases()) {
    if (c.name == name) return c;
  }
  throw UnknownCase("unknown case '" + std::string(name) + "'");
}

Check registration_check(const CaseDescriptor& c) {
  Check ch{"registration", "k dimA = r degH", c.k * c.dimA == c.r * c.degH, Json::object()};
  ch.witness["k"] = c.k;
  ch.witness["dimA"] = c.dimA;
  ch.witness["r"] = c.r;
  ch.witness["degH"] = c.degH;
  ch.witness["lhs"] = c.k * c.dimA;
  ch.witness["rhs"] = c.r * c.degH;
  return ch;
}

Vector random_generic_point(const CaseDescriptor& c, Rng& rng) {
  constexpr int kMaxDraws = 64;
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    Vector v = rng.integer_vector(c.dimV);
    if (!c.h(v).is_zero()) return v;
  }
  throw SamplerExhausted("random_generic_point: h vanished at every draw for " + c.name);
}

Check det_identity_trials(const CaseDescriptor& c, int trials, std::uint64_t seed) {
  if (trials < 1) throw PreconditionFailed("det_identity_trials: trials must be >= 1");
  const Rational h0 = c.h(c.generic_rep);
  if (h0.is_zero()) throw PreconditionFailed("det_identity_trials: h vanishes at the representative");
  const Rational constant = det(c.phi(c.generic_rep)) / pow(h0, static_cast<unsigned>(c.r));

  struct Outcome {
    bool ok = false;
    Vector point;
  };
  const auto outcomes = parallel_map<Outcome>(static_cast<std::size_t>(trials), [&](std::size_t t) {
    Rng rng(trial_seed(seed, t));
    const Vector v = rng.integer_vector(c.dimV);
    const bool ok = det(c.phi(v)) == constant * pow(c.h(v), static_cast<unsigned>(c.r));
    return Outcome{ok, v};
  });

  const Vector zero = Vector::Zero(c.dimV);
  const bool zero_ok = det(c.phi(zero)).is_zero() && c.h(zero).is_zero();

  Check ch{"det-identity", "det phi = c h^r", zero_ok, Json::object()};
  ch.witness["c"] = to_string(constant);
  ch.witness["r"] = c.r;
  ch.witness["trials"] = trials;
  int failures = 0;
  for (const auto& o : outcomes) {
    if (o.ok) continue;
    if (failures++ == 0) ch.witness["first_failure"] = coordinates_json(o.point);
  }
  ch.witness["failures"] = failures;
  ch.witness["zero_point_consistent"] = zero_ok;
  ch.passed = zero_ok && failures == 0;
  return ch;
}

std::vector<Check> corank_survey(const CaseDescriptor& c, int trials, std::uint64_t seed) {
  if (trials < 1) throw PreconditionFailed("corank_survey: trials must be >= 1");
  struct Outcome {
    Index generic = 0;
    Index on_h = 0;
  };
  const auto outcomes = parallel_map<Outcome>(static_cast<std::size_t>(trials), [&](std::size_t t) {
    Rng rng(trial_seed(seed, t));
    const Vector v = random_generic_point(c, rng);
    const Vector x = c.sample_H(rng);
    return Outcome{corank(c.phi(v)), corank(c.phi(x))};
  });

  std::set<Index> generic, on_h;
  for (const auto& o : outcomes) {
    generic.insert(o.generic);
    on_h.insert(o.on_h);
  }
  const auto as_json = [](const std::set<Index>& s) {
    Json out = Json::array();
    for (Index v : s) out.push_back(v);
    return out;
  };

  std::vector<Check> checks;
  Check off{"generic-corank", "corank phi = 0 off H", generic == std::set<Index>{0},
            Json::object()};
  off.witness["trials"] = trials;
  off.witness["observed_coranks"] = as_json(generic);
  checks.push_back(off);

  Check on{"h-corank", "corank phi = r on the open orbit of H",
           on_h == std::set<Index>{static_cast<Index>(c.r)}, Json::object()};
  on.witness["trials"] = trials;
  on.witness["expected"] = c.r;
  on.witness["observed_coranks"] = as_json(on_h);
  checks.push_back(on);

  // With a uniform corank r, the weighted rank sum reduces to r and the
  // general count coincides with k dimA = r degH.
  const bool uniform = on.passed;
  Check cert{"pushforward-certificate", "corank * degH = k * dimA",
             uniform && c.r * c.degH == c.k * c.dimA, Json::object()};
  cert.witness["corank"] = uniform ? Json(c.r) : Json(nullptr);
  cert.witness["corank_times_degH"] = c.r * c.degH;
  cert.witness["k_times_dimA"] = c.k * c.dimA;
  checks.push_back(cert);
  return checks;
}

std::vector<Check> module_survey(const CaseDescriptor& c) {
  std::vector<Check> checks;
  for (const auto& m : c.modules) {
    const Matrix at_rep = m.matrix(c.h_rep);
    const Index observed = corank(at_rep);
    Check cr{"module-" + m.name + "-corank", "corank of the " + m.name + " presentation on H",
             observed == m.expected_corank, Json::object()};
    cr.witness["expected"] = m.expected_corank;
    cr.witness["observed"] = observed;
    cr.witness["rank"] = at_rep.rows() - observed;
    checks.push_back(cr);

    const bool expected_cert = m.expected_corank * c.degH == c.k * m.dim;
    const bool observed_cert = observed * c.degH == c.k * m.dim;
    Check cert{"module-" + m.name + "-certificate",
               expected_cert ? "pushforward of a vector bundle" : "not a pushforward of a vector bundle",
               expected_cert == observed_cert, Json::object()};
    cert.witness["corank_times_degH"] = observed * c.degH;
    cert.witness["k_times_dim"] = c.k * m.dim;
    cert.witness["certificate"] = observed_cert;
    checks.push_back(cert);
  }
  return checks;
}

Report verify_case(const CaseDescriptor& c, int trials, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  Report r;
  r.case_name = c.name;
  r.seed = seed;
  r.checks.push_back(registration_check(c));
  for (auto& ch : c.representative_suite(trials, seed)) r.checks.push_back(std::move(ch));
  r.checks.push_back(det_identity_trials(c, trials, seed));
  for (auto& ch : corank_survey(c, trials, seed)) r.checks.push_back(std::move(ch));
  for (auto& ch : module_survey(c)) r.checks.push_back(std::move(ch));
  r.elapsed_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                       std::chrono::steady_clock::now() - start)
                                       .count());
  return r;
}

}  // namespace ulrich
