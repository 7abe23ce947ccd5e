#pragma once

// Case registry and the generic verification engine: determinant-power
// trials, corank surveys with pushforward certificates, and reports.
//
// A case is a linear (k = 1) or quadratic (k = 2) map v -> phi(v) from V to
// square dimA x dimA matrices with det phi = c h^r, h of degree degH, and
// k dimA = r degH.

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ulrich/exact.hpp"
#include "ulrich/random.hpp"

namespace ulrich {

using Json = nlohmann::ordered_json;

struct Check {
  std::string id;
  std::string anchor;  // short statement of the claim being checked
  bool passed = false;
  Json witness = Json::object();
};

struct Report {
  std::string case_name;
  std::uint64_t seed = 0;
  std::vector<Check> checks;
  long elapsed_ms = 0;

  bool passed() const;
};

/// Additional module on which the same group acts; only surveyed at the
/// hypersurface representative.
struct ModuleSpec {
  std::string name;
  Index dim = 0;
  std::function<Matrix(const Vector&)> matrix;
  Index expected_corank = 0;
};

struct CaseDescriptor {
  std::string name;
  Index dimV = 0;
  Index dimA = 0;
  int k = 1;
  int degH = 0;
  int r = 0;
  int max_section_dim = 0;  // largest projective dimension d of a section

  std::function<Matrix(const Vector&)> phi;
  std::function<Rational(const Vector&)> h;
  Vector generic_rep;
  Vector h_rep;
  std::function<Vector(Rng&)> sample_H;
  std::vector<ModuleSpec> modules;
  std::function<std::vector<Check>(int trials, std::uint64_t seed)> representative_suite;
};

/// All cases in registry order. The invariant k dimA = r degH is checked
/// once, on first use (InvariantViolation).
const std::vector<CaseDescriptor>& register_cases();

/// Throws UnknownCase.
const CaseDescriptor& find_case(std::string_view name);

Check registration_check(const CaseDescriptor& c);

/// Random integer point of V (entries in [-9, 9]) with h != 0.
Vector random_generic_point(const CaseDescriptor& c, Rng& rng);

/// det phi(v) = c h(v)^r at `trials` random integer points, with c taken at
/// the generic representative.
Check det_identity_trials(const CaseDescriptor& c, int trials, std::uint64_t seed);

/// corank phi = 0 at random points off H, corank phi = r at sampled points
/// of H, and the pushforward certificate corank * degH = k * dimA.
std::vector<Check> corank_survey(const CaseDescriptor& c, int trials, std::uint64_t seed);

/// Corank of each additional module at the hypersurface representative and
/// whether the certificate applies.
std::vector<Check> module_survey(const CaseDescriptor& c);

/// Registration, representatives, determinant trials and corank surveys.
Report verify_case(const CaseDescriptor& c, int trials, std::uint64_t seed);

}  // namespace ulrich
