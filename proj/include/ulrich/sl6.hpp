#pragma once

// Three-forms in six variables and the equivariant quadratic map
// theta: Lambda^3 V6 -> sl6, with theta(e123 + e456) = diag(1,1,1,-1,-1,-1).

#include <cstdint>
#include <string>
#include <string_view>

#include "ulrich/exterior.hpp"
#include "ulrich/random.hpp"

namespace ulrich {

enum class Sl6Module { V6, V6dual, Wedge3V6 };

Sl6Module parse_sl6_module(std::string_view name);
std::string module_name(Sl6Module m);
Index module_dim(Sl6Module m);

/// e123 + e456.
ExtElement sl6_omega0();
/// e126 + e234 + e315.
ExtElement sl6_omega1();

/// Traceless 6x6 matrix; entry (i, j) is proportional to the coefficient of
/// e1...6 in e_j ^ omega ^ contract(e*_i, omega).
Matrix sl6_theta(const ExtElement& omega);

/// theta(omega) acting on V6 (as is), V6* (minus transpose) or Lambda^3 V6
/// (derivation action, lexicographic basis).
Matrix sl6_theta_module(const ExtElement& omega, Sl6Module m);

/// tr(theta^2) / 6, so that h(omega0) = 1.
Rational sl6_quartic(const ExtElement& omega);

/// Lambda^3(g) omega1 with det g = 1; h = 0 and corank 3 on V6 are asserted.
ExtElement sl6_sample_H(Rng& rng);
ExtElement sl6_sample_H(std::uint64_t seed);

/// A(omega) = image of theta(omega) on V6 (a 6x3 basis matrix). Requires
/// corank 3; asserts image = kernel and omega in Lambda^2 A ^ V6.
Matrix sl6_pi_fiber(const ExtElement& omega);

/// Multiplicity of the eigenvalue lambda: dim - rank(M - lambda Id).
Index eigen_multiplicity(const Matrix& m, const Rational& lambda);

/// Smallest k >= 1 with M^k = 0, or 0 if M is not nilpotent.
int nilpotency_index(const Matrix& m);

}  // namespace ulrich
