#pragma once

// Three-forms in seven variables and the symmetric pencil
// phi(omega): Lambda^2 V7 -> Lambda^5 V7 = (Lambda^2 V7)*, together with the
// degree-seven invariant h, defined through det phi = c h^3.

#include <cstdint>

#include "ulrich/exterior.hpp"
#include "ulrich/polynomial.hpp"
#include "ulrich/random.hpp"

namespace ulrich {

/// e123 + e456 + e147 + e257 + e367 (open orbit, h = 1).
ExtElement heptic_omega0();
/// e123 + e456 + e147 + e257 (generic point of the hypersurface).
ExtElement heptic_omega1();
/// e123 + e456 + e147 (singular locus of the hypersurface).
ExtElement heptic_omega2();

/// 21x21 matrix with entry (I, J) = coefficient of e1...7 in omega ^ e_I ^ e_J,
/// over the lexicographic basis of Lambda^2.
Matrix heptic_phi(const ExtElement& omega);

/// Lambda^3(g) omega1 for a random invertible g, with corank 3 asserted.
ExtElement heptic_sample_H(Rng& rng);
ExtElement heptic_sample_H(std::uint64_t seed);

/// p(t) = det phi(a + t b), interpolated exactly at 22 nodes.
Polynomial heptic_det_line(const ExtElement& a, const ExtElement& b);

/// q with q(0) = 1 and q^3 = p / p(0). Throws PreconditionFailed if
/// det phi(a) = 0 and NotAPerfectCube if p has no polynomial cube root.
Polynomial heptic_cuberoot_line(const ExtElement& a, const ExtElement& b);

/// Rational cube root of det phi(omega) / det phi(omega0).
Rational heptic_invariant_pointwise(const ExtElement& omega);
/// q(1) on the line omega0 + t (omega - omega0).
Rational heptic_invariant_line(const ExtElement& omega);
/// Both of the above; IdentityViolation if they disagree.
Rational heptic_invariant(const ExtElement& omega);

/// Spanning set (as columns in Lambda^3 coordinates) of Lambda^2 U ^ V7,
/// U given by the columns of a 7x4 matrix.
Matrix wedge2_u_wedge_v(const Matrix& u);

/// Whether omega2 lies in Lambda^2 U ^ V7 for U = <e1, e4, s e2 + t e3, u e5 + v e6>.
bool heptic_fiber_family(const Rational& s, const Rational& t, const Rational& u,
                         const Rational& v);

/// For omega in Lambda^2 U ^ V7 with corank 3: whether the kernel of
/// Lambda^2 U -> Lambda^5 V7, alpha -> omega ^ alpha, is three-dimensional
/// and equals the kernel of phi(omega).
bool heptic_kernel_vs_wedge(const ExtElement& omega, const Matrix& u);

struct HepticDimensionCount {
  long grassmannian = 0;  // dim G(4, 35)
  long group = 0;         // dim sl7
  long family = 0;
};

HepticDimensionCount heptic_dimension_count();

}  // namespace ulrich
