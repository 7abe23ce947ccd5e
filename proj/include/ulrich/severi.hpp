#pragma once

// The four cubic hypersurfaces secant to the Severi varieties, indexed by
// a in {1, 2, 4, 8}. Coordinates on V:
//
//   a = 1: symmetric 3x3 matrices, (s11, s12, s13, s22, s23, s33)
//   a = 2: 3x3 matrices, row-major
//   a = 4: Lambda^2 Q^6 in lexicographic order (c12, c13, ..., c56)
//   a = 8: H3(O), coordinates as in octjordan.hpp
//
// The cubic h is det, det, Pfaffian and the Jordan norm respectively.

#include <cstdint>

#include "ulrich/exact.hpp"
#include "ulrich/random.hpp"

namespace ulrich {

/// 3a + 3; throws PreconditionFailed for a not in {1, 2, 4, 8}.
Index severi_dim(int a);

Rational severi_invariant(int a, const Vector& v);

/// Symmetric matrix of T(v, ., .), where T is the symmetric trilinear form
/// with T(v, v, v) = h(v).
Matrix severi_phi(int a, const Vector& v);

/// Point with h = 1 (identity matrix, e12 + e34 + e56, Jordan identity).
Vector severi_generic_rep(int a);

/// A rank-two point of the hypersurface (diag(1,1,0), E11 + E22, e12 + e34).
Vector severi_h_rep(int a);

/// Random nonzero point of the cone over the Severi variety.
Vector severi_rank1_sample(int a, Rng& rng);

/// Sum of two rank-one samples whose pencil has corank exactly a + 1.
/// h = 0 is asserted (InvariantViolation); deeper strata are redrawn.
Vector severi_sample_H(int a, Rng& rng);
Vector severi_sample_H(int a, std::uint64_t seed);

struct SeveriSurvey {
  int trials = 0;
  int generic_full_rank = 0;   // random points with h != 0 and rank(phi) = dimV
  int secant_expected_corank = 0;  // secant samples with corank a + 1
};

SeveriSurvey severi_corank_suite(int a, int trials, std::uint64_t seed);

}  // namespace ulrich
