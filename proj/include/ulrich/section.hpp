#pragma once

// Linear sections X = H n P(L) of a case, the restricted presentation as a
// matrix of forms of degree k in the section coordinates x0..xd, and the
// Hilbert function of its cokernel.

#include <cstdint>
#include <vector>

#include "ulrich/engine.hpp"

namespace ulrich {

using Exponent = std::vector<int>;

/// Exponent vectors of degree `degree` in `vars` variables, graded-lex
/// (descending lexicographic) order: x0^2, x0 x1, ..., xd^2.
std::vector<Exponent> graded_lex_monomials(int vars, int degree);

/// Matrix of forms: coefficient matrix per monomial of degree k.
struct Presentation {
  int d = 0;
  int k = 1;
  std::vector<Exponent> monomials;
  std::vector<Matrix> coefficients;  // parallel to `monomials`

  Index rows() const { return coefficients.empty() ? 0 : coefficients.front().rows(); }
  Index cols() const { return coefficients.empty() ? 0 : coefficients.front().cols(); }

  /// The matrix at the point x (d + 1 coordinates).
  Matrix evaluate(const Vector& x) const;
};

struct LinearSection {
  std::string case_name;
  int d = 0;
  std::uint64_t seed = 0;
  Matrix basis;  // dimV x (d + 1), columns span L
  Presentation presentation;
};

/// Random (d + 1)-dimensional L with integer basis in [-9, 9], redrawn until
/// independent and h|L is not identically zero. Requires 1 <= d <=
/// max_section_dim (PreconditionFailed); DegenerateSection if every draw fails.
LinearSection restrict_section(const CaseDescriptor& c, int d, std::uint64_t seed);

/// Evidence attached to a section: h|L nonzero, det identity on L, and
/// `lines` random lines in P(L) meeting X in degH distinct points.
std::vector<Check> section_evidence(const CaseDescriptor& c, const LinearSection& s,
                                    int lines = 10, int trials = 5);

/// HF(m) = dimB C(m+d, d) - rank(A (x) S_{m-k} -> B (x) S_m), m = 0..m_max.
std::vector<long> hilbert_function(const Presentation& p, int m_max);
std::vector<long> hilbert_function(const CaseDescriptor& c, int d, int m_max, std::uint64_t seed);

/// HF(0) of the spin12 case on a P^5 section, compared with 36 + 10a, a = 0..3.
Check unsplit_witness(std::uint64_t seed);

Json presentation_json(const LinearSection& s);

}  // namespace ulrich
