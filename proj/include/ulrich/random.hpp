#pragma once

#include <cstdint>
#include <random>

#include "ulrich/exact.hpp"

namespace ulrich {

/// Seeded source of small random integers and integer matrices.
///
/// mt19937_64 output is fixed by the standard; the range reduction is done
/// here (rejection sampling) rather than by std::uniform_int_distribution,
/// whose algorithm is implementation-defined, so draws are reproducible
/// across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);

  /// Uniform integer in [lo, hi] \ {0}.
  long nonzero(long lo, long hi);

  Vector integer_vector(Index n, long lo = -9, long hi = 9);
  Matrix integer_matrix(Index rows, Index cols, long lo = -9, long hi = 9);

  /// Unit upper (or lower) triangular matrix with off-diagonal entries in [lo, hi].
  Matrix unipotent(Index n, bool upper, long lo = -2, long hi = 2);

  /// L * D * U with unit triangular L, U and D = diag(+-1, +-2). Always invertible.
  Matrix invertible(Index n);

  /// Like invertible(n), rescaled so that the determinant is exactly 1.
  Matrix unimodular(Index n);

 private:
  std::mt19937_64 engine_;
};

/// Per-trial seed derivation used by every trial loop.
inline std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t trial) {
  return seed + trial;
}

}  // namespace ulrich
