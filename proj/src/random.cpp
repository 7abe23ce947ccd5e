#include "ulrich/random.hpp"

namespace ulrich {

long Rng::uniform(long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + static_cast<long>(draw % span);
}

long Rng::nonzero(long lo, long hi) {
  long v;
  do {
    v = uniform(lo, hi);
  } while (v == 0);
  return v;
}

Vector Rng::integer_vector(Index n, long lo, long hi) {
  Vector v(n);
  for (Index i = 0; i < n; ++i) v(i) = uniform(lo, hi);
  return v;
}

Matrix Rng::integer_matrix(Index rows, Index cols, long lo, long hi) {
  Matrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    for (Index j = 0; j < cols; ++j) m(i, j) = uniform(lo, hi);
  }
  return m;
}

Matrix Rng::unipotent(Index n, bool upper, long lo, long hi) {
  Matrix m = identity(n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j < n; ++j) {
      if (upper ? j > i : j < i) m(i, j) = uniform(lo, hi);
    }
  }
  return m;
}

Matrix Rng::invertible(Index n) {
  Matrix d = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    const long magnitude = uniform(1, 2);
    d(i, i) = uniform(0, 1) == 0 ? magnitude : -magnitude;
  }
  const Matrix lower = unipotent(n, false);
  const Matrix upper = unipotent(n, true);
  return lower * d * upper;
}

Matrix Rng::unimodular(Index n) {
  Matrix g = invertible(n);
  const Rational d = det(g);
  g.col(0) /= d;
  return g;
}

}  // namespace ulrich
