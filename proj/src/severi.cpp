#include "ulrich/severi.hpp"

#include <array>
#include <mutex>

#include "ulrich/octjordan.hpp"

namespace ulrich {
namespace {

constexpr int kMaxDraws = 32;

int slot(int a) {
  switch (a) {
    case 1: return 0;
    case 2: return 1;
    case 4: return 2;
    case 8: return 3;
    default:
      throw PreconditionFailed("severi: a must be 1, 2, 4 or 8 (got " + std::to_string(a) + ")");
  }
}

void check_size(int a, const Vector& v) {
  if (v.size() != severi_dim(a)) {
    throw DimensionMismatch("severi: expected " + std::to_string(severi_dim(a)) +
                            " coordinates, got " + std::to_string(v.size()));
  }
}

Matrix symmetric_from(const Vector& v) {
  Matrix s(3, 3);
  s << v(0), v(1), v(2),
       v(1), v(3), v(4),
       v(2), v(4), v(5);
  return s;
}

Matrix square_from(const Vector& v) {
  Matrix s(3, 3);
  for (Index i = 0; i < 3; ++i) {
    for (Index j = 0; j < 3; ++j) s(i, j) = v(3 * i + j);
  }
  return s;
}

Matrix skew_from(const Vector& v) {
  Matrix s = Matrix::Zero(6, 6);
  Index k = 0;
  for (Index i = 0; i < 6; ++i) {
    for (Index j = i + 1; j < 6; ++j, ++k) {
      s(i, j) = v(k);
      s(j, i) = -v(k);
    }
  }
  return s;
}

// T[i](j, k) = T(e_i, e_j, e_k), recovered from h by cubic polarization.
using Tensor = std::vector<Matrix>;

Tensor build_tensor(int a) {
  const Index n = severi_dim(a);
  const auto unit = [n](Index i) {
    Vector e = Vector::Zero(n);
    e(i) = 1;
    return e;
  };
  std::vector<Rational> single(static_cast<std::size_t>(n));
  Matrix pair(n, n);
  for (Index i = 0; i < n; ++i) single[static_cast<std::size_t>(i)] = severi_invariant(a, unit(i));
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      pair(i, j) = severi_invariant(a, unit(i) + unit(j));
      pair(j, i) = pair(i, j);
    }
  }
  Tensor t(static_cast<std::size_t>(n), Matrix::Zero(n, n));
  for (Index i = 0; i < n; ++i) {
    for (Index j = i; j < n; ++j) {
      for (Index k = j; k < n; ++k) {
        const Rational triple = severi_invariant(a, unit(i) + unit(j) + unit(k));
        const Rational value = (triple - pair(i, j) - pair(i, k) - pair(j, k) +
                                single[static_cast<std::size_t>(i)] +
                                single[static_cast<std::size_t>(j)] +
                                single[static_cast<std::size_t>(k)]) / 6;
        if (value.is_zero()) continue;
        const std::array<Index, 3> idx{i, j, k};
        // All permutations of (i, j, k).
        for (int p = 0; p < 6; ++p) {
          static constexpr int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                              {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
          t[static_cast<std::size_t>(idx[perms[p][0]])](idx[perms[p][1]], idx[perms[p][2]]) = value;
        }
      }
    }
  }
  return t;
}

const Tensor& structure_tensor(int a) {
  static std::array<Tensor, 4> tensors;
  static std::array<std::once_flag, 4> flags;
  const int s = slot(a);
  std::call_once(flags[static_cast<std::size_t>(s)],
                 [&] { tensors[static_cast<std::size_t>(s)] = build_tensor(a); });
  return tensors[static_cast<std::size_t>(s)];
}

}  // namespace

Index severi_dim(int a) {
  slot(a);
  return 3 * a + 3;
}

Rational severi_invariant(int a, const Vector& v) {
  check_size(a, v);
  switch (a) {
    case 1: return det(symmetric_from(v));
    case 2: return det(square_from(v));
    case 4: return pfaffian(skew_from(v));
    default: return cubic_norm(JordanElement::from_coordinates(v));
  }
}

Matrix severi_phi(int a, const Vector& v) {
  check_size(a, v);
  const Tensor& t = structure_tensor(a);
  const Index n = v.size();
  Matrix out = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    if (!v(i).is_zero()) out += v(i) * t[static_cast<std::size_t>(i)];
  }
  return out;
}

Vector severi_generic_rep(int a) {
  Vector v = Vector::Zero(severi_dim(a));
  switch (a) {
    case 1: v(0) = v(3) = v(5) = 1; break;
    case 2: v(0) = v(4) = v(8) = 1; break;
    case 4: v(0) = v(9) = v(14) = 1; break;  // e12, e34, e56
    default: v(0) = v(1) = v(2) = 1; break;
  }
  return v;
}

Vector severi_h_rep(int a) {
  Vector v = Vector::Zero(severi_dim(a));
  switch (a) {
    case 1: v(0) = v(3) = 1; break;
    case 2: v(0) = v(4) = 1; break;
    case 4: v(0) = v(9) = 1; break;
    default: v(0) = v(1) = 1; break;
  }
  return v;
}

Vector severi_rank1_sample(int a, Rng& rng) {
  const Index n = severi_dim(a);
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    Vector out(n);
    switch (a) {
      case 1: {
        const Vector u = rng.integer_vector(3);
        out << u(0) * u(0), u(0) * u(1), u(0) * u(2), u(1) * u(1), u(1) * u(2), u(2) * u(2);
        break;
      }
      case 2: {
        const Vector u = rng.integer_vector(3);
        const Vector w = rng.integer_vector(3);
        for (Index i = 0; i < 3; ++i) {
          for (Index j = 0; j < 3; ++j) out(3 * i + j) = u(i) * w(j);
        }
        break;
      }
      case 4: {
        const Vector u = rng.integer_vector(6);
        const Vector w = rng.integer_vector(6);
        Index k = 0;
        for (Index i = 0; i < 6; ++i) {
          for (Index j = i + 1; j < 6; ++j, ++k) out(k) = u(i) * w(j) - u(j) * w(i);
        }
        break;
      }
      default:
        out = rank1_sample(rng).coordinates();
        break;
    }
    if (!out.isZero()) return out;
  }
  throw SamplerExhausted("severi_rank1_sample: only zero draws");
}

Vector severi_sample_H(int a, Rng& rng) {
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    const Vector v = severi_rank1_sample(a, rng) + severi_rank1_sample(a, rng);
    if (!severi_invariant(a, v).is_zero()) {
      throw InvariantViolation("severi_sample_H: secant point with h != 0 for a = " +
                               std::to_string(a));
    }
    if (corank(severi_phi(a, v)) == a + 1) return v;
  }
  throw DegenerateSample("severi_sample_H: every secant draw fell in a deeper stratum");
}

Vector severi_sample_H(int a, std::uint64_t seed) {
  Rng rng(seed);
  return severi_sample_H(a, rng);
}

SeveriSurvey severi_corank_suite(int a, int trials, std::uint64_t seed) {
  if (trials < 1) throw PreconditionFailed("severi_corank_suite: trials must be >= 1");
  SeveriSurvey s;
  s.trials = trials;
  const Index n = severi_dim(a);
  for (int t = 0; t < trials; ++t) {
    Rng rng(trial_seed(seed, static_cast<std::uint64_t>(t)));
    Vector v = rng.integer_vector(n);
    while (severi_invariant(a, v).is_zero()) v = rng.integer_vector(n);
    if (rank(severi_phi(a, v)) == n) ++s.generic_full_rank;
    const Vector x = severi_sample_H(a, rng);
    if (corank(severi_phi(a, x)) == a + 1) ++s.secant_expected_corank;
  }
  return s;
}

}  // namespace ulrich
