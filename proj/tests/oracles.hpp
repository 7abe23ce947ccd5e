#pragma once

// Slow, independent reference implementations used to cross-check the
// library: cofactor determinants, Pfaffian expansion, the closed-form Jordan
// adjoint, minors for wedge products, permutation signs for top pairings,
// and exact finite-difference Hessians of cubics.

#include <algorithm>
#include <functional>
#include <vector>

#include "ulrich/exact.hpp"
#include "ulrich/exterior.hpp"
#include "ulrich/octjordan.hpp"
#include "ulrich/random.hpp"

namespace oracle {

using ulrich::Index;
using ulrich::Matrix;
using ulrich::Rational;
using ulrich::Vector;

inline Matrix drop(const Matrix& m, Index row, Index col) {
  Matrix out(m.rows() - 1, m.cols() - 1);
  for (Index i = 0, r = 0; i < m.rows(); ++i) {
    if (i == row) continue;
    for (Index j = 0, c = 0; j < m.cols(); ++j) {
      if (j == col) continue;
      out(r, c++) = m(i, j);
    }
    ++r;
  }
  return out;
}

// Cofactor expansion along the first row. Exponential; keep n <= 7.
inline Rational laplace_det(const Matrix& m) {
  const Index n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational out = 0;
  for (Index j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    const Rational minor = laplace_det(drop(m, 0, j));
    out += (j % 2 == 0 ? m(0, j) : -m(0, j)) * minor;
  }
  return out;
}

// Pf(M) = sum_j (-1)^j m_{0j} Pf(M without rows/cols 0, j).
inline Rational pfaffian_expand(const Matrix& m) {
  const Index n = m.rows();
  if (n == 0) return 1;
  if (n % 2 == 1) return 0;
  Rational out = 0;
  for (Index j = 1; j < n; ++j) {
    if (m(0, j) == 0) continue;
    std::vector<Index> keep;
    for (Index i = 1; i < n; ++i) {
      if (i != j) keep.push_back(i);
    }
    Matrix sub(n - 2, n - 2);
    for (Index a = 0; a < n - 2; ++a) {
      for (Index b = 0; b < n - 2; ++b) sub(a, b) = m(keep[a], keep[b]);
    }
    const Rational term = m(0, j) * pfaffian_expand(sub);
    out += (j % 2 == 1) ? term : Rational(-term);
  }
  return out;
}

inline Matrix random_skew(ulrich::Rng& rng, Index n) {
  Matrix m = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = i + 1; j < n; ++j) {
      m(i, j) = rng.uniform(-5, 5);
      m(j, i) = -m(i, j);
    }
  }
  return m;
}

// X# = (bc - n(x), ca - n(y), ab - n(z), conj(yz) - a x, conj(zx) - b y, conj(xy) - c z).
inline ulrich::JordanElement sharp_explicit(const ulrich::JordanElement& X) {
  using ulrich::conj;
  using ulrich::norm;
  ulrich::JordanElement out;
  out.a = X.b * X.c - norm(X.x);
  out.b = X.c * X.a - norm(X.y);
  out.c = X.a * X.b - norm(X.z);
  out.x = conj(X.y * X.z) - X.a * X.x;
  out.y = conj(X.z * X.x) - X.b * X.y;
  out.z = conj(X.x * X.y) - X.c * X.z;
  return out;
}

inline int permutation_sign(std::vector<int> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    for (std::size_t j = i + 1; j < p.size(); ++j) {
      if (p[i] > p[j]) sign = -sign;
      if (p[i] == p[j]) return 0;
    }
  }
  return sign;
}

// Coordinates of v1 ^ ... ^ vk: the k x k minors of [v1 ... vk].
inline Vector wedge_by_minors(const Matrix& vs) {
  const int n = static_cast<int>(vs.rows());
  const int k = static_cast<int>(vs.cols());
  const auto masks = ulrich::basis_masks(n, k);
  Vector out(static_cast<Index>(masks.size()));
  for (std::size_t b = 0; b < masks.size(); ++b) {
    const auto rows = ulrich::indices_of(masks[b]);
    Matrix minor(k, k);
    for (int i = 0; i < k; ++i) {
      for (int j = 0; j < k; ++j) minor(i, j) = vs(rows[i] - 1, j);
    }
    out(static_cast<Index>(b)) = laplace_det(minor);
  }
  return out;
}

// Coefficient of e_{1..n} in a ^ b, term by term through permutation signs.
inline Rational top_by_permutations(const ulrich::ExtElement& a, const ulrich::ExtElement& b) {
  Rational out = 0;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      auto p = ulrich::indices_of(ma);
      const auto q = ulrich::indices_of(mb);
      p.insert(p.end(), q.begin(), q.end());
      if (static_cast<int>(p.size()) != a.ambient()) continue;
      out += permutation_sign(p) * ca * cb;
    }
  }
  return out;
}

// Hessian of a cubic form by central differences; exact for degree <= 3.
inline Matrix cubic_hessian(const std::function<Rational(const Vector&)>& f, const Vector& v) {
  const Index n = v.size();
  Matrix out(n, n);
  const Rational fv = f(v);
  for (Index i = 0; i < n; ++i) {
    Vector ei = Vector::Zero(n);
    ei(i) = 1;
    out(i, i) = f(Vector(v + ei)) - 2 * fv + f(Vector(v - ei));
    for (Index j = i + 1; j < n; ++j) {
      Vector ej = Vector::Zero(n);
      ej(j) = 1;
      const Rational mixed = f(Vector(v + ei + ej)) - f(Vector(v + ei - ej)) -
                             f(Vector(v - ei + ej)) + f(Vector(v - ei - ej));
      out(i, j) = out(j, i) = mixed / 4;
    }
  }
  return out;
}

}  // namespace oracle
