#include "ulrich/octjordan.hpp"

namespace ulrich {
namespace {

using Quaternion = std::array<Rational, 4>;

Quaternion qmul(const Quaternion& p, const Quaternion& q) {
  return {p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
          p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
          p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
          p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]};
}

Quaternion qconj(const Quaternion& p) { return {p[0], -p[1], -p[2], -p[3]}; }

Quaternion qadd(const Quaternion& p, const Quaternion& q) {
  return {p[0] + q[0], p[1] + q[1], p[2] + q[2], p[3] + q[3]};
}

Quaternion qsub(const Quaternion& p, const Quaternion& q) {
  return {p[0] - q[0], p[1] - q[1], p[2] - q[2], p[3] - q[3]};
}

Quaternion half(const Octonion& u, int which) {
  const std::size_t off = which == 0 ? 0 : 4;
  return {u.c[off], u.c[off + 1], u.c[off + 2], u.c[off + 3]};
}

Octonion join(const Quaternion& p, const Quaternion& q) {
  Octonion u;
  for (std::size_t i = 0; i < 4; ++i) {
    u.c[i] = p[i];
    u.c[i + 4] = q[i];
  }
  return u;
}

// Five-point central difference: exact derivative at 0 of a polynomial of degree <= 4.
Rational derivative_at_zero(const JordanElement& X, const JordanElement& Y) {
  const auto p = [&](long t) { return cubic_norm(X + Rational(t) * Y); };
  return (Rational(8) * (p(1) - p(-1)) - (p(2) - p(-2))) / 12;
}

}  // namespace

Octonion Octonion::real(const Rational& r) {
  Octonion u;
  u.c[0] = r;
  return u;
}

Octonion Octonion::unit(int k) {
  if (k < 0 || k > 7) throw PreconditionFailed("Octonion::unit: index out of range");
  Octonion u;
  u.c[static_cast<std::size_t>(k)] = 1;
  return u;
}

Octonion Octonion::random(Rng& rng, long lo, long hi) {
  Octonion u;
  for (auto& x : u.c) x = rng.uniform(lo, hi);
  return u;
}

Octonion& Octonion::operator+=(const Octonion& o) {
  for (std::size_t i = 0; i < 8; ++i) c[i] += o.c[i];
  return *this;
}

Octonion& Octonion::operator-=(const Octonion& o) {
  for (std::size_t i = 0; i < 8; ++i) c[i] -= o.c[i];
  return *this;
}

Octonion& Octonion::operator*=(const Rational& s) {
  for (auto& x : c) x *= s;
  return *this;
}

Octonion operator*(const Octonion& u, const Octonion& v) {
  const Quaternion a = half(u, 0), b = half(u, 1);
  const Quaternion c = half(v, 0), d = half(v, 1);
  return join(qsub(qmul(a, c), qmul(qconj(d), b)), qadd(qmul(d, a), qmul(b, qconj(c))));
}

Octonion conj(const Octonion& u) {
  Octonion v = -u;
  v.c[0] = u.c[0];
  return v;
}

Rational dot(const Octonion& u, const Octonion& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < 8; ++i) s += u.c[i] * v.c[i];
  return s;
}

Rational norm(const Octonion& u) { return dot(u, u); }

Rational re(const Octonion& u) { return u.c[0]; }

JordanElement JordanElement::identity() { return diag(1, 1, 1); }

JordanElement JordanElement::diag(const Rational& a, const Rational& b, const Rational& c) {
  JordanElement X;
  X.a = a;
  X.b = b;
  X.c = c;
  return X;
}

JordanElement JordanElement::from_coordinates(const Vector& v) {
  if (v.size() != kDim) throw DimensionMismatch("JordanElement: expected 27 coordinates");
  JordanElement X;
  X.a = v(0);
  X.b = v(1);
  X.c = v(2);
  for (std::size_t i = 0; i < 8; ++i) {
    const auto k = static_cast<Index>(i);
    X.x.c[i] = v(3 + k);
    X.y.c[i] = v(11 + k);
    X.z.c[i] = v(19 + k);
  }
  return X;
}

Vector JordanElement::coordinates() const {
  Vector v(kDim);
  v(0) = a;
  v(1) = b;
  v(2) = c;
  for (std::size_t i = 0; i < 8; ++i) {
    const auto k = static_cast<Index>(i);
    v(3 + k) = x.c[i];
    v(11 + k) = y.c[i];
    v(19 + k) = z.c[i];
  }
  return v;
}

JordanElement& JordanElement::operator+=(const JordanElement& o) {
  a += o.a;
  b += o.b;
  c += o.c;
  x += o.x;
  y += o.y;
  z += o.z;
  return *this;
}

JordanElement& JordanElement::operator-=(const JordanElement& o) {
  a -= o.a;
  b -= o.b;
  c -= o.c;
  x -= o.x;
  y -= o.y;
  z -= o.z;
  return *this;
}

JordanElement& JordanElement::operator*=(const Rational& s) {
  a *= s;
  b *= s;
  c *= s;
  x *= s;
  y *= s;
  z *= s;
  return *this;
}

Rational cubic_norm(const JordanElement& X) {
  return X.a * X.b * X.c - X.a * norm(X.x) - X.b * norm(X.y) - X.c * norm(X.z) +
         2 * re((X.x * X.y) * X.z);
}

Rational trace_pairing(const JordanElement& X, const JordanElement& Y) {
  return X.a * Y.a + X.b * Y.b + X.c * Y.c + 2 * (dot(X.x, Y.x) + dot(X.y, Y.y) + dot(X.z, Y.z));
}

JordanElement sharp(const JordanElement& X) {
  // T(X#, E) for a diagonal unit E reads off a diagonal entry; for an
  // off-diagonal unit it reads off twice the coordinate.
  Vector out(JordanElement::kDim);
  for (Index k = 0; k < JordanElement::kDim; ++k) {
    Vector e = Vector::Zero(JordanElement::kDim);
    e(k) = 1;
    const Rational d = derivative_at_zero(X, JordanElement::from_coordinates(e));
    out(k) = k < 3 ? d : d / 2;
  }
  return JordanElement::from_coordinates(out);
}

JordanElement cross(const JordanElement& X, const JordanElement& Y) {
  return sharp(X + Y) - sharp(X) - sharp(Y);
}

JordanElement rank1_sample(Rng& rng) {
  constexpr int kMaxDraws = 64;
  for (int draw = 0; draw < kMaxDraws; ++draw) {
    // Hermitian square of the column (r, u2, u3) with r real.
    const Rational r = rng.uniform(-3, 3);
    const Octonion u2 = Octonion::random(rng);
    const Octonion u3 = Octonion::random(rng);
    JordanElement X;
    X.a = r * r;
    X.b = norm(u2);
    X.c = norm(u3);
    X.z = r * conj(u2);
    X.x = u2 * conj(u3);
    X.y = r * u3;
    X *= Rational(rng.nonzero(-3, 3));
    if (X.is_zero()) continue;
    if (!sharp(X).is_zero()) continue;
    return X;
  }
  throw SamplerExhausted("rank1_sample: no certified rank-one element after " +
                         std::to_string(kMaxDraws) + " draws");
}

JordanElement rank1_sample(std::uint64_t seed) {
  Rng rng(seed);
  return rank1_sample(rng);
}

}  // namespace ulrich
