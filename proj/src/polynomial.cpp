#include "ulrich/polynomial.hpp"

#include <algorithm>

namespace ulrich {

Polynomial::Polynomial(std::vector<Rational> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1, Rational(0));
  v.back() = c;
  return Polynomial(std::move(v));
}

Polynomial Polynomial::interpolate(const std::vector<Rational>& nodes,
                                   const std::vector<Rational>& values) {
  if (nodes.size() != values.size()) {
    throw DimensionMismatch("interpolate: nodes and values differ in length");
  }
  const std::size_t n = nodes.size();
  // Divided differences in place.
  std::vector<Rational> dd = values;
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      dd[i] = (dd[i] - dd[i - 1]) / (nodes[i] - nodes[i - level]);
    }
  }
  // Horner on the Newton form.
  Polynomial result;
  for (std::size_t i = n; i-- > 0;) {
    result = result * Polynomial({-nodes[i], Rational(1)}) + constant(dd[i]);
  }
  return result;
}

Rational Polynomial::coefficient(int k) const {
  if (k < 0 || k > degree()) return Rational(0);
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::leading() const {
  return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Rational Polynomial::operator()(const Rational& t) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * t + *it;
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) d[k - 1] = coeffs_[k] * static_cast<long>(k);
  return Polynomial(std::move(d));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  return a + Rational(-1) * b;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, const Polynomial& p) {
  std::vector<Rational> out = p.coeffs_;
  for (auto& x : out) x *= c;
  return Polynomial(std::move(out));
}

std::vector<Rational> interpolation_nodes(int count) {
  std::vector<Rational> nodes;
  nodes.reserve(static_cast<std::size_t>(count));
  for (long k = 0; static_cast<int>(nodes.size()) < count; ++k) {
    nodes.emplace_back(k);
    if (k > 0 && static_cast<int>(nodes.size()) < count) nodes.emplace_back(-k);
  }
  return nodes;
}

std::optional<Polynomial> cube_root(const Polynomial& p) {
  const Rational p0 = p.coefficient(0);
  if (p0.is_zero()) throw PreconditionFailed("cube_root: p(0) must be nonzero");
  if (p.degree() % 3 != 0) return std::nullopt;
  const int n = p.degree() / 3;
  const Polynomial f = (Rational(1) / p0) * p;

  // g = f^(1/3) as a power series: k g_k = sum_{j=1..k} ((a+1) j - k) f_j g_{k-j}, a = 1/3.
  const Rational alpha_plus_one(4, 3);
  std::vector<Rational> g(static_cast<std::size_t>(n) + 1, Rational(0));
  g[0] = 1;
  for (int k = 1; k <= n; ++k) {
    Rational acc = 0;
    for (int j = 1; j <= k; ++j) {
      acc += (alpha_plus_one * j - k) * f.coefficient(j) * g[static_cast<std::size_t>(k - j)];
    }
    g[static_cast<std::size_t>(k)] = acc / k;
  }
  Polynomial q(std::move(g));
  if (q * q * q != f) return std::nullopt;
  return q;
}

Polynomial remainder(Polynomial a, const Polynomial& b) {
  if (b.is_zero()) throw PreconditionFailed("remainder: division by zero polynomial");
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const Rational factor = a.leading() / b.leading();
    a = a - Polynomial::monomial(factor, a.degree() - b.degree()) * b;
  }
  return a;
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return (Rational(1) / a.leading()) * a;
}

bool is_squarefree(const Polynomial& p) {
  if (p.is_zero()) return false;
  return gcd(p, p.derivative()).degree() == 0;
}

}  // namespace ulrich
