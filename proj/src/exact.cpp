#include "ulrich/exact.hpp"

#include <gmp.h>

#include <utility>

namespace ulrich {
namespace {

BigInt lcm(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::lcm(a, b);
}

// Back substitution on an echelon form. `free_values` assigns every
// non-pivot column among the first `unknowns` columns; `rhs_column`, when
// non-negative, is treated as the right-hand side.
Vector back_substitute(const Echelon& e, Index unknowns,
                       const std::vector<Rational>& free_values,
                       Index rhs_column) {
  Vector x(unknowns);
  std::vector<bool> is_pivot(static_cast<std::size_t>(unknowns), false);
  for (Index p : e.pivots) {
    if (p < unknowns) is_pivot[static_cast<std::size_t>(p)] = true;
  }
  for (Index j = 0; j < unknowns; ++j) {
    x(j) = is_pivot[static_cast<std::size_t>(j)]
               ? Rational(0)
               : free_values[static_cast<std::size_t>(j)];
  }
  for (auto r = static_cast<Index>(e.pivots.size()) - 1; r >= 0; --r) {
    const Index p = e.pivots[static_cast<std::size_t>(r)];
    Rational s = rhs_column >= 0 ? -Rational(e.rows(r, rhs_column)) : Rational(0);
    for (Index j = p + 1; j < unknowns; ++j) {
      if (!e.rows(r, j).is_zero()) s += Rational(e.rows(r, j)) * x(j);
    }
    x(p) = -s / Rational(e.rows(r, p));
  }
  return x;
}

// Smallest integer multiple with coprime entries; sign of the first
// nonzero entry is preserved.
Vector primitive(const Vector& v) {
  BigInt den = 1;
  for (Index i = 0; i < v.size(); ++i) den = lcm(den, denominator(v(i)));
  BigInt g = 0;
  for (Index i = 0; i < v.size(); ++i) {
    g = boost::multiprecision::gcd(g, BigInt(numerator(v(i)) * (den / denominator(v(i)))));
  }
  if (g.is_zero()) return v;
  Vector out = v * Rational(den);
  return out / Rational(g);
}

}  // namespace

MatrixX<BigInt> clear_denominators(const Matrix& m, BigInt* row_scale_product) {
  MatrixX<BigInt> out(m.rows(), m.cols());
  BigInt product = 1;
  for (Index i = 0; i < m.rows(); ++i) {
    BigInt den = 1;
    for (Index j = 0; j < m.cols(); ++j) den = lcm(den, denominator(m(i, j)));
    for (Index j = 0; j < m.cols(); ++j) {
      out(i, j) = numerator(m(i, j)) * (den / denominator(m(i, j)));
    }
    product *= den;
  }
  if (row_scale_product) *row_scale_product = product;
  return out;
}

Echelon bareiss_echelon(MatrixX<BigInt> m) {
  Echelon e;
  const Index rows = m.rows();
  const Index cols = m.cols();
  BigInt previous = 1;
  Index r = 0;
  for (Index c = 0; c < cols && r < rows; ++c) {
    Index p = r;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != r) {
      m.row(p).swap(m.row(r));
      e.sign = -e.sign;
    }
    const BigInt pivot = m(r, c);
    for (Index i = r + 1; i < rows; ++i) {
      const BigInt lead = m(i, c);
      for (Index j = c + 1; j < cols; ++j) {
        m(i, j) = (pivot * m(i, j) - lead * m(r, j)) / previous;
      }
      m(i, c) = 0;
    }
    previous = pivot;
    e.pivots.push_back(c);
    ++r;
  }
  e.rows = std::move(m);
  return e;
}

Index rank(const Matrix& m) {
  return static_cast<Index>(bareiss_echelon(clear_denominators(m)).pivots.size());
}

std::vector<Vector> kernel_basis(const Matrix& m) {
  const Echelon e = bareiss_echelon(clear_denominators(m));
  const Index n = m.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(n), false);
  for (Index p : e.pivots) is_pivot[static_cast<std::size_t>(p)] = true;

  std::vector<Vector> basis;
  for (Index f = 0; f < n; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<Rational> free_values(static_cast<std::size_t>(n), Rational(0));
    free_values[static_cast<std::size_t>(f)] = 1;
    basis.push_back(primitive(back_substitute(e, n, free_values, -1)));
  }
  return basis;
}

Rational det(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw NonSquare("det: matrix is " + std::to_string(m.rows()) + "x" +
                    std::to_string(m.cols()));
  }
  const Index n = m.rows();
  if (n == 0) return Rational(1);
  BigInt scale;
  const Echelon e = bareiss_echelon(clear_denominators(m, &scale));
  if (static_cast<Index>(e.pivots.size()) < n) return Rational(0);
  return Rational(BigInt(e.sign) * e.rows(n - 1, n - 1)) / Rational(scale);
}

std::optional<Vector> solve(const Matrix& m, const Vector& b) {
  if (b.size() != m.rows()) {
    throw DimensionMismatch("solve: rhs has " + std::to_string(b.size()) +
                            " entries, matrix has " + std::to_string(m.rows()) +
                            " rows");
  }
  Matrix augmented(m.rows(), m.cols() + 1);
  augmented << m, b;
  const Echelon e = bareiss_echelon(clear_denominators(augmented));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  std::vector<Rational> zeros(static_cast<std::size_t>(m.cols()), Rational(0));
  return back_substitute(e, m.cols(), zeros, m.cols());
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw NonSquare("inverse: matrix is not square");
  const Index n = m.rows();
  Matrix augmented(n, 2 * n);
  augmented << m, identity(n);
  const Echelon e = bareiss_echelon(clear_denominators(augmented));
  if (static_cast<Index>(e.pivots.size()) < n || e.pivots[static_cast<std::size_t>(n - 1)] != n - 1) {
    throw PreconditionFailed("inverse: matrix is singular");
  }
  Matrix out(n, n);
  const std::vector<Rational> zeros(static_cast<std::size_t>(n), Rational(0));
  for (Index j = 0; j < n; ++j) out.col(j) = back_substitute(e, n, zeros, n + j);
  return out;
}

Rational pfaffian(const Matrix& m) {
  if (m.rows() != m.cols()) throw NonSquare("pfaffian: matrix is not square");
  if (m != Matrix(-m.transpose())) {
    throw PreconditionFailed("pfaffian: matrix is not skew-symmetric");
  }
  Matrix a = m;
  Index n = a.rows();
  if (n % 2 == 1) return Rational(0);
  Rational result = 1;
  // Eliminate the leading 2x2 block: pf(A) = a01 * pf(B - (u v^T - v u^T) / a01).
  while (n > 0) {
    Index p = 1;
    while (p < n && a(0, p).is_zero()) ++p;
    if (p == n) return Rational(0);
    if (p != 1) {
      a.row(1).swap(a.row(p));
      a.col(1).swap(a.col(p));
      result = -result;
    }
    const Rational pivot = a(0, 1);
    result *= pivot;
    const Index rest = n - 2;
    Matrix next = a.bottomRightCorner(rest, rest);
    const Vector u = a.row(0).tail(rest).transpose();
    const Vector v = a.row(1).tail(rest).transpose();
    next -= (u * v.transpose() - v * u.transpose()) / pivot;
    a = std::move(next);
    n = rest;
  }
  return result;
}

Matrix column_space_basis(const Matrix& m) {
  const Echelon e = bareiss_echelon(clear_denominators(m));
  Matrix out(m.rows(), static_cast<Index>(e.pivots.size()));
  for (std::size_t k = 0; k < e.pivots.size(); ++k) {
    out.col(static_cast<Index>(k)) = m.col(e.pivots[k]);
  }
  return out;
}

bool same_span(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) {
    throw DimensionMismatch("same_span: ambient dimensions differ");
  }
  Matrix both(a.rows(), a.cols() + b.cols());
  both << a, b;
  const Index r = rank(both);
  return rank(a) == r && rank(b) == r;
}

bool in_span(const Matrix& m, const Vector& v) {
  if (m.rows() != v.size()) throw DimensionMismatch("in_span: size mismatch");
  Matrix both(m.rows(), m.cols() + 1);
  both << m, v;
  return rank(both) == rank(m);
}

Matrix columns(const std::vector<Vector>& vs, Index rows) {
  Matrix out(rows, static_cast<Index>(vs.size()));
  for (std::size_t k = 0; k < vs.size(); ++k) {
    if (vs[k].size() != rows) throw DimensionMismatch("columns: ragged input");
    out.col(static_cast<Index>(k)) = vs[k];
  }
  return out;
}

Matrix identity(Index n) {
  Matrix out = Matrix::Zero(n, n);
  for (Index i = 0; i < n; ++i) out(i, i) = 1;
  return out;
}

Rational pow(const Rational& x, unsigned e) {
  Rational result = 1;
  Rational base = x;
  while (e > 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

std::optional<Rational> exact_cube_root(const Rational& x) {
  BigInt num = numerator(x);
  BigInt den = denominator(x);
  BigInt num_root;
  BigInt den_root;
  if (mpz_root(num_root.backend().data(), num.backend().data(), 3) == 0) {
    return std::nullopt;
  }
  if (mpz_root(den_root.backend().data(), den.backend().data(), 3) == 0) {
    return std::nullopt;
  }
  return Rational(num_root, den_root);
}

std::string to_string(const Rational& x) {
  return numerator(x).str() + "/" + denominator(x).str();
}

Rational parse_rational(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt num(s.substr(0, slash));
    const BigInt den(s.substr(slash + 1));
    if (den.is_zero()) throw Error("parse_rational: zero denominator in '" + s + "'");
    return Rational(num) / Rational(den);
  } catch (const std::runtime_error& err) {
    if (dynamic_cast<const Error*>(&err)) throw;
    throw Error("parse_rational: cannot parse '" + s + "'");
  }
}

bool is_symmetric(const Matrix& m) {
  return m.rows() == m.cols() && m == Matrix(m.transpose());
}

}  // namespace ulrich
