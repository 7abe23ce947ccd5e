#pragma once

// Exact rational scalars and dense matrices.
//
// Scalars are GMP-backed boost::multiprecision numbers with expression
// templates disabled so they compose cleanly with Eigen's own expression
// templates. All elimination is fraction-free (Bareiss) over the integers
// after clearing denominators row by row.

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <Eigen/Core>

#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <vector>

#include "ulrich/errors.hpp"

namespace ulrich {

using BigInt = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                             boost::multiprecision::et_off>;
using Rational =
    boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                  boost::multiprecision::et_off>;

using Index = Eigen::Index;

template <typename Scalar>
using MatrixX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = MatrixX<Rational>;
using Vector = VectorX<Rational>;

/// Fraction-free upper echelon form of an integer matrix.
///
/// Row k of `rows` has its leading entry in column `pivots[k]`; rows past
/// `pivots.size()` are zero. Every stored entry is a minor of the input, so
/// the last pivot of a full-rank square matrix is `sign * det`.
struct Echelon {
  MatrixX<BigInt> rows;
  std::vector<Index> pivots;
  int sign = 1;
};

/// Bareiss elimination, pivoting on the first nonzero entry of each column.
Echelon bareiss_echelon(MatrixX<BigInt> m);

/// Scales each row by the lcm of its denominators. `row_scale_product`, when
/// given, receives the product of the multipliers.
MatrixX<BigInt> clear_denominators(const Matrix& m,
                                   BigInt* row_scale_product = nullptr);

Index rank(const Matrix& m);
std::vector<Vector> kernel_basis(const Matrix& m);
Rational det(const Matrix& m);
std::optional<Vector> solve(const Matrix& m, const Vector& b);

/// Inverse of a square matrix; PreconditionFailed if singular.
Matrix inverse(const Matrix& m);

/// Pfaffian of a skew-symmetric matrix by exact skew elimination.
Rational pfaffian(const Matrix& m);

/// Columns of `m` at its pivot positions: a basis of the column space.
Matrix column_space_basis(const Matrix& m);

/// True iff the column spans of `a` and `b` coincide.
bool same_span(const Matrix& a, const Matrix& b);

/// True iff `v` lies in the column span of `m`.
bool in_span(const Matrix& m, const Vector& v);

/// Stacks vectors as the columns of a matrix with `rows` rows.
Matrix columns(const std::vector<Vector>& vs, Index rows);

Matrix identity(Index n);

/// Integer power with exact rational arithmetic.
Rational pow(const Rational& x, unsigned e);

/// Rational cube root if one exists.
std::optional<Rational> exact_cube_root(const Rational& x);

/// "p/q" in lowest terms (denominator always written).
std::string to_string(const Rational& x);
Rational parse_rational(std::string_view text);

bool is_symmetric(const Matrix& m);

// Expression-friendly overloads: any dense Eigen expression over Rational
// (or BigInt) is evaluated once and forwarded.

template <typename Derived>
  requires(!std::is_same_v<Derived, Matrix>)
Index rank(const Eigen::MatrixBase<Derived>& m) {
  return rank(Matrix(m.template cast<Rational>()));
}

template <typename Derived>
  requires(!std::is_same_v<Derived, Matrix>)
Rational det(const Eigen::MatrixBase<Derived>& m) {
  return det(Matrix(m.template cast<Rational>()));
}

template <typename Derived>
  requires(!std::is_same_v<Derived, Matrix>)
std::vector<Vector> kernel_basis(const Eigen::MatrixBase<Derived>& m) {
  return kernel_basis(Matrix(m.template cast<Rational>()));
}

template <typename Derived>
Index corank(const Eigen::MatrixBase<Derived>& m) {
  return m.cols() - rank(Matrix(m.template cast<Rational>()));
}

}  // namespace ulrich
