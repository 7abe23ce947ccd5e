#include "ulrich/exterior.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace ulrich {
namespace {

void check_ambient(int n) {
  if (n < 0 || n > kMaxAmbient) {
    throw PreconditionFailed("exterior: ambient dimension " + std::to_string(n) +
                             " out of range");
  }
}

Mask full_mask(int n) { return n == 0 ? Mask{0} : (Mask{1} << n) - 1; }

// Sign of moving every element of `b` past the elements of `a` that follow it.
int inversion_sign(Mask a, Mask b) {
  int parity = 0;
  for (Mask rest = b; rest != 0; rest &= rest - 1) {
    const int bit = std::countr_zero(rest);
    const Mask above = a & ~((Mask{2} << bit) - 1);
    parity += std::popcount(above);
  }
  return (parity & 1) ? -1 : 1;
}

}  // namespace

Mask mask_of(std::initializer_list<int> indices) {
  Mask m = 0;
  for (int i : indices) {
    if (i < 1 || i > kMaxAmbient) throw PreconditionFailed("mask_of: index out of range");
    m |= Mask{1} << (i - 1);
  }
  return m;
}

std::vector<int> indices_of(Mask m) {
  std::vector<int> out;
  for (; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
  return out;
}

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::vector<Mask> basis_masks(int n, int g) {
  check_ambient(n);
  std::vector<Mask> out;
  if (g < 0 || g > n) return out;
  out.reserve(static_cast<std::size_t>(binomial(n, g)));
  for (Mask m = 0; m <= full_mask(n); ++m) {
    if (std::popcount(m) == g) out.push_back(m);
    if (m == full_mask(n)) break;
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

Index basis_index(int n, Mask m) {
  const std::vector<int> idx = indices_of(m);
  const int g = static_cast<int>(idx.size());
  long rank = 0;
  int previous = 0;
  for (int t = 0; t < g; ++t) {
    for (int j = previous + 1; j < idx[static_cast<std::size_t>(t)]; ++j) {
      rank += binomial(n - j, g - t - 1);
    }
    previous = idx[static_cast<std::size_t>(t)];
  }
  return static_cast<Index>(rank);
}

int wedge_sign(Mask a, Mask b) {
  if (a & b) return 0;
  return inversion_sign(a, b);
}

template <Variance V>
Form<V>::Form(int ambient, int grade) : ambient_(ambient), grade_(grade) {
  check_ambient(ambient);
  if (grade < 0 || grade > ambient) {
    throw GradeMismatch("exterior: grade " + std::to_string(grade) +
                        " invalid in dimension " + std::to_string(ambient));
  }
}

template <Variance V>
Form<V> Form<V>::basis(int ambient, std::initializer_list<int> indices) {
  Form f(ambient, static_cast<int>(indices.size()));
  Mask m = 0;
  int sign = 1;
  for (int i : indices) {
    if (i < 1 || i > ambient) throw PreconditionFailed("basis: index out of range");
    const Mask bit = Mask{1} << (i - 1);
    if (m & bit) return f;
    sign *= inversion_sign(m, bit);
    m |= bit;
  }
  f.add(m, Rational(sign));
  return f;
}

template <Variance V>
Form<V> Form<V>::from_coordinates(int ambient, int grade, const Vector& coords) {
  Form f(ambient, grade);
  const auto masks = basis_masks(ambient, grade);
  if (coords.size() != static_cast<Index>(masks.size())) {
    throw DimensionMismatch("from_coordinates: expected " + std::to_string(masks.size()) +
                            " coordinates");
  }
  for (std::size_t k = 0; k < masks.size(); ++k) f.add(masks[k], coords(static_cast<Index>(k)));
  return f;
}

template <Variance V>
Rational Form<V>::coefficient(Mask m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

template <Variance V>
void Form<V>::add(Mask m, const Rational& c) {
  if (c.is_zero()) return;
  if (std::popcount(m) != grade_ || (m & ~full_mask(ambient_)) != 0) {
    throw GradeMismatch("exterior: monomial does not fit grade/ambient");
  }
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

template <Variance V>
Vector Form<V>::coordinates() const {
  Vector out = Vector::Zero(binomial(ambient_, grade_));
  for (const auto& [m, c] : terms_) out(basis_index(ambient_, m)) = c;
  return out;
}

template <Variance V>
void Form<V>::check_compatible(const Form& other) const {
  if (ambient_ != other.ambient_) throw AmbientMismatch("exterior: ambient dimensions differ");
  if (grade_ != other.grade_) throw GradeMismatch("exterior: grades differ");
}

template <Variance V>
Form<V>& Form<V>::operator+=(const Form& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add(m, c);
  return *this;
}

template <Variance V>
Form<V>& Form<V>::operator-=(const Form& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add(m, -c);
  return *this;
}

template <Variance V>
Form<V>& Form<V>::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, value] : terms_) value *= c;
  return *this;
}

template class Form<Variance::primal>;
template class Form<Variance::dual>;

ExtElement vector_form(const Vector& v) {
  return ExtElement::from_coordinates(static_cast<int>(v.size()), 1, v);
}

template <Variance V>
Form<V> wedge(const Form<V>& a, const Form<V>& b) {
  if (a.ambient() != b.ambient()) throw AmbientMismatch("wedge: ambient dimensions differ");
  const int n = a.ambient();
  const int g = a.grade() + b.grade();
  // Past the top degree the product is zero; represent it in the top grade.
  Form<V> out(n, std::min(g, n));
  if (g > n) return out;
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      const int s = wedge_sign(ma, mb);
      if (s != 0) out.add(ma | mb, s > 0 ? ca * cb : -(ca * cb));
    }
  }
  return out;
}

template ExtElement wedge(const ExtElement&, const ExtElement&);
template ExtDualElement wedge(const ExtDualElement&, const ExtDualElement&);

ExtElement contract(const ExtDualElement& a, const ExtElement& b) {
  if (a.ambient() != b.ambient()) throw AmbientMismatch("contract: ambient dimensions differ");
  if (a.grade() > b.grade()) throw GradeMismatch("contract: dual grade exceeds primal grade");
  ExtElement out(b.ambient(), b.grade() - a.grade());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if ((ma & mb) != ma) continue;
      // Remove the indices of `ma` one at a time, lowest first; each removal
      // contributes the parity of the remaining indices below it.
      Mask rest = mb;
      int parity = 0;
      for (Mask todo = ma; todo != 0; todo &= todo - 1) {
        const Mask bit = todo & (~todo + 1);
        parity += std::popcount(rest & (bit - 1));
        rest &= ~bit;
      }
      const Rational c = ca * cb;
      out.add(rest, (parity & 1) ? -c : c);
    }
  }
  return out;
}

Rational top_pair(const ExtElement& a, const ExtElement& b) {
  if (a.ambient() != b.ambient()) throw AmbientMismatch("top_pair: ambient dimensions differ");
  if (a.grade() + b.grade() != a.ambient()) {
    throw GradeMismatch("top_pair: grades " + std::to_string(a.grade()) + " + " +
                        std::to_string(b.grade()) + " do not sum to " +
                        std::to_string(a.ambient()));
  }
  const Mask top = full_mask(a.ambient());
  Rational sum = 0;
  for (const auto& [ma, ca] : a.terms()) {
    const auto it = b.terms().find(top & ~ma);
    if (it == b.terms().end()) continue;
    const Rational c = ca * it->second;
    if (inversion_sign(ma, it->first) > 0) {
      sum += c;
    } else {
      sum -= c;
    }
  }
  return sum;
}

ExtElement lambda_power_action(const Matrix& g, const ExtElement& a) {
  const int n = a.ambient();
  if (g.rows() != n || g.cols() != n) {
    throw DimensionMismatch("lambda_power_action: matrix is not " + std::to_string(n) + "x" +
                            std::to_string(n));
  }
  std::vector<ExtElement> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) images.push_back(vector_form(g.col(i)));

  ExtElement out(n, a.grade());
  for (const auto& [m, c] : a.terms()) {
    ExtElement product = ExtElement::basis(n, {});
    for (int i : indices_of(m)) product = wedge(product, images[static_cast<std::size_t>(i - 1)]);
    out += c * product;
  }
  return out;
}

Matrix lambda_power_matrix(const Matrix& g, int grade) {
  if (g.rows() != g.cols()) throw NonSquare("lambda_power_matrix: matrix is not square");
  const int n = static_cast<int>(g.rows());
  const auto masks = basis_masks(n, grade);
  const auto size = static_cast<Index>(masks.size());
  Matrix out(size, size);
  for (Index j = 0; j < size; ++j) {
    ExtElement e(n, grade);
    e.add(masks[static_cast<std::size_t>(j)], Rational(1));
    out.col(j) = lambda_power_action(g, e).coordinates();
  }
  return out;
}

ExtElement derivation_action(const Matrix& a, const ExtElement& x) {
  const int n = x.ambient();
  if (a.rows() != n || a.cols() != n) {
    throw DimensionMismatch("derivation_action: matrix is not " + std::to_string(n) + "x" +
                            std::to_string(n));
  }
  ExtElement out(n, x.grade());
  for (const auto& [m, c] : x.terms()) {
    const std::vector<int> idx = indices_of(m);
    for (std::size_t p = 0; p < idx.size(); ++p) {
      ExtElement product = ExtElement::basis(n, {});
      for (std::size_t q = 0; q < idx.size(); ++q) {
        const int i = idx[q] - 1;
        product = wedge(product, q == p ? vector_form(a.col(i))
                                        : ExtElement::basis(n, {idx[q]}));
      }
      out += c * product;
    }
  }
  return out;
}

Matrix derivation_matrix(const Matrix& a, int grade) {
  if (a.rows() != a.cols()) throw NonSquare("derivation_matrix: matrix is not square");
  const int n = static_cast<int>(a.rows());
  const auto masks = basis_masks(n, grade);
  const auto size = static_cast<Index>(masks.size());
  Matrix out(size, size);
  for (Index j = 0; j < size; ++j) {
    ExtElement e(n, grade);
    e.add(masks[static_cast<std::size_t>(j)], Rational(1));
    out.col(j) = derivation_action(a, e).coordinates();
  }
  return out;
}

template <Variance V>
std::string to_string(const Form<V>& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    if (!first) os << " + ";
    first = false;
    if (c != 1) os << to_string(c) << ' ';
    os << (V == Variance::dual ? "e*" : "e");
    for (int i : indices_of(m)) os << i;
  }
  return os.str();
}

template std::string to_string(const ExtElement&);
template std::string to_string(const ExtDualElement&);

}  // namespace ulrich
