#include "ulrich/section.hpp"

#include <map>

#include "ulrich/errors.hpp"
#include "ulrich/exterior.hpp"
#include "ulrich/polynomial.hpp"

namespace ulrich {
namespace {

constexpr int kMaxSectionDraws = 32;

Rational monomial_value(const Exponent& e, const Vector& x) {
  Rational out = 1;
  for (std::size_t i = 0; i < e.size(); ++i) {
    out *= pow(x(static_cast<Index>(i)), static_cast<unsigned>(e[i]));
  }
  return out;
}

void fill(int vars, int remaining, Exponent& current, std::vector<Exponent>& out) {
  const std::size_t pos = current.size();
  if (static_cast<int>(pos) == vars - 1) {
    current.push_back(remaining);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    current.push_back(e);
    fill(vars, remaining - e, current, out);
    current.pop_back();
  }
}

// Coefficients of phi(B x) in the monomials of degree k, by polarization.
Presentation build_presentation(const CaseDescriptor& c, const Matrix& basis) {
  const int vars = static_cast<int>(basis.cols());
  Presentation p;
  p.d = vars - 1;
  p.k = c.k;
  p.monomials = graded_lex_monomials(vars, c.k);
  std::vector<Matrix> at_basis;
  for (int i = 0; i < vars; ++i) at_basis.push_back(c.phi(basis.col(i)));
  for (const auto& e : p.monomials) {
    if (c.k == 1) {
      for (int i = 0; i < vars; ++i) {
        if (e[i] == 1) p.coefficients.push_back(at_basis[i]);
      }
      continue;
    }
    int first = -1, second = -1;
    for (int i = 0; i < vars; ++i) {
      if (e[i] == 2) first = second = i;
      if (e[i] == 1) (first < 0 ? first : second) = i;
    }
    if (first == second) {
      p.coefficients.push_back(at_basis[first]);
    } else {
      const Vector sum = basis.col(first) + basis.col(second);
      p.coefficients.push_back(Matrix(c.phi(sum) - at_basis[first] - at_basis[second]));
    }
  }
  return p;
}

Vector random_point(Rng& rng, Index n) {
  Vector x = rng.integer_vector(n);
  while (x.isZero()) x = rng.integer_vector(n);
  return x;
}

}  // namespace

std::vector<Exponent> graded_lex_monomials(int vars, int degree) {
  if (vars < 1 || degree < 0) throw PreconditionFailed("graded_lex_monomials: bad arguments");
  std::vector<Exponent> out;
  Exponent current;
  fill(vars, degree, current, out);
  return out;
}

Matrix Presentation::evaluate(const Vector& x) const {
  if (x.size() != d + 1) throw DimensionMismatch("Presentation::evaluate: expected d + 1 coordinates");
  Matrix out = Matrix::Zero(rows(), cols());
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    out += monomial_value(monomials[i], x) * coefficients[i];
  }
  return out;
}

LinearSection restrict_section(const CaseDescriptor& c, int d, std::uint64_t seed) {
  if (d < 1 || d > c.max_section_dim) {
    throw PreconditionFailed("restrict_section: d = " + std::to_string(d) + " outside 1.." +
                             std::to_string(c.max_section_dim) + " for " + c.name);
  }
  Rng rng(seed);
  for (int draw = 0; draw < kMaxSectionDraws; ++draw) {
    const Matrix basis = rng.integer_matrix(c.dimV, d + 1);
    if (rank(basis) != d + 1) continue;
    const Vector x = random_point(rng, d + 1);
    if (c.h(basis * x).is_zero()) continue;
    LinearSection s;
    s.case_name = c.name;
    s.d = d;
    s.seed = seed;
    s.basis = basis;
    s.presentation = build_presentation(c, basis);
    return s;
  }
  throw DegenerateSection("restrict_section: h vanished on every drawn subspace for " + c.name);
}

std::vector<Check> section_evidence(const CaseDescriptor& c, const LinearSection& s, int lines,
                                    int trials) {
  std::vector<Check> out;
  Rng rng(s.seed ^ 0x5ec7ULL);
  const Index vars = s.d + 1;

  const Rational h0 = c.h(c.generic_rep);
  const Rational constant = det(c.phi(c.generic_rep)) / pow(h0, static_cast<unsigned>(c.r));

  const Vector x = random_point(rng, vars);
  const Rational hx = c.h(s.basis * x);
  out.push_back({"section-h-nonzero", "h restricted to L is not identically zero", !hx.is_zero(),
                 Json{{"value", to_string(hx)}}});

  int agree = 0;
  for (int t = 0; t < trials; ++t) {
    const Vector y = random_point(rng, vars);
    const Matrix m = s.presentation.evaluate(y);
    if (m == c.phi(s.basis * y) &&
        det(m) == constant * pow(c.h(s.basis * y), static_cast<unsigned>(c.r))) {
      ++agree;
    }
  }
  out.push_back({"section-det-identity", "det phi = c h^r on L", agree == trials,
                 Json{{"trials", trials}, {"agreeing", agree}}});

  // A line in P(L) meets X in degH distinct points iff h on the line is a
  // squarefree polynomial of full degree; then the gradient of h|L is nonzero
  // at every one of those points.
  int transverse = 0;
  const auto nodes = interpolation_nodes(c.degH + 2);
  for (int l = 0; l < lines; ++l) {
    const Vector p = s.basis * random_point(rng, vars);
    const Vector q = s.basis * random_point(rng, vars);
    std::vector<Rational> values;
    for (const auto& t : nodes) values.push_back(c.h(Vector(p + t * q)));
    const Polynomial f = Polynomial::interpolate(nodes, values);
    if (f.degree() == c.degH && is_squarefree(f)) ++transverse;
  }
  out.push_back({"section-transverse-lines", "general lines meet X in degH distinct points",
                 transverse == lines, Json{{"lines", lines}, {"transverse", transverse}}});
  return out;
}

std::vector<long> hilbert_function(const Presentation& p, int m_max) {
  const int vars = p.d + 1;
  const Index dim_b = p.rows(), dim_a = p.cols();
  std::vector<long> hf;
  for (int m = 0; m <= m_max; ++m) {
    const auto target = graded_lex_monomials(vars, m);
    const long total = static_cast<long>(dim_b * static_cast<Index>(target.size()));
    if (m < p.k) {
      hf.push_back(total);
      continue;
    }
    std::map<Exponent, Index> position;
    for (std::size_t i = 0; i < target.size(); ++i) position[target[i]] = static_cast<Index>(i);
    const auto source = graded_lex_monomials(vars, m - p.k);
    Matrix mult = Matrix::Zero(total, dim_a * static_cast<Index>(source.size()));
    for (std::size_t s = 0; s < source.size(); ++s) {
      for (std::size_t n = 0; n < p.monomials.size(); ++n) {
        Exponent e = source[s];
        for (int i = 0; i < vars; ++i) e[i] += p.monomials[n][i];
        const Index row0 = position.at(e) * dim_b;
        const Index col0 = static_cast<Index>(s) * dim_a;
        mult.block(row0, col0, dim_b, dim_a) += p.coefficients[n];
      }
    }
    hf.push_back(total - static_cast<long>(rank(mult)));
  }
  return hf;
}

std::vector<long> hilbert_function(const CaseDescriptor& c, int d, int m_max, std::uint64_t seed) {
  if (m_max < 0) throw PreconditionFailed("hilbert_function: m_max must be >= 0");
  return hilbert_function(restrict_section(c, d, seed).presentation, m_max);
}

Check unsplit_witness(std::uint64_t seed) {
  const auto hf = hilbert_function(find_case("freud-spin12"), 5, 0, seed);
  Json split = Json::array();
  bool excluded = true;
  for (int a = 0; a <= 3; ++a) {
    split.push_back(36 + 10 * a);
    excluded = excluded && hf[0] != 36 + 10 * a;
  }
  return {"unsplit-witness", "h0 of a split rank six bundle would be 36 + 10a, not 12",
          hf[0] == 12 && excluded, Json{{"hf0", hf[0]}, {"split_values", split}}};
}

Json presentation_json(const LinearSection& s) {
  const Presentation& p = s.presentation;
  Json matrix = Json::array();
  for (Index i = 0; i < p.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < p.cols(); ++j) {
      Json entry = Json::array();
      for (const auto& c : p.coefficients) entry.push_back(to_string(c(i, j)));
      row.push_back(std::move(entry));
    }
    matrix.push_back(std::move(row));
  }
  Json monomials = Json::array();
  for (const auto& e : p.monomials) monomials.push_back(e);
  Json subspace = Json::array();
  for (Index j = 0; j < s.basis.cols(); ++j) {
    Json col = Json::array();
    for (Index i = 0; i < s.basis.rows(); ++i) col.push_back(to_string(s.basis(i, j)));
    subspace.push_back(std::move(col));
  }
  return Json{{"case", s.case_name}, {"d", s.d},          {"k", p.k},
              {"dimA", p.cols()},    {"matrix", matrix},   {"monomial_order", "graded-lex"},
              {"monomials", monomials}, {"subspace", subspace}};
}

}  // namespace ulrich
