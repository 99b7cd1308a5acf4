#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "hitchin2/universe.hpp"

namespace hitchin2 {

using Exponents = std::vector<uint32_t>;

// graded lexicographic: higher total degree first, ties broken by the
// earlier variable carrying the larger exponent.
int graded_lex_compare(const Exponents& a, const Exponents& b);

struct Term {
  Exponents mono;
  Rational coeff;
};

// Sparse multivariate polynomial over Q in a fixed variable universe.
// Terms are kept sorted in descending graded-lex order with no zero
// coefficients, so equality is structural.
class PolyExpr {
 public:
  PolyExpr() = default;

  static PolyExpr zero(UniversePtr u);
  static PolyExpr constant(UniversePtr u, Rational c);
  static PolyExpr variable(UniversePtr u, const std::string& name);
  static PolyExpr variable(UniversePtr u, size_t index);
  static PolyExpr monomial(UniversePtr u, Exponents e, Rational c);
  static PolyExpr from_terms(UniversePtr u, std::vector<Term> terms);

  const UniversePtr& universe() const { return universe_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree_of(terms_[0].mono) == 0);
  }
  Rational constant_value() const;

  size_t total_degree() const;
  uint32_t degree_in(size_t var) const;
  bool depends_on(size_t var) const;

  const Term& leading_term() const;
  const Rational& leading_coeff() const { return leading_term().coeff; }

  PolyExpr operator-() const;
  PolyExpr operator+(const PolyExpr& rhs) const;
  PolyExpr operator-(const PolyExpr& rhs) const;
  PolyExpr operator*(const PolyExpr& rhs) const;
  PolyExpr& operator+=(const PolyExpr& rhs) { return *this = *this + rhs; }
  PolyExpr& operator-=(const PolyExpr& rhs) { return *this = *this - rhs; }
  PolyExpr& operator*=(const PolyExpr& rhs) { return *this = *this * rhs; }

  PolyExpr scaled(const Rational& c) const;
  PolyExpr term_mul(const Exponents& mono, const Rational& c) const;
  PolyExpr pow(unsigned e) const;

  PolyExpr derivative(size_t var) const;
  PolyExpr derivative(const std::string& var) const;

  // coefficient of var^k, as a polynomial with var eliminated (exponent 0)
  PolyExpr coefficient_of(size_t var, uint32_t k) const;

  bool operator==(const PolyExpr& rhs) const;
  bool operator!=(const PolyExpr& rhs) const { return !(*this == rhs); }

  static size_t total_degree_of(const Exponents& e);

 private:
  void normalize();

  UniversePtr universe_;
  std::vector<Term> terms_;
};

// quotient of an exact division; throws division_error on nonzero remainder
PolyExpr exact_div(const PolyExpr& f, const PolyExpr& d);
std::optional<PolyExpr> try_exact_div(const PolyExpr& f, const PolyExpr& d);

// primitive gcd with positive leading coefficient; gcd(0,0) = 0
PolyExpr poly_gcd(const PolyExpr& a, const PolyExpr& b);

// content/primitive normalization over Q: c * p with p having coprime
// integer coefficients and positive leading coefficient
std::pair<Rational, PolyExpr> content_and_primitive(const PolyExpr& f);

// Generic evaluation of a polynomial in an arbitrary commutative ring R.
// Ops must provide: zero(), from_rational(Rational), add(R,R), mul(R,R).
template <class R, class Ops>
R eval_poly(const PolyExpr& f, const std::vector<R>& values, const Ops& ops) {
  if (f.universe() && values.size() != f.universe()->size())
    throw universe_error("evaluation values do not match universe size");
  const size_t n = values.size();
  std::vector<uint32_t> maxexp(n, 0);
  for (const auto& t : f.terms())
    for (size_t i = 0; i < n; ++i) maxexp[i] = std::max(maxexp[i], t.mono[i]);
  // per-variable power tables
  std::vector<std::vector<R>> pows(n);
  for (size_t i = 0; i < n; ++i) {
    if (maxexp[i] == 0) continue;
    pows[i].reserve(maxexp[i]);
    pows[i].push_back(values[i]);
    for (uint32_t k = 1; k < maxexp[i]; ++k)
      pows[i].push_back(ops.mul(pows[i].back(), values[i]));
  }
  R acc = ops.zero();
  for (const auto& t : f.terms()) {
    R term = ops.from_rational(t.coeff);
    for (size_t i = 0; i < n; ++i)
      if (t.mono[i] > 0) term = ops.mul(term, pows[i][t.mono[i] - 1]);
    acc = ops.add(acc, term);
  }
  return acc;
}

struct RationalOps {
  Rational zero() const { return Rational(0); }
  Rational from_rational(const Rational& q) const { return q; }
  Rational add(const Rational& a, const Rational& b) const { return a + b; }
  Rational mul(const Rational& a, const Rational& b) const { return a * b; }
};

// full numeric evaluation
Rational eval_rational(const PolyExpr& f, const std::vector<Rational>& values);

}  // namespace hitchin2
