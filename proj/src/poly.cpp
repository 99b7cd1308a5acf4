#include "hitchin2/poly.hpp"

#include <algorithm>

namespace hitchin2 {

size_t PolyExpr::total_degree_of(const Exponents& e) {
  size_t d = 0;
  for (uint32_t k : e) d += k;
  return d;
}

int graded_lex_compare(const Exponents& a, const Exponents& b) {
  const size_t da = PolyExpr::total_degree_of(a);
  const size_t db = PolyExpr::total_degree_of(b);
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  return 0;
}

PolyExpr PolyExpr::zero(UniversePtr u) {
  PolyExpr p;
  p.universe_ = std::move(u);
  return p;
}

PolyExpr PolyExpr::constant(UniversePtr u, Rational c) {
  PolyExpr p;
  p.universe_ = std::move(u);
  if (c != 0) p.terms_.push_back({Exponents(p.universe_->size(), 0), std::move(c)});
  return p;
}

PolyExpr PolyExpr::variable(UniversePtr u, const std::string& name) {
  size_t idx = u->index_of(name);
  return variable(std::move(u), idx);
}

PolyExpr PolyExpr::variable(UniversePtr u, size_t index) {
  PolyExpr p;
  p.universe_ = std::move(u);
  Exponents e(p.universe_->size(), 0);
  e.at(index) = 1;
  p.terms_.push_back({std::move(e), Rational(1)});
  return p;
}

PolyExpr PolyExpr::monomial(UniversePtr u, Exponents e, Rational c) {
  PolyExpr p;
  p.universe_ = std::move(u);
  if (e.size() != p.universe_->size())
    throw universe_error("monomial exponent length mismatch");
  if (c != 0) p.terms_.push_back({std::move(e), std::move(c)});
  return p;
}

PolyExpr PolyExpr::from_terms(UniversePtr u, std::vector<Term> terms) {
  PolyExpr p;
  p.universe_ = std::move(u);
  for (const auto& t : terms)
    if (t.mono.size() != p.universe_->size())
      throw universe_error("term exponent length mismatch");
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void PolyExpr::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    return graded_lex_compare(a.mono, b.mono) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff += t.coeff;
      if (out.back().coeff == 0) out.pop_back();
    } else if (t.coeff != 0) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

Rational PolyExpr::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw error("polynomial is not constant");
  return terms_[0].coeff;
}

size_t PolyExpr::total_degree() const {
  size_t d = 0;
  for (const auto& t : terms_) d = std::max(d, total_degree_of(t.mono));
  return d;
}

uint32_t PolyExpr::degree_in(size_t var) const {
  uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.at(var));
  return d;
}

bool PolyExpr::depends_on(size_t var) const {
  for (const auto& t : terms_)
    if (t.mono.at(var) > 0) return true;
  return false;
}

const Term& PolyExpr::leading_term() const {
  if (terms_.empty()) throw error("leading term of zero polynomial");
  return terms_.front();
}

PolyExpr PolyExpr::operator-() const {
  PolyExpr p(*this);
  for (auto& t : p.terms_) t.coeff = -t.coeff;
  return p;
}

PolyExpr PolyExpr::operator+(const PolyExpr& rhs) const {
  require_same_universe(universe_, rhs.universe_);
  PolyExpr out;
  out.universe_ = universe_;
  out.terms_.reserve(terms_.size() + rhs.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < rhs.terms_.size()) {
    int c = graded_lex_compare(terms_[i].mono, rhs.terms_[j].mono);
    if (c > 0) {
      out.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      out.terms_.push_back(rhs.terms_[j++]);
    } else {
      Rational sum = terms_[i].coeff + rhs.terms_[j].coeff;
      if (sum != 0) out.terms_.push_back({terms_[i].mono, std::move(sum)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.terms_.push_back(terms_[i]);
  for (; j < rhs.terms_.size(); ++j) out.terms_.push_back(rhs.terms_[j]);
  return out;
}

PolyExpr PolyExpr::operator-(const PolyExpr& rhs) const { return *this + (-rhs); }

PolyExpr PolyExpr::operator*(const PolyExpr& rhs) const {
  require_same_universe(universe_, rhs.universe_);
  PolyExpr out;
  out.universe_ = universe_;
  if (terms_.empty() || rhs.terms_.empty()) return out;
  const size_t n = universe_->size();
  out.terms_.reserve(terms_.size() * rhs.terms_.size());
  for (const auto& a : terms_) {
    for (const auto& b : rhs.terms_) {
      Exponents e(n);
      for (size_t k = 0; k < n; ++k) e[k] = a.mono[k] + b.mono[k];
      out.terms_.push_back({std::move(e), a.coeff * b.coeff});
    }
  }
  out.normalize();
  return out;
}

PolyExpr PolyExpr::scaled(const Rational& c) const {
  if (c == 0) return zero(universe_);
  PolyExpr p(*this);
  for (auto& t : p.terms_) t.coeff *= c;
  return p;
}

PolyExpr PolyExpr::term_mul(const Exponents& mono, const Rational& c) const {
  if (c == 0) return zero(universe_);
  PolyExpr p(*this);
  for (auto& t : p.terms_) {
    t.coeff *= c;
    for (size_t k = 0; k < mono.size(); ++k) t.mono[k] += mono[k];
  }
  return p;
}

PolyExpr PolyExpr::pow(unsigned e) const {
  PolyExpr acc = constant(universe_, Rational(1));
  PolyExpr base = *this;
  while (e) {
    if (e & 1u) acc = acc * base;
    base = (e >>= 1u) ? base * base : base;
  }
  return acc;
}

PolyExpr PolyExpr::derivative(size_t var) const {
  PolyExpr out;
  out.universe_ = universe_;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (t.mono.at(var) == 0) continue;
    Term d = t;
    d.coeff *= Rational(d.mono[var]);
    d.mono[var] -= 1;
    out.terms_.push_back(std::move(d));
  }
  out.normalize();
  return out;
}

PolyExpr PolyExpr::derivative(const std::string& var) const {
  return derivative(universe_->index_of(var));
}

PolyExpr PolyExpr::coefficient_of(size_t var, uint32_t k) const {
  PolyExpr out;
  out.universe_ = universe_;
  for (const auto& t : terms_) {
    if (t.mono.at(var) != k) continue;
    Term c = t;
    c.mono[var] = 0;
    out.terms_.push_back(std::move(c));
  }
  out.normalize();
  return out;
}

bool PolyExpr::operator==(const PolyExpr& rhs) const {
  if (!same_universe(universe_, rhs.universe_)) return false;
  if (terms_.size() != rhs.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != rhs.terms_[i].mono || terms_[i].coeff != rhs.terms_[i].coeff)
      return false;
  return true;
}

static bool mono_divides(const Exponents& d, const Exponents& f) {
  for (size_t i = 0; i < d.size(); ++i)
    if (d[i] > f[i]) return false;
  return true;
}

std::optional<PolyExpr> try_exact_div(const PolyExpr& f, const PolyExpr& d) {
  require_same_universe(f.universe(), d.universe());
  if (d.is_zero()) throw division_error("division by zero polynomial");
  PolyExpr rem = f;
  std::vector<Term> qterms;
  const Term& lead_d = d.leading_term();
  while (!rem.is_zero()) {
    const Term& lt = rem.leading_term();
    if (!mono_divides(lead_d.mono, lt.mono)) return std::nullopt;
    Exponents q(lt.mono.size());
    for (size_t i = 0; i < q.size(); ++i) q[i] = lt.mono[i] - lead_d.mono[i];
    Rational qc = lt.coeff / lead_d.coeff;
    rem = rem - d.term_mul(q, qc);
    qterms.push_back({std::move(q), std::move(qc)});
  }
  return PolyExpr::from_terms(f.universe(), std::move(qterms));
}

PolyExpr exact_div(const PolyExpr& f, const PolyExpr& d) {
  auto q = try_exact_div(f, d);
  if (!q) throw division_error("polynomial division leaves a remainder");
  return *q;
}

Rational eval_rational(const PolyExpr& f, const std::vector<Rational>& values) {
  return eval_poly<Rational>(f, values, RationalOps{});
}

}  // namespace hitchin2
