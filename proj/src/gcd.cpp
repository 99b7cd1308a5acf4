#include <algorithm>
#include <map>

#include "hitchin2/poly.hpp"

namespace hitchin2 {

std::pair<Rational, PolyExpr> content_and_primitive(const PolyExpr& f) {
  if (f.is_zero()) return {Rational(0), f};
  // common scale making all coefficients coprime integers, positive lead
  mpz_class num_gcd = 0;
  mpz_class den_lcm = 1;
  for (const auto& t : f.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den().get_mpz_t());
  }
  Rational content(num_gcd, den_lcm);
  content.canonicalize();
  if (sgn(f.leading_coeff()) < 0) content = -content;
  return {content, f.scaled(Rational(1) / content)};
}

namespace {

// dense view in one variable with polynomial coefficients
struct UniView {
  size_t var;
  std::vector<PolyExpr> coeff;  // index = exponent of var

  uint32_t degree() const { return coeff.empty() ? 0 : uint32_t(coeff.size() - 1); }
  bool is_zero() const { return coeff.empty(); }
  const PolyExpr& lead() const { return coeff.back(); }

  void trim() {
    while (!coeff.empty() && coeff.back().is_zero()) coeff.pop_back();
  }
};

UniView to_uni(const PolyExpr& f, size_t var) {
  UniView v;
  v.var = var;
  v.coeff.assign(f.degree_in(var) + 1, PolyExpr::zero(f.universe()));
  for (uint32_t k = 0; k <= f.degree_in(var); ++k) v.coeff[k] = f.coefficient_of(var, k);
  v.trim();
  return v;
}

PolyExpr from_uni(const UniView& v, const UniversePtr& u) {
  PolyExpr acc = PolyExpr::zero(u);
  Exponents shift(u->size(), 0);
  for (size_t k = 0; k < v.coeff.size(); ++k) {
    shift[v.var] = uint32_t(k);
    acc += v.coeff[k].term_mul(shift, Rational(1));
  }
  return acc;
}

UniView scale_uni(const UniView& a, const PolyExpr& c) {
  UniView out;
  out.var = a.var;
  out.coeff.reserve(a.coeff.size());
  for (const auto& p : a.coeff) out.coeff.push_back(p * c);
  out.trim();
  return out;
}

UniView sub_uni(const UniView& a, const UniView& b) {
  UniView out;
  out.var = a.var;
  const size_t n = std::max(a.coeff.size(), b.coeff.size());
  for (size_t k = 0; k < n; ++k) {
    PolyExpr ak = k < a.coeff.size() ? a.coeff[k]
                                     : PolyExpr::zero(b.coeff[0].universe());
    if (k < b.coeff.size()) ak -= b.coeff[k];
    out.coeff.push_back(std::move(ak));
  }
  out.trim();
  return out;
}

// pseudo-remainder of a by b in the main variable
UniView pseudo_rem(UniView a, const UniView& b) {
  const PolyExpr& lb = b.lead();
  while (!a.is_zero() && a.degree() >= b.degree()) {
    uint32_t shift = a.degree() - b.degree();
    const PolyExpr la = a.lead();
    // a <- lb * a - la * x^shift * b
    UniView scaled_a = scale_uni(a, lb);
    UniView sb;
    sb.var = b.var;
    sb.coeff.assign(shift, PolyExpr::zero(la.universe()));
    for (const auto& c : b.coeff) sb.coeff.push_back(c * la);
    a = sub_uni(scaled_a, sb);
    if (!a.is_zero() && a.degree() == scaled_a.degree() && a.degree() >= b.degree() &&
        a.degree() == sb.degree()) {
      // defensive: the leading terms must have cancelled
    }
  }
  return a;
}

PolyExpr gcd_list(const std::vector<PolyExpr>& polys) {
  PolyExpr g = PolyExpr::zero(polys.front().universe());
  for (const auto& p : polys) {
    g = poly_gcd(g, p);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

}  // namespace

PolyExpr poly_gcd(const PolyExpr& a, const PolyExpr& b) {
  require_same_universe(a.universe(), b.universe());
  const UniversePtr& u = a.universe();
  if (a.is_zero()) return b.is_zero() ? b : content_and_primitive(b).second;
  if (b.is_zero()) return content_and_primitive(a).second;
  if (a.is_constant() || b.is_constant())
    return PolyExpr::constant(u, Rational(1));

  // main variable: one appearing in both, smallest combined degree
  size_t var = u->size();
  uint64_t best = ~0ull;
  for (size_t i = 0; i < u->size(); ++i) {
    if (!a.depends_on(i) || !b.depends_on(i)) continue;
    uint64_t cost = uint64_t(a.degree_in(i)) + b.degree_in(i);
    if (cost < best) {
      best = cost;
      var = i;
    }
  }
  if (var == u->size()) {
    // disjoint supports: over Q the only common divisors are units
    return PolyExpr::constant(u, Rational(1));
  }

  UniView fa = to_uni(a, var);
  UniView fb = to_uni(b, var);
  PolyExpr cont_a = gcd_list(fa.coeff);
  PolyExpr cont_b = gcd_list(fb.coeff);
  PolyExpr cont = poly_gcd(cont_a, cont_b);

  UniView pa, pb;
  pa.var = pb.var = var;
  for (const auto& c : fa.coeff) pa.coeff.push_back(exact_div(c, cont_a));
  for (const auto& c : fb.coeff) pb.coeff.push_back(exact_div(c, cont_b));

  if (pa.degree() < pb.degree()) std::swap(pa, pb);
  while (!pb.is_zero()) {
    UniView r = pseudo_rem(pa, pb);
    pa = std::move(pb);
    if (r.is_zero()) {
      pb = std::move(r);
    } else {
      PolyExpr rc = gcd_list(r.coeff);
      for (auto& c : r.coeff) c = exact_div(c, rc);
      pb = std::move(r);
    }
  }
  PolyExpr g = from_uni(pa, u);
  g = content_and_primitive(g).second;
  PolyExpr result = g * cont;
  return content_and_primitive(result).second;
}

}  // namespace hitchin2
