#include "hitchin2/ratexpr.hpp"

#include "hitchin2/format.hpp"

namespace hitchin2 {

RatExpr::RatExpr(PolyExpr num, PolyExpr den)
    : num_(std::move(num)), den_(std::move(den)) {
  require_same_universe(num_.universe(), den_.universe());
  if (den_.is_zero()) throw division_error("rational function with zero denominator");
  reduce();
}

RatExpr::RatExpr(PolyExpr num) : num_(std::move(num)) {
  den_ = PolyExpr::constant(num_.universe(), Rational(1));
}

bool RatExpr::is_polynomial() const {
  return den_.is_constant() && den_.constant_value() == 1;
}

void RatExpr::reduce() {
  if (num_.is_zero()) {
    den_ = PolyExpr::constant(num_.universe(), Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    PolyExpr g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_div(num_, g);
      den_ = exact_div(den_, g);
    }
  }
  const Rational lc = den_.leading_coeff();
  if (lc != 1) {
    Rational inv = Rational(1) / lc;
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

RatExpr RatExpr::operator-() const {
  RatExpr out(*this);
  out.num_ = -out.num_;
  return out;
}

RatExpr RatExpr::operator+(const RatExpr& rhs) const {
  if (den_ == rhs.den_) return RatExpr(num_ + rhs.num_, den_);
  PolyExpr g = poly_gcd(den_, rhs.den_);
  PolyExpr da = g.is_constant() ? den_ : exact_div(den_, g);
  PolyExpr db = g.is_constant() ? rhs.den_ : exact_div(rhs.den_, g);
  return RatExpr(num_ * db + rhs.num_ * da, den_ * db);
}

RatExpr RatExpr::operator-(const RatExpr& rhs) const { return *this + (-rhs); }

RatExpr RatExpr::operator*(const RatExpr& rhs) const {
  return RatExpr(num_ * rhs.num_, den_ * rhs.den_);
}

RatExpr RatExpr::operator/(const RatExpr& rhs) const {
  if (rhs.is_zero()) throw division_error("division by zero rational function");
  return RatExpr(num_ * rhs.den_, den_ * rhs.num_);
}

RatExpr RatExpr::pow(int e) const {
  if (e < 0) return RatExpr(den_, num_).pow(-e);
  return RatExpr(num_.pow(unsigned(e)), den_.pow(unsigned(e)));
}

RatExpr RatExpr::derivative(size_t var) const {
  // (n/d)' = (n'd - nd')/d^2
  PolyExpr dn = num_.derivative(var);
  PolyExpr dd = den_.derivative(var);
  return RatExpr(dn * den_ - num_ * dd, den_ * den_);
}

RatExpr RatExpr::derivative(const std::string& var) const {
  return derivative(universe()->index_of(var));
}

RatExpr quadratic_discriminant(const RatExpr& a, const RatExpr& b, const RatExpr& c) {
  return b * b - RatExpr::constant(a.universe(), Rational(4)) * a * c;
}

RatExpr substitute(const PolyExpr& f, const std::map<std::string, RatExpr>& bindings) {
  const UniversePtr& u = f.universe();
  std::vector<RatExpr> values;
  values.reserve(u->size());
  for (size_t i = 0; i < u->size(); ++i) {
    auto it = bindings.find(u->name(i));
    if (it == bindings.end()) {
      values.push_back(RatExpr::variable(u, u->name(i)));
    } else {
      require_same_universe(u, it->second.universe());
      values.push_back(it->second);
    }
  }
  return eval_poly<RatExpr>(f, values, RatOps{u});
}

RatExpr substitute(const RatExpr& f, const std::map<std::string, RatExpr>& bindings) {
  RatExpr num = substitute(f.num(), bindings);
  RatExpr den = substitute(f.den(), bindings);
  if (den.is_zero())
    throw pole_error("substitution makes denominator vanish: " +
                     to_canonical(f.den()));
  return num / den;
}

Rational eval_rational(const RatExpr& f, const std::vector<Rational>& values) {
  Rational den = eval_rational(f.den(), values);
  if (den == 0)
    throw pole_error("evaluation makes denominator vanish: " + to_canonical(f.den()));
  return eval_rational(f.num(), values) / den;
}

}  // namespace hitchin2
