#pragma once

#include <map>
#include <string>

#include "hitchin2/poly.hpp"

namespace hitchin2 {

// Reduced rational function: gcd(num, den) = 1 and den monic in the
// canonical monomial order, so equal fractions compare structurally equal.
class RatExpr {
 public:
  RatExpr() = default;
  RatExpr(PolyExpr num, PolyExpr den);
  explicit RatExpr(PolyExpr num);

  static RatExpr zero(UniversePtr u) { return RatExpr(PolyExpr::zero(std::move(u))); }
  static RatExpr constant(UniversePtr u, Rational c) {
    return RatExpr(PolyExpr::constant(std::move(u), std::move(c)));
  }
  static RatExpr variable(UniversePtr u, const std::string& name) {
    return RatExpr(PolyExpr::variable(std::move(u), name));
  }

  const PolyExpr& num() const { return num_; }
  const PolyExpr& den() const { return den_; }
  const UniversePtr& universe() const { return num_.universe(); }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const;
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  Rational constant_value() const { return num_.constant_value() / den_.constant_value(); }

  RatExpr operator-() const;
  RatExpr operator+(const RatExpr& rhs) const;
  RatExpr operator-(const RatExpr& rhs) const;
  RatExpr operator*(const RatExpr& rhs) const;
  RatExpr operator/(const RatExpr& rhs) const;
  RatExpr& operator+=(const RatExpr& r) { return *this = *this + r; }
  RatExpr& operator-=(const RatExpr& r) { return *this = *this - r; }
  RatExpr& operator*=(const RatExpr& r) { return *this = *this * r; }
  RatExpr& operator/=(const RatExpr& r) { return *this = *this / r; }

  RatExpr pow(int e) const;
  RatExpr derivative(size_t var) const;
  RatExpr derivative(const std::string& var) const;

  bool operator==(const RatExpr& rhs) const {
    return num_ == rhs.num_ && den_ == rhs.den_;
  }
  bool operator!=(const RatExpr& rhs) const { return !(*this == rhs); }

 private:
  void reduce();

  PolyExpr num_;
  PolyExpr den_;
};

// discriminant b^2 - 4ac
RatExpr quadratic_discriminant(const RatExpr& a, const RatExpr& b, const RatExpr& c);

// Simultaneous substitution; unbound variables stay symbolic. Throws
// pole_error (naming the offending denominator) if a denominator vanishes.
RatExpr substitute(const RatExpr& f, const std::map<std::string, RatExpr>& bindings);
RatExpr substitute(const PolyExpr& f, const std::map<std::string, RatExpr>& bindings);

// full numeric evaluation; throws pole_error if the denominator vanishes
Rational eval_rational(const RatExpr& f, const std::vector<Rational>& values);

struct RatOps {
  UniversePtr universe;
  RatExpr zero() const { return RatExpr::zero(universe); }
  RatExpr from_rational(const Rational& q) const { return RatExpr::constant(universe, q); }
  RatExpr add(const RatExpr& a, const RatExpr& b) const { return a + b; }
  RatExpr mul(const RatExpr& a, const RatExpr& b) const { return a * b; }
};

}  // namespace hitchin2
