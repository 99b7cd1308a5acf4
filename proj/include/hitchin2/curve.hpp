#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hitchin2/ratexpr.hpp"

namespace hitchin2 {

// The genus-2 curve y^2 = x(x-1)(x-r)(x-s)(x-t) with branch parameters
// either symbolic or exact rationals, and its six Weierstrass points.

struct CurveParams {
  RatExpr r, s, t;

  static CurveParams symbolic(const UniversePtr& u) {
    return {RatExpr::variable(u, "r"), RatExpr::variable(u, "s"),
            RatExpr::variable(u, "t")};
  }
  static CurveParams numeric(const UniversePtr& u, const Rational& r,
                             const Rational& s, const Rational& t) {
    return {RatExpr::constant(u, r), RatExpr::constant(u, s),
            RatExpr::constant(u, t)};
  }

  const UniversePtr& universe() const { return r.universe(); }
};

// numeric genericity: r,s,t pairwise distinct and distinct from 0,1
bool numeric_params_generic(const Rational& r, const Rational& s, const Rational& t);
void require_numeric_params_generic(const Rational& r, const Rational& s,
                                    const Rational& t);

// x(x-1)(x-r)(x-s)(x-t), expanded in the given variable
PolyExpr curve_poly(const CurveParams& p, const std::string& xvar = "x");

// elementary symmetric polynomials of (r,s,t)
RatExpr sigma(const CurveParams& p, int k);

enum class WLabel : uint8_t { W0 = 0, W1 = 1, Wr = 2, Ws = 3, Wt = 4, WInf = 5 };

const std::string& wlabel_name(WLabel w);
WLabel wlabel_from_name(const std::string& name);

// x-coordinate of a finite Weierstrass point
RatExpr wlabel_x(WLabel w, const CurveParams& p);

// 2-torsion element of the Jacobian, canonically an even subset of the
// five finite Weierstrass labels (a subset containing winf is replaced
// by its complement in all six).
class TorsionElement {
 public:
  TorsionElement() : mask_(0) {}

  static TorsionElement identity() { return TorsionElement(); }
  static TorsionElement from_labels(const std::vector<WLabel>& labels);
  // the divisor class [w_i] - [w_j]
  static TorsionElement from_pair(WLabel i, WLabel j);

  uint8_t mask() const { return mask_; }            // bits over W0..Wt
  bool is_identity() const { return mask_ == 0; }
  bool contains(WLabel w) const;

  TorsionElement operator+(const TorsionElement& rhs) const;
  bool operator==(const TorsionElement& rhs) const { return mask_ == rhs.mask_; }
  bool operator!=(const TorsionElement& rhs) const { return mask_ != rhs.mask_; }
  bool operator<(const TorsionElement& rhs) const { return mask_ < rhs.mask_; }

  // sorted label list, e.g. "{w0,w1}"
  std::string to_string() const;

  // expansion over the four generators [w_i]-[winf], i in {0,1,r,s},
  // in that canonical order
  std::vector<int> generator_decomposition() const;

 private:
  explicit TorsionElement(uint8_t mask) : mask_(mask) {}
  uint8_t mask_;  // even-popcount subsets of {w0,w1,wr,ws,wt}
};

// all 16 elements, identity first, ordered by canonical mask
std::vector<TorsionElement> torsion_group();

inline TorsionElement torsion_add(const TorsionElement& a, const TorsionElement& b) {
  return a + b;
}

}  // namespace hitchin2
