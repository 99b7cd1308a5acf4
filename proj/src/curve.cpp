#include "hitchin2/curve.hpp"

#include <algorithm>
#include <bit>

namespace hitchin2 {

bool numeric_params_generic(const Rational& r, const Rational& s, const Rational& t) {
  if (r == s || s == t || r == t) return false;
  for (const Rational* q : {&r, &s, &t})
    if (*q == 0 || *q == 1) return false;
  return true;
}

void require_numeric_params_generic(const Rational& r, const Rational& s,
                                    const Rational& t) {
  if (!numeric_params_generic(r, s, t))
    throw argument_error(
        "curve parameters must be pairwise distinct and distinct from 0 and 1");
}

PolyExpr curve_poly(const CurveParams& p, const std::string& xvar) {
  const UniversePtr& u = p.universe();
  RatExpr x = RatExpr::variable(u, xvar);
  RatExpr one = RatExpr::constant(u, Rational(1));
  RatExpr F = x * (x - one) * (x - p.r) * (x - p.s) * (x - p.t);
  if (!F.is_polynomial())
    throw argument_error("curve polynomial has a denominator");
  return F.num();
}

RatExpr sigma(const CurveParams& p, int k) {
  switch (k) {
    case 1:
      return p.r + p.s + p.t;
    case 2:
      return p.r * p.s + p.s * p.t + p.r * p.t;
    case 3:
      return p.r * p.s * p.t;
    default:
      throw argument_error("sigma index must be 1, 2 or 3");
  }
}

const std::string& wlabel_name(WLabel w) {
  static const std::string names[6] = {"w0", "w1", "wr", "ws", "wt", "winf"};
  return names[size_t(w)];
}

WLabel wlabel_from_name(const std::string& name) {
  for (int i = 0; i < 6; ++i)
    if (wlabel_name(WLabel(i)) == name) return WLabel(i);
  throw argument_error("unknown Weierstrass label '" + name + "'");
}

RatExpr wlabel_x(WLabel w, const CurveParams& p) {
  const UniversePtr& u = p.universe();
  switch (w) {
    case WLabel::W0:
      return RatExpr::constant(u, Rational(0));
    case WLabel::W1:
      return RatExpr::constant(u, Rational(1));
    case WLabel::Wr:
      return p.r;
    case WLabel::Ws:
      return p.s;
    case WLabel::Wt:
      return p.t;
    case WLabel::WInf:
      throw argument_error("winf has no affine x-coordinate");
  }
  throw argument_error("bad label");
}

TorsionElement TorsionElement::from_labels(const std::vector<WLabel>& labels) {
  uint8_t mask = 0;
  bool inf = false;
  for (WLabel w : labels) {
    if (w == WLabel::WInf)
      inf = !inf;
    else
      mask ^= uint8_t(1) << uint8_t(w);
  }
  // even total cardinality required
  const int finite = std::popcount(mask);
  if ((finite + (inf ? 1 : 0)) % 2 != 0)
    throw argument_error("torsion subset must have even cardinality");
  if (inf) mask = uint8_t(~mask & 0x1f);  // complement within all six labels
  return TorsionElement(mask);
}

TorsionElement TorsionElement::from_pair(WLabel i, WLabel j) {
  if (i == j) return TorsionElement();
  return from_labels({i, j});
}

bool TorsionElement::contains(WLabel w) const {
  if (w == WLabel::WInf) return false;  // canonical representative excludes winf
  return (mask_ >> uint8_t(w)) & 1;
}

TorsionElement TorsionElement::operator+(const TorsionElement& rhs) const {
  return TorsionElement(uint8_t(mask_ ^ rhs.mask_));
}

std::string TorsionElement::to_string() const {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 5; ++i) {
    if (!((mask_ >> i) & 1)) continue;
    if (!first) out += ",";
    out += wlabel_name(WLabel(i));
    first = false;
  }
  return out + "}";
}

std::vector<int> TorsionElement::generator_decomposition() const {
  // generators g_i = [w_i] - [winf] for i in {0,1,r,s}; canonically
  // g_i has mask = complement of {w_i}, and [w_t]-[winf] = g0+g1+gr+gs
  int toggles[4] = {0, 0, 0, 0};
  for (int i = 0; i < 5; ++i) {
    if (!((mask_ >> i) & 1)) continue;
    if (i < 4) {
      toggles[i] ^= 1;
    } else {
      for (int k = 0; k < 4; ++k) toggles[k] ^= 1;
    }
  }
  std::vector<int> out;
  for (int k = 0; k < 4; ++k)
    if (toggles[k]) out.push_back(k);
  return out;
}

std::vector<TorsionElement> torsion_group() {
  std::vector<TorsionElement> out;
  out.push_back(TorsionElement::identity());
  for (uint8_t m = 1; m < 32; ++m) {
    if (std::popcount(m) % 2 != 0) continue;
    std::vector<WLabel> labels;
    for (int i = 0; i < 5; ++i)
      if ((m >> i) & 1) labels.push_back(WLabel(i));
    out.push_back(TorsionElement::from_labels(labels));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace hitchin2
