#pragma once

#include <optional>

#include "hitchin2/nrspace.hpp"

namespace hitchin2 {

// The canonical (R,S,T) chart of parabolic bundles, the classifying map
// to the v-coordinates, its two-valued inverse and the Galois involution.

struct ChartPoint {
  RatExpr R, S, T;
  const UniversePtr& universe() const { return R.universe(); }
};

// chart point with coordinates in a square-root extension (fiber output
// when the discriminant is not a perfect square)
struct ChartPointExt {
  SqrtExtElem R, S, T;
};

// the four classifying polynomials v_i(R,S,T) over chart_universe
const std::array<PolyExpr, 4>& classify_polys();

// Gunning bundle labels attached to the indeterminacy points
enum class GunningBundle { W1, W0, WInf };
std::string gunning_name(GunningBundle g);

class indeterminacy_error : public error {
 public:
  indeterminacy_error(GunningBundle which, const std::string& what)
      : error(what), which_(which) {}
  GunningBundle which() const { return which_; }

 private:
  GunningBundle which_;
};

// classifying map; throws indeterminacy_error at the three base points
ProjPoint4 classify(const ChartPoint& p, const CurveParams& params);
ProjPointExt4 classify(const ChartPointExt& p, const CurveParams& params);

// coefficients of the fiber quadratic a T^2 + (b t) T + (c t^2) = 0
struct FiberQuadratic {
  RatExpr a, b, c;
  RatExpr discriminant() const;  // b^2 - 4 a c
};
FiberQuadratic fiber_quadratic(const ProjPoint4& v, const CurveParams& params);

// R(T) and S(T) of the inverse map, as rational functions over fiber_universe
const RatExpr& fiber_R_of_T();
const RatExpr& fiber_S_of_T();

struct FiberResult {
  // both preimages; coordinates may live in a sqrt_disc extension
  std::vector<ChartPointExt> points;
  // true when the quadratic degenerated to a linear equation (a = 0)
  bool degenerate = false;
  // the discriminant b^2 - 4ac of the T-quadratic
  RatExpr discriminant;
};

// the up-to-two chart preimages of a v-chart point
FiberResult fiber(const ProjPoint4& v, const CurveParams& params);

// rational chart points from a fiber result; empty if the discriminant
// is not a perfect square
std::vector<ChartPoint> rational_fiber_points(const FiberResult& fr,
                                              const UniversePtr& u);

// the Galois involution of the 2:1 classifying cover, in the canonical chart
ChartPoint galois_involution(const ChartPoint& p, const CurveParams& params);
// its scalar prefactor lambda(R,S,T)
RatExpr galois_lambda(const ChartPoint& p, const CurveParams& params);

// the Weddle quartic over chart_universe
const PolyExpr& weddle_poly();
RatExpr weddle_quartic(const ChartPoint& p, const CurveParams& params);

}  // namespace hitchin2
