#pragma once

#include <array>

#include "hitchin2/curve.hpp"
#include "hitchin2/matrix.hpp"
#include "hitchin2/universes.hpp"

namespace hitchin2 {

// The Narasimhan-Ramanan P^3 in both coordinate systems, the Kummer
// quartics, the 2-torsion action and the change of basis between them.

enum class Chart { V, U };

struct ProjPoint4 {
  Chart chart;
  std::array<RatExpr, 4> x;
};

struct ProjPointExt4 {
  Chart chart;
  std::array<SqrtExtElem, 4> x;
};

bool projectively_equal(const ProjPoint4& a, const ProjPoint4& b);
bool projectively_equal(const ProjPointExt4& a, const ProjPointExt4& b);
// scale so the first nonzero coordinate is 1
ProjPoint4 normalized(const ProjPoint4& p);

// ring Q(base)[y1, y2] with y_i^2 = F(x_i); base must name x1, x2
SqrtRingPtr surface_ring(const CurveParams& p, const std::string& x1 = "x1",
                         const std::string& x2 = "x2");

// point (x, y) on the curve; y is an element of the surface ring
struct SurfacePoint {
  RatExpr x;
  SqrtExtElem y;
};

// the generic points (x1, y1), (x2, y2) of the surface ring
std::pair<SurfacePoint, SurfacePoint> generic_surface_points(
    const CurveParams& p, const SqrtRingPtr& ring);
// finite Weierstrass point (x_w, 0)
SurfacePoint weierstrass_surface_point(WLabel w, const CurveParams& p,
                                       const SqrtRingPtr& ring);

struct ThetaBasis {
  SqrtExtElem one, sum, prod, diag;
};

// the four 2-theta basis functions at a pair of points; Diag has a pole
// along x1 = x2 and is reduced via the defining relations y_i^2 = F(x_i)
ThetaBasis theta_basis(const SurfacePoint& p1, const SurfacePoint& p2,
                       const CurveParams& params);

// Narasimhan-Ramanan point of O([Q1]+[Q2]-2[winf]) + its inverse:
// (-Diag : Prod : -Sum : 1) in the v-chart
ProjPointExt4 decomposable_point(const SurfacePoint& q1, const SurfacePoint& q2,
                                 const CurveParams& params);

// the Kummer quartic in v-coordinates, as a polynomial over nr_v_universe
PolyExpr kummer_v_poly();
RatExpr kummer_quartic_v(const ProjPoint4& p, const CurveParams& params);
SqrtExtElem kummer_quartic_v(const ProjPointExt4& p, const CurveParams& params);

// the Kummer quartic in u-coordinates (coefficients have denominators
// t(s-1) and t and (s-1)), over nr_u_universe
RatExpr kummer_u_quartic();
RatExpr kummer_quartic_u(const ProjPoint4& p, const CurveParams& params);
SqrtExtElem kummer_quartic_u(const ProjPointExt4& p, const CurveParams& params);

// displayed twist matrices in the v-chart for the four generators
// [w0]-[winf], [w1]-[winf], [wr]-[winf], [ws]-[winf]
MatRat torsion_generator_matrix_v(int gen, const CurveParams& params);
// projective class for an arbitrary torsion element: canonical product of
// the generator matrices
MatRat torsion_matrix_v(const TorsionElement& tau, const CurveParams& params);

// regular-representation matrices in the u-chart (signed permutations)
MatRat torsion_generator_matrix_u(int gen, const UniversePtr& universe);
MatRat torsion_matrix_u(const TorsionElement& tau, const UniversePtr& universe);

// orbit of the trivial bundle (1:0:0:0) under all sixteen twists
std::vector<ProjPoint4> torsion_orbit_singular_points(const CurveParams& params);

// ring Q(base)[omega0, omega1, omegar, omegas] with squares F'(0), -F'(1),
// F'(r), F'(s); built from the curve derivative, not transcribed
SqrtRingPtr omega_ring(const CurveParams& p);

// change of basis u = M v between the two coordinate systems.
// The printed form of the second factor has a corrupted entry (0,3); the
// value -(rs+st+rt) shipped here is forced by the intertwining relations
// M * M_tau = lambda_tau * Mtilde_tau * M, which the torsion suite checks.
MatExt nice_basis_matrix(const CurveParams& params, const SqrtRingPtr& omega);

// factors of the nice-basis matrix, for emission
MatExt nice_basis_left_factor(const CurveParams& params, const SqrtRingPtr& omega);
MatExt nice_basis_right_factor(const CurveParams& params, const SqrtRingPtr& omega);

}  // namespace hitchin2
