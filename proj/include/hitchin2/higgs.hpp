#pragma once

#include "hitchin2/chart.hpp"

namespace hitchin2 {

// Logarithmic sl2 Higgs fields on P^1 in the canonical chart: residue
// decomposition over the five finite branch points, the dual basis
// theta_r/theta_s/theta_t, the determinant map and the Table-1
// Hamiltonians with their Poisson structure.

struct CotangentPoint {
  RatExpr R, S, T, cr, cs, ct;
  const UniversePtr& universe() const { return R.universe(); }

  static CotangentPoint symbolic(const UniversePtr& u) {
    return {RatExpr::variable(u, "R"),   RatExpr::variable(u, "S"),
            RatExpr::variable(u, "T"),   RatExpr::variable(u, "c_r"),
            RatExpr::variable(u, "c_s"), RatExpr::variable(u, "c_t")};
  }
};

struct HiggsField {
  struct Pole {
    WLabel at;          // one of w0, w1, wr, ws, wt
    RatExpr location;   // the x-value of the pole
    MatRat residue;     // 2x2 residue matrix
  };
  std::vector<Pole> poles;

  // residue at a label; zero matrix if the field has no pole there
  MatRat residue_at(WLabel w, const UniversePtr& u) const;
  bool has_pole_at(WLabel w) const;
};

enum class BasisDirection { R, S, T };

// the displayed dual-basis fields theta_r, theta_s, theta_t
HiggsField higgs_basis_field(BasisDirection which, const ChartPoint& p,
                             const CurveParams& params);

// c_r theta_r + c_s theta_s + c_t theta_t; residues at shared poles summed
HiggsField universal_higgs(const CotangentPoint& q, const CurveParams& params);

// true iff the residue at the label kills the parabolic direction
// (0,1), (1,1), (R,1), (S,1), (T,1) at x = 0, 1, r, s, t
bool residue_kernel_check(const HiggsField& field, WLabel w, const ChartPoint& p,
                          const CurveParams& params);

// parabolic direction vector at a finite label
std::array<RatExpr, 2> parabolic_direction(WLabel w, const ChartPoint& p);

// Serre residue pairing of the tangent cocycle for d/dR, d/dS, d/dT with a
// field. The raw residue of trace(phi01 . theta) is negated once globally
// so that (d/dR, theta_r) = 1; the sign convention is recorded by
// serre_pairing_sign().
RatExpr serre_pairing(BasisDirection dir, const HiggsField& field,
                      const CurveParams& params);
int serre_pairing_sign();      // the recorded global sign (-1)
RatExpr serre_pairing_raw(BasisDirection dir, const HiggsField& field,
                          const CurveParams& params);

struct HamiltonianTriple {
  RatExpr h0, h1, h2;
};

// Table-1 Hamiltonians evaluated at a cotangent point
HamiltonianTriple hamiltonians_rst(const CotangentPoint& q, const CurveParams& params);

// the stored Table-1 polynomials over cotangent_universe
const std::array<PolyExpr, 3>& table1_polys();

// Hamiltonians derived from the universal family: expand
// F(x) * det(universal Higgs field) as a quadratic in x and apply the
// recorded global sign so the result matches the printed table
// convention. hitchin_sign() reports that sign (-1: the printed tables
// expand F(x) * trace(theta^2)/2 = -F(x) * det(theta)).
std::array<PolyExpr, 3> hamiltonians_from_determinant();
// the raw coefficients of F(x) * det(theta), before the sign normalization
std::array<PolyExpr, 3> determinant_quadratic_raw();
int hitchin_sign();

// Darboux bracket in (R,S,T; c_r,c_s,c_t):
// {f,g} = sum_i df/dp_i dg/dq_i - df/dq_i dg/dp_i with p = (R,S,T),
// q = (c_r,c_s,c_t)
RatExpr poisson_bracket(const RatExpr& f, const RatExpr& g);

}  // namespace hitchin2
