#include "hitchin2/higgs.hpp"

namespace hitchin2 {

MatRat HiggsField::residue_at(WLabel w, const UniversePtr& u) const {
  for (const auto& p : poles)
    if (p.at == w) return p.residue;
  return MatRat(2, 2, RatExpr::zero(u));
}

bool HiggsField::has_pole_at(WLabel w) const {
  for (const auto& p : poles)
    if (p.at == w) return true;
  return false;
}

HiggsField higgs_basis_field(BasisDirection which, const ChartPoint& p,
                             const CurveParams& params) {
  const UniversePtr& u = params.universe();
  RatExpr zero = RatExpr::zero(u);
  RatExpr one = RatExpr::constant(u, Rational(1));

  RatExpr Z = which == BasisDirection::R ? p.R
            : which == BasisDirection::S ? p.S
                                         : p.T;
  WLabel wz = which == BasisDirection::R ? WLabel::Wr
            : which == BasisDirection::S ? WLabel::Ws
                                         : WLabel::Wt;

  MatRat at0(2, 2, zero);
  at0(1, 0) = one - Z;
  MatRat at1(2, 2, zero);
  at1(0, 0) = Z;
  at1(0, 1) = -Z;
  at1(1, 0) = Z;
  at1(1, 1) = -Z;
  MatRat atz(2, 2, zero);
  atz(0, 0) = -Z;
  atz(0, 1) = Z * Z;
  atz(1, 0) = -one;
  atz(1, 1) = Z;

  HiggsField f;
  f.poles.push_back({WLabel::W0, RatExpr::constant(u, Rational(0)), at0});
  f.poles.push_back({WLabel::W1, one, at1});
  f.poles.push_back({wz, wlabel_x(wz, params), atz});
  return f;
}

HiggsField universal_higgs(const CotangentPoint& q, const CurveParams& params) {
  const UniversePtr& u = params.universe();
  ChartPoint base{q.R, q.S, q.T};
  struct Piece {
    BasisDirection dir;
    const RatExpr* c;
  };
  const Piece pieces[3] = {{BasisDirection::R, &q.cr},
                           {BasisDirection::S, &q.cs},
                           {BasisDirection::T, &q.ct}};
  HiggsField out;
  for (const auto& piece : pieces) {
    HiggsField f = higgs_basis_field(piece.dir, base, params);
    for (auto& pole : f.poles) {
      MatRat scaled = pole.residue.scaled(*piece.c);
      bool merged = false;
      for (auto& existing : out.poles) {
        if (existing.at == pole.at) {
          existing.residue = existing.residue + scaled;
          merged = true;
          break;
        }
      }
      if (!merged) out.poles.push_back({pole.at, pole.location, scaled});
    }
  }
  return out;
}

std::array<RatExpr, 2> parabolic_direction(WLabel w, const ChartPoint& p) {
  const UniversePtr& u = p.universe();
  RatExpr one = RatExpr::constant(u, Rational(1));
  switch (w) {
    case WLabel::W0:
      return {RatExpr::zero(u), one};
    case WLabel::W1:
      return {one, one};
    case WLabel::Wr:
      return {p.R, one};
    case WLabel::Ws:
      return {p.S, one};
    case WLabel::Wt:
      return {p.T, one};
    case WLabel::WInf:
      throw argument_error("the infinity fiber carries no chart parabolic direction");
  }
  throw argument_error("bad label");
}

bool residue_kernel_check(const HiggsField& field, WLabel w, const ChartPoint& p,
                          const CurveParams& params) {
  if (w == WLabel::WInf)
    throw argument_error("the infinity fiber carries no chart parabolic direction");
  MatRat res = field.residue_at(w, params.universe());
  auto dir = parabolic_direction(w, p);
  RatExpr r0 = res(0, 0) * dir[0] + res(0, 1) * dir[1];
  RatExpr r1 = res(1, 0) * dir[0] + res(1, 1) * dir[1];
  return r0.is_zero() && r1.is_zero();
}

int serre_pairing_sign() { return -1; }

RatExpr serre_pairing_raw(BasisDirection dir, const HiggsField& field,
                          const CurveParams& params) {
  // trace(phi01 . A/(x-p)) = A(1,0)/(x-p); the only residue in the disk
  // around the pole attached to the direction is A(1,0)
  WLabel w = dir == BasisDirection::R ? WLabel::Wr
           : dir == BasisDirection::S ? WLabel::Ws
                                      : WLabel::Wt;
  return field.residue_at(w, params.universe())(1, 0);
}

RatExpr serre_pairing(BasisDirection dir, const HiggsField& field,
                      const CurveParams& params) {
  return -serre_pairing_raw(dir, field, params);
}

const std::array<PolyExpr, 3>& table1_polys() {
  static const std::array<PolyExpr, 3> polys = [] {
    const UniversePtr u = cotangent_universe();
    CurveParams p = CurveParams::symbolic(u);
    const RatExpr& r = p.r;
    const RatExpr& s = p.s;
    const RatExpr& t = p.t;
    RatExpr R = RatExpr::variable(u, "R"), S = RatExpr::variable(u, "S"),
            T = RatExpr::variable(u, "T");
    RatExpr cr = RatExpr::variable(u, "c_r"), cs = RatExpr::variable(u, "c_s"),
            ct = RatExpr::variable(u, "c_t");
    RatExpr one = RatExpr::constant(u, Rational(1));
    auto C = [&](long n) { return RatExpr::constant(u, rat(n)); };

    RatExpr h0 = (cr * (R - one) + cs * (S - one) + ct * (T - one)) *
                 (cr * s * t * (R - r) * R + cs * r * t * (S - s) * S +
                  ct * r * s * (T - t) * T);

    RatExpr h1 =
        cr * (cr * (s + t) * (r + one) + cs * s * (t + one) + ct * t * (s + one)) *
            R * R -
        cr * cr * (t + s) * R.pow(3) +
        cs * (cs * (r + t) * (s + one) + cr * r * (t + one) + ct * t * (r + one)) *
            S * S -
        cs * cs * (t + r) * S.pow(3) +
        ct * (ct * (r + s) * (t + one) + cr * r * (s + one) + cs * s * (r + one)) *
            T * T -
        ct * ct * (r + s) * T.pow(3) -
        cr * cs * (t * (R - one + S - one) + r * (S - s) + s * (R - r)) * R * S -
        cr * ct * (s * (R - one + T - one) + r * (T - t) + t * (R - r)) * R * T -
        cs * ct * (r * (S - one + T - one) + s * (T - t) + t * (S - s)) * S * T -
        (ct * t * (r + s) + cr * r * (s + t) + cs * s * (r + t)) *
            (cr * R + cs * S + ct * T);
    (void)C;

    RatExpr h2 = (cr * (R - one) * R + cs * (S - one) * S + ct * (T - one) * T) *
                 (cr * (R - r) + cs * (S - s) + ct * (T - t));

    return std::array<PolyExpr, 3>{h0.num(), h1.num(), h2.num()};
  }();
  return polys;
}

HamiltonianTriple hamiltonians_rst(const CotangentPoint& q, const CurveParams& params) {
  const auto& polys = table1_polys();
  std::vector<RatExpr> values = {params.r, params.s, params.t, q.R, q.S, q.T,
                                 q.cr, q.cs, q.ct};
  RatOps ops{params.universe()};
  return HamiltonianTriple{eval_poly<RatExpr>(polys[0], values, ops),
                           eval_poly<RatExpr>(polys[1], values, ops),
                           eval_poly<RatExpr>(polys[2], values, ops)};
}

int hitchin_sign() { return -1; }

std::array<PolyExpr, 3> determinant_quadratic_raw() {
  const UniversePtr u = detmap_universe();
  CurveParams params = CurveParams::symbolic(u);
  CotangentPoint q = CotangentPoint::symbolic(u);
  const size_t xi = u->index_of("x");

  HiggsField theta = universal_higgs(q, params);
  PolyExpr F = curve_poly(params, "x");
  PolyExpr x = PolyExpr::variable(u, "x");

  // N := F(x) * theta is a polynomial matrix: entry_ij = sum over poles of
  // residue_ij * F/(x - pole)
  std::array<std::array<PolyExpr, 2>, 2> N = {
      {{PolyExpr::zero(u), PolyExpr::zero(u)},
       {PolyExpr::zero(u), PolyExpr::zero(u)}}};
  for (const auto& pole : theta.poles) {
    if (!pole.location.is_polynomial())
      throw error("pole location must be polynomial");
    PolyExpr quartic = exact_div(F, x - pole.location.num());
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const RatExpr& res = pole.residue(i, j);
        if (res.is_zero()) continue;
        if (!res.is_polynomial()) throw error("residue entries must be polynomial");
        N[i][j] += res.num() * quartic;
      }
  }
  // F^2 det(theta) = det(N), so F det(theta) = det(N)/F exactly
  PolyExpr detN = N[0][0] * N[1][1] - N[0][1] * N[1][0];
  PolyExpr quad = exact_div(detN, F);
  if (quad.degree_in(xi) > 2)
    throw error("determinant expansion has degree > 2 in x");
  return {quad.coefficient_of(xi, 0), quad.coefficient_of(xi, 1),
          quad.coefficient_of(xi, 2)};
}

std::array<PolyExpr, 3> hamiltonians_from_determinant() {
  auto raw = determinant_quadratic_raw();
  // restate over the cotangent universe with the recorded sign applied
  const UniversePtr u = cotangent_universe();
  std::array<PolyExpr, 3> out = {PolyExpr::zero(u), PolyExpr::zero(u),
                                 PolyExpr::zero(u)};
  const Rational sign(hitchin_sign());
  for (int k = 0; k < 3; ++k) {
    std::vector<Term> terms;
    for (const auto& t : raw[k].terms()) {
      Exponents e(t.mono.begin(), t.mono.begin() + 9);  // drop the x slot
      terms.push_back({std::move(e), t.coeff * sign});
    }
    out[k] = PolyExpr::from_terms(u, std::move(terms));
  }
  return out;
}

RatExpr poisson_bracket(const RatExpr& f, const RatExpr& g) {
  const UniversePtr& u = f.universe();
  require_same_universe(u, g.universe());
  static const std::pair<const char*, const char*> pairs[3] = {
      {"R", "c_r"}, {"S", "c_s"}, {"T", "c_t"}};
  RatExpr acc = RatExpr::zero(u);
  for (const auto& [pv, qv] : pairs) {
    size_t pi = u->index_of(pv);
    size_t qi = u->index_of(qv);
    acc += f.derivative(pi) * g.derivative(qi) - f.derivative(qi) * g.derivative(pi);
  }
  return acc;
}

}  // namespace hitchin2
