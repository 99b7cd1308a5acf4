#include "hitchin2/chart.hpp"

#include "hitchin2/format.hpp"

namespace hitchin2 {

const std::array<PolyExpr, 4>& classify_polys() {
  static const std::array<PolyExpr, 4> polys = [] {
    const UniversePtr u = chart_universe();
    CurveParams p = CurveParams::symbolic(u);
    const RatExpr& r = p.r;
    const RatExpr& s = p.s;
    const RatExpr& t = p.t;
    RatExpr R = RatExpr::variable(u, "R");
    RatExpr S = RatExpr::variable(u, "S");
    RatExpr T = RatExpr::variable(u, "T");
    auto C = [&](long n) { return RatExpr::constant(u, rat(n)); };
    RatExpr one = C(1);
    RatExpr r2 = r * r, s2 = s * s, t2 = t * t;

    RatExpr v0 = s2 * t2 * (r2 - one) * (s - t) * R
               - r2 * t2 * (s2 - one) * (r - t) * S
               + s2 * r2 * (t2 - one) * (r - s) * T
               + t2 * (t - one) * (r2 - s2) * R * S
               - s2 * (s - one) * (r2 - t2) * R * T
               + r2 * (r - one) * (s2 - t2) * S * T;
    RatExpr v1 = r * s * t *
        ((r - one) * (s - t) * R - (s - one) * (r - t) * S + (t - one) * (r - s) * T
         + (t - one) * (r - s) * R * S - (s - one) * (r - t) * R * T
         + (r - one) * (s - t) * S * T);
    RatExpr v2 = -s * t * (r2 - one) * (s - t) * R
               + r * t * (s2 - one) * (r - t) * S
               - r * s * (t2 - one) * (r - s) * T
               - t * (t - one) * (r2 - s2) * R * S
               + s * (s - one) * (r2 - t2) * R * T
               - r * (r - one) * (s2 - t2) * S * T;
    RatExpr v3 = s * t * (r - one) * (s - t) * R
               - r * t * (s - one) * (r - t) * S
               + s * r * (t - one) * (r - s) * T
               + t * (t - one) * (r - s) * R * S
               - s * (s - one) * (r - t) * R * T
               + r * (r - one) * (s - t) * S * T;
    return std::array<PolyExpr, 4>{v0.num(), v1.num(), v2.num(), v3.num()};
  }();
  return polys;
}

std::string gunning_name(GunningBundle g) {
  switch (g) {
    case GunningBundle::W1:
      return "E_[w1]";
    case GunningBundle::W0:
      return "E_[w0]";
    case GunningBundle::WInf:
      return "E_[winf]";
  }
  return "";
}

namespace {

template <class T, class Ops>
std::array<T, 4> classify_eval(const std::array<T, 3>& rst, const std::array<T, 3>& RST,
                               const Ops& ops) {
  const auto& polys = classify_polys();
  std::vector<T> values = {rst[0], rst[1], rst[2], RST[0], RST[1], RST[2]};
  std::array<T, 4> out = {ops.zero(), ops.zero(), ops.zero(), ops.zero()};
  for (int i = 0; i < 4; ++i) out[i] = eval_poly<T>(polys[i], values, ops);
  return out;
}

}  // namespace

ProjPoint4 classify(const ChartPoint& p, const CurveParams& params) {
  const UniversePtr& u = params.universe();
  auto v = classify_eval<RatExpr>({params.r, params.s, params.t}, {p.R, p.S, p.T},
                                  RatOps{u});
  bool all_zero = v[0].is_zero() && v[1].is_zero() && v[2].is_zero() && v[3].is_zero();
  if (all_zero) {
    auto is = [&](const RatExpr& a, const RatExpr& b) { return (a - b).is_zero(); };
    RatExpr zero = RatExpr::zero(u), one = RatExpr::constant(u, Rational(1));
    GunningBundle g;
    if (is(p.R, zero) && is(p.S, zero) && is(p.T, zero))
      g = GunningBundle::W1;
    else if (is(p.R, one) && is(p.S, one) && is(p.T, one))
      g = GunningBundle::W0;
    else if (is(p.R, params.r) && is(p.S, params.s) && is(p.T, params.t))
      g = GunningBundle::WInf;
    else
      throw argument_error("classifying map vanished off the known base points");
    throw indeterminacy_error(
        g, "classifying map indeterminate: point corresponds to the odd Gunning bundle " +
               gunning_name(g));
  }
  return ProjPoint4{Chart::V, v};
}

ProjPointExt4 classify(const ChartPointExt& p, const CurveParams& params) {
  const SqrtRingPtr& ring = p.R.ring();
  auto sc = [&](const RatExpr& e) { return SqrtExtElem::from_scalar(ring, e); };
  auto v = classify_eval<SqrtExtElem>({sc(params.r), sc(params.s), sc(params.t)},
                                      {p.R, p.S, p.T}, ExtOps{ring});
  return ProjPointExt4{Chart::V, v};
}

namespace {

struct FiberForms {
  RatExpr a, b, c, Rnum, Rden, Snum, Sden;
};

const FiberForms& fiber_forms() {
  static const FiberForms forms = [] {
    const UniversePtr u = fiber_universe();
    CurveParams p = CurveParams::symbolic(u);
    const RatExpr& r = p.r;
    const RatExpr& s = p.s;
    const RatExpr& t = p.t;
    RatExpr v0 = RatExpr::variable(u, "v0"), v1 = RatExpr::variable(u, "v1");
    RatExpr v2 = RatExpr::variable(u, "v2"), v3 = RatExpr::variable(u, "v3");
    RatExpr T = RatExpr::variable(u, "T");
    auto C = [&](long n) { return RatExpr::constant(u, rat(n)); };
    RatExpr one = C(1), two = C(2);
    RatExpr q2 = r * s + s * t + r * t;

    FiberForms f;
    f.a = (v1 + v2 * t + v3 * t * t) * (v0 + v1 - q2 * v3);
    f.b = -(one + t) * (v0 * v2 + v1 * v1 + t * v1 * v3)
        - two * (v0 * v1 + t * v0 * v3 + t * v1 * v2)
        + q2 * (t * v1 + v2 + t * v3) * v3
        + (r + s + r * s) * (v1 + t * t * v2 + t * t * v3) * v3;
    f.c = (v1 + v2 + v3) * (v0 + t * v1 - t * (r + s + r * s) * v3);

    f.Rnum = r * (t - one) * (v0 + r * v1 - r * (s + t + s * t) * v3) * T;
    f.Rden = t * (r - one) * (v0 + t * v1 - t * (r + s + r * s) * v3)
           - (r - t) * (v0 + v1 - q2 * v3) * T;
    f.Snum = s * (t - one) * (v0 + s * v1 - s * (r + t + r * t) * v3) * T;
    f.Sden = t * (s - one) * (v0 + t * v1 - t * (r + s + r * s) * v3)
           - (s - t) * (v0 + v1 - q2 * v3) * T;
    return f;
  }();
  return forms;
}

RatExpr eval_fiber_form(const RatExpr& form, const ProjPoint4& v,
                        const CurveParams& params, const RatExpr& T) {
  std::vector<RatExpr> values = {params.r, params.s, params.t,
                                 v.x[0], v.x[1], v.x[2], v.x[3], T};
  RatExpr den = eval_poly<RatExpr>(form.den(), values, RatOps{params.universe()});
  if (den.is_zero())
    throw pole_error("fiber formula denominator vanished: " + to_canonical(form.den()));
  return eval_poly<RatExpr>(form.num(), values, RatOps{params.universe()}) / den;
}

}  // namespace

const RatExpr& fiber_R_of_T() {
  static const RatExpr f = fiber_forms().Rnum / fiber_forms().Rden;
  return f;
}

const RatExpr& fiber_S_of_T() {
  static const RatExpr f = fiber_forms().Snum / fiber_forms().Sden;
  return f;
}

RatExpr FiberQuadratic::discriminant() const {
  return quadratic_discriminant(a, b, c);
}

FiberQuadratic fiber_quadratic(const ProjPoint4& v, const CurveParams& params) {
  if (v.chart != Chart::V) throw argument_error("fiber expects a v-chart point");
  const auto& f = fiber_forms();
  RatExpr dummyT = RatExpr::zero(params.universe());
  auto at = [&](const RatExpr& form) {
    std::vector<RatExpr> values = {params.r, params.s, params.t,
                                   v.x[0], v.x[1], v.x[2], v.x[3], dummyT};
    return eval_poly<RatExpr>(form.num(), values, RatOps{params.universe()});
  };
  return FiberQuadratic{at(f.a), at(f.b), at(f.c)};
}

FiberResult fiber(const ProjPoint4& v, const CurveParams& params) {
  const UniversePtr& u = params.universe();
  FiberQuadratic q = fiber_quadratic(v, params);
  const RatExpr& t = params.t;
  RatExpr two = RatExpr::constant(u, Rational(2));

  FiberResult out;
  out.discriminant = q.discriminant();

  auto push_point = [&](const SqrtExtElem& T, const SqrtRingPtr& ring) {
    // R(T), S(T) evaluated in the extension of the fiber root
    const auto& f = fiber_forms();
    auto sc = [&](const RatExpr& e) { return SqrtExtElem::from_scalar(ring, e); };
    std::vector<SqrtExtElem> values = {sc(params.r), sc(params.s), sc(params.t),
                                       sc(v.x[0]),  sc(v.x[1]),  sc(v.x[2]),
                                       sc(v.x[3]),  T};
    auto rational_form = [&](const RatExpr& num, const RatExpr& den) {
      SqrtExtElem d = eval_poly<SqrtExtElem>(den.num(), values, ExtOps{ring});
      if (d.is_zero())
        throw pole_error("fiber formula denominator vanished: " + to_canonical(den));
      SqrtExtElem n = eval_poly<SqrtExtElem>(num.num(), values, ExtOps{ring});
      return n * d.inverse();
    };
    out.points.push_back(ChartPointExt{rational_form(f.Rnum, f.Rden),
                                       rational_form(f.Snum, f.Sden), T});
  };

  if (q.a.is_zero()) {
    // degenerate: linear equation (b t) T + c t^2 = 0
    RatExpr bt = q.b * t;
    if (bt.is_zero())
      throw argument_error("fiber quadratic fully degenerate: no chart preimage");
    out.degenerate = true;
    SqrtRingPtr triv = SqrtExtRing::make(u, {});
    push_point(SqrtExtElem::from_scalar(triv, -(q.c * t * t) / bt), triv);
    return out;
  }

  // roots of a T^2 + (b t) T + (c t^2) = 0:
  // T = t * (-b +- sqrt(b^2-4ac)) / (2a)
  if (out.discriminant.is_constant()) {
    Rational disc = out.discriminant.constant_value();
    if (auto root = rational_sqrt(disc)) {
      SqrtRingPtr triv = SqrtExtRing::make(u, {});
      RatExpr sq = RatExpr::constant(u, *root);
      for (int sign : {+1, -1}) {
        RatExpr T = t * (-q.b + (sign > 0 ? sq : -sq)) / (two * q.a);
        push_point(SqrtExtElem::from_scalar(triv, T), triv);
        if (disc == 0) break;  // double root
      }
      return out;
    }
  }
  // adjoin the discriminant root
  SqrtRingPtr ring = SqrtExtRing::make(u, {{"sqrt_disc", out.discriminant}});
  SqrtExtElem delta = SqrtExtElem::generator(ring, "sqrt_disc");
  auto sc = [&](const RatExpr& e) { return SqrtExtElem::from_scalar(ring, e); };
  for (int sign : {+1, -1}) {
    SqrtExtElem num = sc(-q.b) + (sign > 0 ? delta : -delta);
    SqrtExtElem T = num.scaled(t / (two * q.a));
    push_point(T, ring);
  }
  return out;
}

std::vector<ChartPoint> rational_fiber_points(const FiberResult& fr,
                                              const UniversePtr& u) {
  std::vector<ChartPoint> out;
  for (const auto& p : fr.points) {
    if (!p.R.is_scalar() || !p.S.is_scalar() || !p.T.is_scalar()) continue;
    out.push_back(ChartPoint{p.R.scalar_part(), p.S.scalar_part(), p.T.scalar_part()});
  }
  return out;
}

RatExpr galois_lambda(const ChartPoint& p, const CurveParams& params) {
  const UniversePtr& u = params.universe();
  const RatExpr& r = params.r;
  const RatExpr& s = params.s;
  const RatExpr& t = params.t;
  RatExpr den = (s - t) * p.R - (r - t) * p.S + (r - s) * p.T;
  if (den.is_zero())
    throw pole_error("Galois involution pole: denominator of lambda vanishes: " +
                     to_canonical(den));
  (void)u;
  return (t * (r - s) * p.R * p.S - s * (r - t) * p.R * p.T +
          r * (s - t) * p.S * p.T) /
         den;
}

ChartPoint galois_involution(const ChartPoint& p, const CurveParams& params) {
  const UniversePtr& u = params.universe();
  const RatExpr& r = params.r;
  const RatExpr& s = params.s;
  const RatExpr& t = params.t;
  const RatExpr& R = p.R;
  const RatExpr& S = p.S;
  const RatExpr& T = p.T;
  RatExpr one = RatExpr::constant(u, Rational(1));

  auto guarded_div = [&](const RatExpr& num, const RatExpr& den,
                         const char* which) {
    if (den.is_zero())
      throw pole_error(std::string("Galois involution pole: denominator of ") +
                       which + " vanishes: " + to_canonical(den));
    return num / den;
  };

  RatExpr lam_den = (s - t) * R - (r - t) * S + (r - s) * T;
  RatExpr lam = guarded_div(t * (r - s) * R * S - s * (r - t) * R * T +
                                r * (s - t) * S * T,
                            lam_den, "lambda");
  RatExpr Rt = lam * guarded_div((s - t) + (t - one) * S - (s - one) * T,
                                 -t * (s - one) * S + s * (t - one) * T +
                                     (s - t) * S * T,
                                 "R~");
  RatExpr St = lam * guarded_div((r - t) + (t - one) * R - (r - one) * T,
                                 -t * (r - one) * R + r * (t - one) * T +
                                     (r - t) * R * T,
                                 "S~");
  RatExpr Tt = lam * guarded_div((r - s) + (s - one) * R - (r - one) * S,
                                 -s * (r - one) * R + r * (s - one) * S +
                                     (r - s) * R * S,
                                 "T~");
  return ChartPoint{Rt, St, Tt};
}

const PolyExpr& weddle_poly() {
  static const PolyExpr w = [] {
    const UniversePtr u = chart_universe();
    CurveParams p = CurveParams::symbolic(u);
    const RatExpr& r = p.r;
    const RatExpr& s = p.s;
    const RatExpr& t = p.t;
    RatExpr R = RatExpr::variable(u, "R");
    RatExpr S = RatExpr::variable(u, "S");
    RatExpr T = RatExpr::variable(u, "T");
    RatExpr one = RatExpr::constant(u, Rational(1));
    RatExpr w = ((s - t) * R + (t - r) * S + (r - s) * T) * R * S * T
        + t * ((r - one) * S - (s - one) * R) * R * S
        + r * ((s - one) * T - (t - one) * S) * S * T
        + s * ((t - one) * R - (r - one) * T) * R * T
        - t * (r - s) * R * S - r * (s - t) * S * T - s * (t - r) * R * T;
    return w.num();
  }();
  return w;
}

RatExpr weddle_quartic(const ChartPoint& p, const CurveParams& params) {
  std::vector<RatExpr> values = {params.r, params.s, params.t, p.R, p.S, p.T};
  return eval_poly<RatExpr>(weddle_poly(), values, RatOps{params.universe()});
}

}  // namespace hitchin2
