#include "hitchin2/nrspace.hpp"

namespace hitchin2 {

namespace {

template <class T>
bool proj_equal(const std::array<T, 4>& a, const std::array<T, 4>& b) {
  int piv = -1;
  for (int i = 0; i < 4; ++i)
    if (!is_zero_value(b[i])) {
      piv = i;
      break;
    }
  if (piv < 0) {
    for (const auto& c : a)
      if (!is_zero_value(c)) return false;
    return true;
  }
  if (is_zero_value(a[piv])) return false;
  for (int i = 0; i < 4; ++i)
    if (!(a[i] * b[piv] == b[i] * a[piv])) return false;
  return true;
}

}  // namespace

bool projectively_equal(const ProjPoint4& a, const ProjPoint4& b) {
  return a.chart == b.chart && proj_equal(a.x, b.x);
}

bool projectively_equal(const ProjPointExt4& a, const ProjPointExt4& b) {
  return a.chart == b.chart && proj_equal(a.x, b.x);
}

ProjPoint4 normalized(const ProjPoint4& p) {
  for (const auto& c : p.x) {
    if (c.is_zero()) continue;
    ProjPoint4 out = p;
    for (auto& e : out.x) e = e / c;
    return out;
  }
  throw argument_error("projective point with all coordinates zero");
}

namespace {

// evaluates the derivative of F at the given x-value, in the params universe
RatExpr curve_derivative_at(const CurveParams& p, const RatExpr& at) {
  auto scratch = make_universe({"r", "s", "t", "x"});
  CurveParams ps = CurveParams::symbolic(scratch);
  PolyExpr dF = curve_poly(ps, "x").derivative("x");
  std::vector<RatExpr> values = {p.r, p.s, p.t, at};
  return eval_poly<RatExpr>(dF, values, RatOps{p.universe()});
}

}  // namespace

SqrtRingPtr surface_ring(const CurveParams& p, const std::string& x1,
                         const std::string& x2) {
  const UniversePtr& u = p.universe();
  auto scratch = make_universe({"r", "s", "t", "x"});
  PolyExpr F = curve_poly(CurveParams::symbolic(scratch), "x");
  auto eval_at = [&](const std::string& var) {
    std::vector<RatExpr> values = {p.r, p.s, p.t, RatExpr::variable(u, var)};
    return eval_poly<RatExpr>(F, values, RatOps{u});
  };
  return SqrtExtRing::make(u, {{"y1", eval_at(x1)}, {"y2", eval_at(x2)}});
}

std::pair<SurfacePoint, SurfacePoint> generic_surface_points(
    const CurveParams& p, const SqrtRingPtr& ring) {
  const UniversePtr& u = p.universe();
  SurfacePoint q1{RatExpr::variable(u, "x1"), SqrtExtElem::generator(ring, "y1")};
  SurfacePoint q2{RatExpr::variable(u, "x2"), SqrtExtElem::generator(ring, "y2")};
  return {q1, q2};
}

SurfacePoint weierstrass_surface_point(WLabel w, const CurveParams& p,
                                       const SqrtRingPtr& ring) {
  return {wlabel_x(w, p), SqrtExtElem::zero(ring)};
}

ThetaBasis theta_basis(const SurfacePoint& p1, const SurfacePoint& p2,
                       const CurveParams& params) {
  const SqrtRingPtr& ring = p1.y.ring();
  if (!same_ring(ring, p2.y.ring())) throw universe_error("surface ring mismatch");
  const UniversePtr& u = params.universe();
  RatExpr dx = p2.x - p1.x;
  if (dx.is_zero())
    throw pole_error("Diag has a pole along x1 = x2");
  RatExpr sum = p1.x + p2.x;
  RatExpr prod = p1.x * p2.x;
  RatExpr s1 = sigma(params, 1);
  RatExpr s2 = sigma(params, 2);
  RatExpr one = RatExpr::constant(u, Rational(1));

  SqrtExtElem dy = p2.y - p1.y;
  SqrtExtElem diag = (dy * dy).scaled(one / (dx * dx));
  RatExpr scal = -sum.pow(3) + (one + s1) * sum * sum + prod * sum - (s1 + s2) * sum;
  diag += SqrtExtElem::from_scalar(ring, scal);

  ThetaBasis tb{SqrtExtElem::one(ring), SqrtExtElem::from_scalar(ring, sum),
                SqrtExtElem::from_scalar(ring, prod), diag};
  return tb;
}

ProjPointExt4 decomposable_point(const SurfacePoint& q1, const SurfacePoint& q2,
                                 const CurveParams& params) {
  ThetaBasis tb = theta_basis(q1, q2, params);
  return ProjPointExt4{Chart::V,
                       {-tb.diag, tb.prod, -tb.sum, SqrtExtElem::one(tb.one.ring())}};
}

PolyExpr kummer_v_poly() {
  const UniversePtr u = nr_v_universe();
  CurveParams p = CurveParams::symbolic(u);
  RatExpr s1 = sigma(p, 1), s2 = sigma(p, 2), s3 = sigma(p, 3);
  RatExpr v0 = RatExpr::variable(u, "v0"), v1 = RatExpr::variable(u, "v1");
  RatExpr v2 = RatExpr::variable(u, "v2"), v3 = RatExpr::variable(u, "v3");
  auto C = [&](long n) { return RatExpr::constant(u, rat(n)); };
  RatExpr m = v0 * v2 - v1 * v1;
  RatExpr q = m * m
      - C(2) * (((s1 + s2) * v1 + (s2 + s3) * v2) * m
                + C(2) * (v0 + s1 * v1) * (v0 + v1) * v1
                + C(2) * (s2 * v1 + s3 * v2) * (v1 + v2) * v1) * v3
      + (C(-2) * s3 * m
         + ((s1 + s2).pow(2) * v1 + (s2 + s3).pow(2) * v2) * (v1 + v2)
         - (s1 + s3).pow(2) * v1 * v2
         + C(4) * ((s2 + s3) * v0 - s3 * v2) * v1) * v3.pow(2)
      - C(2) * s3 * ((s1 + s2) * v1 - (s2 + s3) * v2) * v3.pow(3)
      + s3 * s3 * v3.pow(4);
  if (!q.is_polynomial()) throw error("Kummer v-quartic is not polynomial");
  return q.num();
}

namespace {

template <class T, class Ops>
T eval_nr_poly(const PolyExpr& poly, const std::array<T, 4>& coords,
               const std::array<T, 3>& params, const Ops& ops) {
  std::vector<T> values;
  values.reserve(7);
  values.push_back(params[0]);
  values.push_back(params[1]);
  values.push_back(params[2]);
  for (const auto& c : coords) values.push_back(c);
  return eval_poly<T>(poly, values, ops);
}

}  // namespace

RatExpr kummer_quartic_v(const ProjPoint4& p, const CurveParams& params) {
  if (p.chart != Chart::V) throw argument_error("point is not in the v-chart");
  static const PolyExpr q = kummer_v_poly();
  return eval_nr_poly<RatExpr>(q, p.x, {params.r, params.s, params.t},
                               RatOps{params.universe()});
}

SqrtExtElem kummer_quartic_v(const ProjPointExt4& p, const CurveParams& params) {
  if (p.chart != Chart::V) throw argument_error("point is not in the v-chart");
  static const PolyExpr q = kummer_v_poly();
  const SqrtRingPtr& ring = p.x[0].ring();
  auto sc = [&](const RatExpr& e) { return SqrtExtElem::from_scalar(ring, e); };
  return eval_nr_poly<SqrtExtElem>(q, p.x, {sc(params.r), sc(params.s), sc(params.t)},
                                   ExtOps{ring});
}

RatExpr kummer_u_quartic() {
  const UniversePtr u = nr_u_universe();
  CurveParams p = CurveParams::symbolic(u);
  const RatExpr& r = p.r;
  const RatExpr& s = p.s;
  const RatExpr& t = p.t;
  RatExpr u0 = RatExpr::variable(u, "u0"), u1 = RatExpr::variable(u, "u1");
  RatExpr u2 = RatExpr::variable(u, "u2"), u3 = RatExpr::variable(u, "u3");
  auto C = [&](long n) { return RatExpr::constant(u, rat(n)); };
  RatExpr one = C(1);
  return u0.pow(4) + u1.pow(4) + u2.pow(4) + u3.pow(4)
      - C(8) * (r * s - r * t + r - s) / (t * (s - one)) * u0 * u1 * u2 * u3
      - C(2) * (s * t + t - C(2) * s) / (t * (s - one)) *
            (u0.pow(2) * u3.pow(2) + u1.pow(2) * u2.pow(2))
      - C(2) * (C(2) * r - t) / t * (u1.pow(2) * u3.pow(2) + u0.pow(2) * u2.pow(2))
      + C(2) * (C(2) * r - s - one) / (s - one) *
            (u2.pow(2) * u3.pow(2) + u0.pow(2) * u1.pow(2));
}

namespace {

void check_u_params(const CurveParams& params) {
  if (params.t.is_zero())
    throw pole_error("u-chart quartic undefined: t = 0 annihilates a denominator");
  RatExpr sm1 = params.s - RatExpr::constant(params.universe(), Rational(1));
  if (sm1.is_zero())
    throw pole_error("u-chart quartic undefined: s = 1 annihilates a denominator");
}

}  // namespace

RatExpr kummer_quartic_u(const ProjPoint4& p, const CurveParams& params) {
  if (p.chart != Chart::U) throw argument_error("point is not in the u-chart");
  check_u_params(params);
  static const RatExpr q = kummer_u_quartic();
  RatExpr den = eval_nr_poly<RatExpr>(q.den(), p.x, {params.r, params.s, params.t},
                                      RatOps{params.universe()});
  RatExpr num = eval_nr_poly<RatExpr>(q.num(), p.x, {params.r, params.s, params.t},
                                      RatOps{params.universe()});
  return num / den;
}

SqrtExtElem kummer_quartic_u(const ProjPointExt4& p, const CurveParams& params) {
  if (p.chart != Chart::U) throw argument_error("point is not in the u-chart");
  check_u_params(params);
  static const RatExpr q = kummer_u_quartic();
  const SqrtRingPtr& ring = p.x[0].ring();
  auto sc = [&](const RatExpr& e) { return SqrtExtElem::from_scalar(ring, e); };
  std::array<SqrtExtElem, 3> ps = {sc(params.r), sc(params.s), sc(params.t)};
  SqrtExtElem den = eval_nr_poly<SqrtExtElem>(q.den(), p.x, ps, ExtOps{ring});
  SqrtExtElem num = eval_nr_poly<SqrtExtElem>(q.num(), p.x, ps, ExtOps{ring});
  return num * den.inverse();
}

MatRat torsion_generator_matrix_v(int gen, const CurveParams& params) {
  const UniversePtr& u = params.universe();
  const RatExpr& r = params.r;
  const RatExpr& s = params.s;
  const RatExpr& t = params.t;
  auto C = [&](long n) { return RatExpr::constant(u, rat(n)); };
  RatExpr zero = C(0), one = C(1);
  MatRat m(4, 4, zero);
  switch (gen) {
    case 0: {
      RatExpr s2 = r * s + s * t + r * t;
      RatExpr s3 = r * s * t;
      m(0, 1) = s2 + s3; m(0, 2) = s3;
      m(1, 3) = s3;
      m(2, 0) = one; m(2, 3) = -(s2 + s3);
      m(3, 1) = one;
      return m;
    }
    case 1: {
      RatExpr a = r + s + t + r * s * t;
      RatExpr b = r * s + s * t + r * t;
      m(0, 0) = one; m(0, 1) = a; m(0, 2) = b;
      m(1, 0) = -one; m(1, 1) = -one; m(1, 3) = b;
      m(2, 0) = one; m(2, 2) = -one; m(2, 3) = -a;
      m(3, 1) = one; m(3, 2) = one; m(3, 3) = one;
      return m;
    }
    case 2: {
      RatExpr r2 = r * r;
      RatExpr p1 = r2 * (one + s + t) + s * t;
      RatExpr p2 = r2 * (s + t + s * t);
      m(0, 0) = r2; m(0, 1) = p1; m(0, 2) = p2;
      m(1, 0) = -r; m(1, 1) = -r2; m(1, 3) = p2;
      m(2, 0) = one; m(2, 2) = -r2; m(2, 3) = -p1;
      m(3, 1) = one; m(3, 2) = r; m(3, 3) = r2;
      return m;
    }
    case 3: {
      RatExpr ss = s * s;
      RatExpr p1 = ss * (one + r + t) + r * t;
      RatExpr p2 = ss * (r + t + r * t);
      m(0, 0) = ss; m(0, 1) = p1; m(0, 2) = p2;
      m(1, 0) = -s; m(1, 1) = -ss; m(1, 3) = p2;
      m(2, 0) = one; m(2, 2) = -ss; m(2, 3) = -p1;
      m(3, 1) = one; m(3, 2) = s; m(3, 3) = ss;
      return m;
    }
    default:
      throw argument_error("torsion generator index must be 0..3");
  }
}

MatRat torsion_matrix_v(const TorsionElement& tau, const CurveParams& params) {
  MatRat acc = MatRat::identity(4, RatExpr::zero(params.universe()));
  for (int g : tau.generator_decomposition())
    acc = acc * torsion_generator_matrix_v(g, params);
  return acc;
}

MatRat torsion_generator_matrix_u(int gen, const UniversePtr& universe) {
  auto C = [&](long n) { return RatExpr::constant(universe, rat(n)); };
  MatRat m(4, 4, C(0));
  static const int tables[4][4][4] = {
      {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}},
      {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}},
      {{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, 1}},
      {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, -1, 0}},
  };
  if (gen < 0 || gen > 3) throw argument_error("torsion generator index must be 0..3");
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (tables[gen][i][j]) m(i, j) = C(tables[gen][i][j]);
  return m;
}

MatRat torsion_matrix_u(const TorsionElement& tau, const UniversePtr& universe) {
  MatRat acc = MatRat::identity(4, RatExpr::zero(universe));
  for (int g : tau.generator_decomposition())
    acc = acc * torsion_generator_matrix_u(g, universe);
  return acc;
}

std::vector<ProjPoint4> torsion_orbit_singular_points(const CurveParams& params) {
  std::vector<ProjPoint4> out;
  for (const TorsionElement& tau : torsion_group()) {
    MatRat m = torsion_matrix_v(tau, params);
    // image of (1:0:0:0) is the first column
    out.push_back(ProjPoint4{Chart::V, {m(0, 0), m(1, 0), m(2, 0), m(3, 0)}});
  }
  return out;
}

SqrtRingPtr omega_ring(const CurveParams& p) {
  const UniversePtr& u = p.universe();
  auto C = [&](long n) { return RatExpr::constant(u, rat(n)); };
  return SqrtExtRing::make(
      u, {{"omega0", curve_derivative_at(p, C(0))},
          {"omega1", -curve_derivative_at(p, C(1))},
          {"omegar", curve_derivative_at(p, p.r)},
          {"omegas", curve_derivative_at(p, p.s)}});
}

MatExt nice_basis_left_factor(const CurveParams& params, const SqrtRingPtr& omega) {
  const UniversePtr& u = params.universe();
  const RatExpr& r = params.r;
  const RatExpr& s = params.s;
  const RatExpr& t = params.t;
  RatExpr one = RatExpr::constant(u, Rational(1));
  SqrtExtElem w0 = SqrtExtElem::generator(omega, "omega0");
  SqrtExtElem w1 = SqrtExtElem::generator(omega, "omega1");
  SqrtExtElem wr = SqrtExtElem::generator(omega, "omegar");
  SqrtExtElem ws = SqrtExtElem::generator(omega, "omegas");

  SqrtExtElem a = w1.scaled(r * s * t * (r - s)) + (wr * ws).scaled(t) -
                  ws.scaled(r * t * (r - one)) - (w1 * wr).scaled(s * t);
  SqrtExtElem b = wr.scaled(-(s * t * (s - one))) + (w1 * ws).scaled(r * t);
  SqrtExtElem c = (w0 * w1).scaled(t * (r - s)) - (w0 * ws).scaled(t * (r - one));
  SqrtExtElem d = w0.scaled(-(t * (r - one) * (s - one) * (r - s))) +
                  (w0 * wr).scaled(t * (s - one));

  MatExt m(4, 4, SqrtExtElem::zero(omega));
  m(0, 0) = a;  m(0, 1) = b;  m(0, 2) = c;  m(0, 3) = d;
  m(1, 0) = -b; m(1, 1) = a;  m(1, 2) = d;  m(1, 3) = -c;
  m(2, 0) = c;  m(2, 1) = d;  m(2, 2) = a;  m(2, 3) = b;
  m(3, 0) = d;  m(3, 1) = -c; m(3, 2) = -b; m(3, 3) = a;
  return m;
}

MatExt nice_basis_right_factor(const CurveParams& params, const SqrtRingPtr& omega) {
  SqrtExtElem zero = SqrtExtElem::zero(omega);
  SqrtExtElem one = SqrtExtElem::one(omega);
  SqrtExtElem w0 = SqrtExtElem::generator(omega, "omega0");
  SqrtExtElem w1 = SqrtExtElem::generator(omega, "omega1");
  MatExt m(4, 4, zero);
  m(0, 0) = one;
  m(0, 1) = one;
  m(0, 3) = SqrtExtElem::from_scalar(omega, -sigma(params, 2));
  m(1, 1) = w1;
  m(2, 1) = w0;
  m(2, 2) = w0;
  m(2, 3) = w0;
  m(3, 3) = w0 * w1;
  return m;
}

MatExt nice_basis_matrix(const CurveParams& params, const SqrtRingPtr& omega) {
  return nice_basis_left_factor(params, omega) *
         nice_basis_right_factor(params, omega);
}

}  // namespace hitchin2
