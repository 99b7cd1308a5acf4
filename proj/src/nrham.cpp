#include "hitchin2/nrham.hpp"

#include "hitchin2/table2_data.hpp"

namespace hitchin2 {

const std::array<std::array<PolyExpr, 3>, 3>& classify_jacobian_numerators() {
  static const auto nums = [] {
    const UniversePtr u = chart_universe();
    const auto& v = classify_polys();
    std::array<std::array<PolyExpr, 3>, 3> out = {
        {{PolyExpr::zero(u), PolyExpr::zero(u), PolyExpr::zero(u)},
         {PolyExpr::zero(u), PolyExpr::zero(u), PolyExpr::zero(u)},
         {PolyExpr::zero(u), PolyExpr::zero(u), PolyExpr::zero(u)}}};
    const size_t vars[3] = {u->index_of("R"), u->index_of("S"), u->index_of("T")};
    for (int i = 0; i < 3; ++i)
      for (int k = 0; k < 3; ++k)
        out[i][k] = v[i].derivative(vars[k]) * v[3] - v[i] * v[3].derivative(vars[k]);
    return out;
  }();
  return nums;
}

MatRat classify_affine_jacobian(const ChartPoint& p, const CurveParams& params) {
  const UniversePtr& u = params.universe();
  std::vector<RatExpr> values = {params.r, params.s, params.t, p.R, p.S, p.T};
  RatOps ops{u};
  RatExpr v3 = eval_poly<RatExpr>(classify_polys()[3], values, ops);
  if (v3.is_zero())
    throw pole_error("affine chart condition violated: v3 vanishes at the point");
  RatExpr v3sq = v3 * v3;
  MatRat J(3, 3, RatExpr::zero(u));
  const auto& nums = classify_jacobian_numerators();
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k)
      J(i, k) = eval_poly<RatExpr>(nums[i][k], values, ops) / v3sq;
  return J;
}

VChartCotangent pushforward_to_v(const CotangentPoint& q, const CurveParams& params) {
  ChartPoint p{q.R, q.S, q.T};
  ProjPoint4 v = classify(p, params);
  MatRat J = classify_affine_jacobian(p, params);
  // c = J^T mu  =>  mu = (J^T)^{-1} c
  MatRat JTinv = J.transposed().inverse();
  std::array<RatExpr, 3> c = {q.cr, q.cs, q.ct};
  std::array<RatExpr, 3> mu = {RatExpr::zero(params.universe()),
                               RatExpr::zero(params.universe()),
                               RatExpr::zero(params.universe())};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) mu[i] += JTinv(i, k) * c[k];
  return VChartCotangent{v, mu};
}

NRCotangent embed_v_cotangent(const VChartCotangent& q, const SqrtRingPtr& ring) {
  NRCotangent out;
  out.chart = Chart::V;
  for (int i = 0; i < 4; ++i)
    out.base[i] = SqrtExtElem::from_scalar(ring, q.base.x[i]);
  for (int i = 0; i < 3; ++i)
    out.covector[i] = SqrtExtElem::from_scalar(ring, q.mu[i]);
  return out;
}

namespace {

// Moebius Jacobian of the affine transition along u = A v:
// K(i,j) = (A_ij u3 - u_i A_3j) * v3 / u3^2
MatExt transition_jacobian(const MatExt& A, const std::array<SqrtExtElem, 4>& from,
                           const std::array<SqrtExtElem, 4>& to) {
  const SqrtRingPtr& ring = to[0].ring();
  SqrtExtElem u3inv = to[3].inverse();
  SqrtExtElem u3inv2 = u3inv * u3inv;
  MatExt K(3, 3, SqrtExtElem::zero(ring));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      K(i, j) = (A(i, j) * to[3] - to[i] * A(3, j)) * from[3] * u3inv2;
  return K;
}

}  // namespace

NRCotangent covector_change(const NRCotangent& q, Chart target,
                            const CurveParams& params, const MatExt& M) {
  (void)params;
  if (q.chart == target) return q;
  const SqrtRingPtr& ring = q.base[0].ring();
  if (q.base[3].is_zero())
    throw pole_error("affine chart condition violated: last coordinate is zero");

  const MatExt A = (target == Chart::U) ? M : M.inverse();
  std::array<SqrtExtElem, 4> to = {SqrtExtElem::zero(ring), SqrtExtElem::zero(ring),
                                   SqrtExtElem::zero(ring), SqrtExtElem::zero(ring)};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) to[i] += A(i, j) * q.base[j];
  if (to[3].is_zero())
    throw pole_error("target chart condition violated: last coordinate vanishes");

  // mu = K^T eta with K the Jacobian of the forward affine transition; here
  // we transport q.covector forward: eta_target = (K^T)^{-1} covector
  MatExt K = transition_jacobian(A, q.base, to);
  MatExt KTinv = K.transposed().inverse();
  std::array<SqrtExtElem, 3> cov = {SqrtExtElem::zero(ring), SqrtExtElem::zero(ring),
                                    SqrtExtElem::zero(ring)};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) cov[i] += KTinv(i, k) * q.covector[k];
  return NRCotangent{target, to, cov};
}

std::vector<ChartCotangent> covector_pullback_to_chart(const ProjPoint4& v,
                                                       const std::array<RatExpr, 3>& mu,
                                                       const CurveParams& params) {
  FiberResult fr = fiber(v, params);
  const auto& nums = classify_jacobian_numerators();
  std::vector<ChartCotangent> out;
  for (const auto& p : fr.points) {
    const SqrtRingPtr& ring = p.R.ring();
    auto sc = [&](const RatExpr& e) { return SqrtExtElem::from_scalar(ring, e); };
    std::vector<SqrtExtElem> values = {sc(params.r), sc(params.s), sc(params.t),
                                       p.R, p.S, p.T};
    ExtOps ops{ring};
    SqrtExtElem v3 = eval_poly<SqrtExtElem>(classify_polys()[3], values, ops);
    if (v3.is_zero())
      throw pole_error("chart preimage lies outside the affine chart (v3 = 0)");
    SqrtExtElem v3inv2 = (v3 * v3).inverse();
    // c_k = sum_i mu_i J(i,k)
    ChartCotangent cc{ChartPointExt{p.R, p.S, p.T},
                      {SqrtExtElem::zero(ring), SqrtExtElem::zero(ring),
                       SqrtExtElem::zero(ring)}};
    for (int k = 0; k < 3; ++k) {
      SqrtExtElem acc = SqrtExtElem::zero(ring);
      for (int i = 0; i < 3; ++i)
        acc += sc(mu[i]) * eval_poly<SqrtExtElem>(nums[i][k], values, ops);
      cc.covector[k] = acc * v3inv2;
    }
    out.push_back(std::move(cc));
  }
  return out;
}

std::array<SqrtExtElem, 3> hamiltonians_rst_ext(const ChartCotangent& q,
                                                const CurveParams& params) {
  const SqrtRingPtr& ring = q.base.R.ring();
  auto sc = [&](const RatExpr& e) { return SqrtExtElem::from_scalar(ring, e); };
  std::vector<SqrtExtElem> values = {sc(params.r), sc(params.s), sc(params.t),
                                     q.base.R,     q.base.S,     q.base.T,
                                     q.covector[0], q.covector[1], q.covector[2]};
  ExtOps ops{ring};
  const auto& polys = table1_polys();
  return {eval_poly<SqrtExtElem>(polys[0], values, ops),
          eval_poly<SqrtExtElem>(polys[1], values, ops),
          eval_poly<SqrtExtElem>(polys[2], values, ops)};
}

namespace {

std::array<PolyExpr, 3> build_derived() {
  const UniversePtr u = table2_universe();
  auto build = [&](const table2::TermData* data, size_t count) {
    std::vector<Term> terms;
    terms.reserve(count);
    for (size_t k = 0; k < count; ++k) {
      Exponents e(data[k].exps.begin(), data[k].exps.end());
      terms.push_back({std::move(e), rat(data[k].num, data[k].den)});
    }
    return PolyExpr::from_terms(u, std::move(terms));
  };
  return {build(table2::kDerivedH0, table2::kDerivedH0Count),
          build(table2::kDerivedH1, table2::kDerivedH1Count),
          build(table2::kDerivedH2, table2::kDerivedH2Count)};
}

std::array<PolyExpr, 3> build_transcribed() {
  const UniversePtr u = table2_universe();
  CurveParams p = CurveParams::symbolic(u);
  const RatExpr& r = p.r;
  const RatExpr& s = p.s;
  const RatExpr& t = p.t;
  RatExpr u0 = RatExpr::variable(u, "u0"), u1 = RatExpr::variable(u, "u1");
  RatExpr u2 = RatExpr::variable(u, "u2"), u3 = RatExpr::variable(u, "u3");
  RatExpr e0 = RatExpr::variable(u, "eta0"), e1 = RatExpr::variable(u, "eta1");
  RatExpr e2 = RatExpr::variable(u, "eta2");
  auto C = [&](long n) { return RatExpr::constant(u, rat(n)); };
  RatExpr eu = e0 * u0 + e1 * u1 + e2 * u2;

  RatExpr P0 =
      r * s * t * (e0 * (u0 * u0 - u3 * u3) + e1 * (u0 * u1 + u2 * u3) +
                   e2 * (u0 * u2 + u1 * u3)).pow(2)
      - s * t * (e0 * (u0 * u1 - u2 * u3) + e1 * (u1 * u1 + u3 * u3) +
                 e2 * (u0 * u3 + u1 * u2)).pow(2)
      + C(4) * r * s * (e0 * u0 + e1 * u1).pow(2) * u3 * u3
      - r * t * (e0 * (u0 * u0 + u3 * u3) + e1 * (u0 * u1 + u2 * u3) +
                 e2 * (u0 * u2 - u1 * u3)).pow(2);

  RatExpr sq = u0 * u0 + u1 * u1 + u2 * u2 + u3 * u3;
  RatExpr P1 =
      t * sq * ((e0 * e0 + e1 * e1 + e2 * e2) * u3 * u3 + eu * eu)
      + s * t * (u0 * u0 - u1 * u1 + u2 * u2 - u3 * u3) *
            ((e0 * e0 - e1 * e1 + e2 * e2) * u3 * u3 - eu * eu)
      + C(4) * r * (u0 * u2 - u1 * u3) * u3 * (e0 * e2 * u3 + eu * e1)
      + C(4) * s * r * (u0 * u2 + u1 * u3) * u3 * (e0 * e2 * u3 - eu * e1)
      + C(4) * s * (u0 * u3 + u1 * u2) * u3 * (e1 * e2 * u3 - eu * e0)
      + C(4) * r * t * (u0 * u1 + u2 * u3) * u3 * (e0 * e1 * u3 - eu * e2);

  RatExpr P2 =
      s * (e0 * (u0 * u2 + u1 * u3) + e1 * (u0 * u3 + u1 * u2) +
           e2 * (u2 * u2 - u3 * u3)).pow(2)
      - (e0 * (u0 * u2 - u1 * u3) + e1 * (u0 * u3 + u1 * u2) +
         e2 * (u2 * u2 + u3 * u3)).pow(2)
      - t * (e0 * (u0 * u1 + u3 * u3) - e2 * (u0 * u3 - u1 * u2) +
             e1 * (u2 * u2 + u3 * u3)).pow(2)
      + C(4) * r * (e1 * u1 + e2 * u2).pow(2) * u3 * u3;

  return {P0.num(), P1.num(), P2.num()};
}

}  // namespace

const std::array<PolyExpr, 3>& table2_polys(Table2Source source) {
  static const std::array<PolyExpr, 3> derived = build_derived();
  static const std::array<PolyExpr, 3> transcribed = build_transcribed();
  return source == Table2Source::Derived ? derived : transcribed;
}

PolyExpr table2_term_diff(int i) {
  if (i < 0 || i > 2) throw argument_error("hamiltonian index must be 0..2");
  return table2_polys(Table2Source::Transcribed)[i] -
         table2_polys(Table2Source::Derived)[i];
}

std::array<SqrtExtElem, 3> hamiltonians_u(const NRCotangent& q,
                                          const CurveParams& params,
                                          Table2Source source) {
  if (q.chart != Chart::U)
    throw argument_error("hamiltonians_u expects a u-chart cotangent point");
  const SqrtRingPtr& ring = q.base[0].ring();
  if (q.base[3].is_zero())
    throw pole_error("affine chart condition violated: u3 = 0");
  auto sc = [&](const RatExpr& e) { return SqrtExtElem::from_scalar(ring, e); };
  std::vector<SqrtExtElem> values = {sc(params.r),   sc(params.s),   sc(params.t),
                                     q.base[0],      q.base[1],      q.base[2],
                                     q.base[3],      q.covector[0],  q.covector[1],
                                     q.covector[2]};
  ExtOps ops{ring};
  SqrtExtElem u3_4 = q.base[3].pow(4);
  SqrtExtElem denom_inv = (u3_4 + u3_4 + u3_4 + u3_4).inverse();  // (4 u3^4)^-1
  const auto& polys = table2_polys(source);
  std::array<SqrtExtElem, 3> out = {SqrtExtElem::zero(ring), SqrtExtElem::zero(ring),
                                    SqrtExtElem::zero(ring)};
  for (int i = 0; i < 3; ++i)
    out[i] = eval_poly<SqrtExtElem>(polys[i], values, ops) * denom_inv;
  return out;
}

HamiltonianTriple hamiltonians_v_oracle(const VChartCotangent& q,
                                        const CurveParams& params) {
  auto pulls = covector_pullback_to_chart(q.base, q.mu, params);
  if (pulls.empty()) throw argument_error("no chart preimage for the oracle path");
  std::array<SqrtExtElem, 3> first = hamiltonians_rst_ext(pulls[0], params);
  for (size_t k = 1; k < pulls.size(); ++k) {
    auto other = hamiltonians_rst_ext(pulls[k], params);
    for (int i = 0; i < 3; ++i)
      if (!(first[i] == other[i]))
        throw error("oracle path is preimage-dependent (transport inconsistency)");
  }
  for (int i = 0; i < 3; ++i)
    if (!first[i].is_scalar())
      throw error("oracle Hamiltonians failed to collapse to the base field");
  return HamiltonianTriple{first[0].scalar_part(), first[1].scalar_part(),
                           first[2].scalar_part()};
}

std::array<RatExpr, 6> vgp_hamiltonians(const HamiltonianTriple& h,
                                        const CurveParams& params) {
  const UniversePtr& u = params.universe();
  const RatExpr& r = params.r;
  const RatExpr& s = params.s;
  const RatExpr& t = params.t;
  RatExpr one = RatExpr::constant(u, Rational(1));
  RatExpr four = RatExpr::constant(u, Rational(4));
  auto hx = [&](const RatExpr& x) { return h.h2 * x * x + h.h1 * x + h.h0; };
  auto guarded = [&](const RatExpr& num, const RatExpr& den, const char* which) {
    if (den.is_zero())
      throw pole_error(std::string("degenerate parameters: denominator of ") +
                       which + " vanishes");
    return num / den;
  };
  std::array<RatExpr, 6> H = {
      guarded(four * h.h0, r * s * t, "H1"),
      guarded(-four * hx(t), t * (t - one) * (t - r) * (t - s), "H2"),
      guarded(four * hx(one), (r - one) * (s - one) * (t - one), "H3"),
      guarded(four * hx(s), s * (s - one) * (s - r) * (s - t), "H4"),
      guarded(four * hx(r), r * (r - one) * (r - s) * (r - t), "H5"),
      RatExpr::zero(u)};
  return H;
}

const std::array<RatExpr, 6>& vgp_symbolic() {
  static const std::array<RatExpr, 6> H = [] {
    const UniversePtr u = vgp_universe();
    CurveParams p = CurveParams::symbolic(u);
    HamiltonianTriple h{RatExpr::variable(u, "h0"), RatExpr::variable(u, "h1"),
                        RatExpr::variable(u, "h2")};
    return vgp_hamiltonians(h, p);
  }();
  return H;
}

HamiltonianTriple vgp_interpolate(const std::array<RatExpr, 6>& H,
                                  const CurveParams& params) {
  // h(0), h(1), h(r) from H1, H3, H5; then Lagrange through x = 0, 1, r
  const UniversePtr& u = params.universe();
  const RatExpr& r = params.r;
  const RatExpr& s = params.s;
  const RatExpr& t = params.t;
  RatExpr one = RatExpr::constant(u, Rational(1));
  RatExpr quarter = RatExpr::constant(u, rat(1, 4));
  RatExpr h_at_0 = quarter * H[0] * (r * s * t);
  RatExpr h_at_1 = quarter * H[2] * ((r - one) * (s - one) * (t - one));
  RatExpr h_at_r = quarter * H[4] * (r * (r - one) * (r - s) * (r - t));
  // h2 x^2 + h1 x + h0 through the three values
  RatExpr h0 = h_at_0;
  RatExpr h2 = ((h_at_r - h_at_0) / r - (h_at_1 - h_at_0)) / (r - one);
  RatExpr h1 = h_at_1 - h_at_0 - h2;
  return HamiltonianTriple{h0, h1, h2};
}

}  // namespace hitchin2
