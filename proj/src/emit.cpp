#include "hitchin2/emit.hpp"

#include "hitchin2/format.hpp"
#include "json.hpp"

namespace hitchin2 {

EmitFormat emit_format_from_name(const std::string& name) {
  if (name == "canonical") return EmitFormat::Canonical;
  if (name == "latex") return EmitFormat::Latex;
  if (name == "json") return EmitFormat::Json;
  throw argument_error("unknown format '" + name + "' (canonical|latex|json)");
}

const std::vector<std::string>& emit_object_names() {
  static const std::vector<std::string> names = {
      "kummer-v",  "kummer-u",  "weddle",      "classify",
      "inverse",   "involution", "torsion-v",  "torsion-u",
      "nice-basis", "higgs-basis", "hamiltonians-rst", "hamiltonians-u", "vgp"};
  return names;
}

namespace {

struct Part {
  std::string name;
  std::string canonical;
  std::string latex;
};

template <class T>
Part make_part(const std::string& name, const T& value) {
  return Part{name, to_canonical(value), to_latex(value)};
}

std::vector<Part> object_parts(const std::string& object, Table2Source source) {
  std::vector<Part> parts;
  if (object == "kummer-v") {
    parts.push_back(make_part("kummer_v", kummer_v_poly()));
  } else if (object == "kummer-u") {
    parts.push_back(make_part("kummer_u", kummer_u_quartic()));
  } else if (object == "weddle") {
    parts.push_back(make_part("weddle", weddle_poly()));
  } else if (object == "classify") {
    const auto& v = classify_polys();
    for (int i = 0; i < 4; ++i)
      parts.push_back(make_part("v" + std::to_string(i), v[i]));
  } else if (object == "inverse") {
    const UniversePtr u = fiber_universe();
    CurveParams p = CurveParams::symbolic(u);
    ProjPoint4 vp{Chart::V,
                  {RatExpr::variable(u, "v0"), RatExpr::variable(u, "v1"),
                   RatExpr::variable(u, "v2"), RatExpr::variable(u, "v3")}};
    FiberQuadratic q = fiber_quadratic(vp, p);
    parts.push_back(make_part("a", q.a));
    parts.push_back(make_part("b", q.b));
    parts.push_back(make_part("c", q.c));
    parts.push_back(make_part("R_of_T", fiber_R_of_T()));
    parts.push_back(make_part("S_of_T", fiber_S_of_T()));
  } else if (object == "involution") {
    const UniversePtr u = chart_universe();
    CurveParams p = CurveParams::symbolic(u);
    ChartPoint pt{RatExpr::variable(u, "R"), RatExpr::variable(u, "S"),
                  RatExpr::variable(u, "T")};
    parts.push_back(make_part("lambda", galois_lambda(pt, p)));
    ChartPoint img = galois_involution(pt, p);
    parts.push_back(make_part("R_tilde", img.R));
    parts.push_back(make_part("S_tilde", img.S));
    parts.push_back(make_part("T_tilde", img.T));
  } else if (object == "torsion-v") {
    const UniversePtr u = params_universe();
    CurveParams p = CurveParams::symbolic(u);
    const char* names[4] = {"M_w0", "M_w1", "M_wr", "M_ws"};
    for (int g = 0; g < 4; ++g)
      parts.push_back(make_part(names[g], torsion_generator_matrix_v(g, p)));
  } else if (object == "torsion-u") {
    const UniversePtr u = params_universe();
    const char* names[4] = {"Mt_w0", "Mt_w1", "Mt_wr", "Mt_ws"};
    for (int g = 0; g < 4; ++g)
      parts.push_back(make_part(names[g], torsion_generator_matrix_u(g, u)));
  } else if (object == "nice-basis") {
    const UniversePtr u = params_universe();
    CurveParams p = CurveParams::symbolic(u);
    SqrtRingPtr omega = omega_ring(p);
    parts.push_back(make_part("left_factor", nice_basis_left_factor(p, omega)));
    parts.push_back(make_part("right_factor", nice_basis_right_factor(p, omega)));
    parts.push_back(make_part("M", nice_basis_matrix(p, omega)));
  } else if (object == "higgs-basis") {
    const UniversePtr u = chart_universe();
    CurveParams p = CurveParams::symbolic(u);
    ChartPoint pt{RatExpr::variable(u, "R"), RatExpr::variable(u, "S"),
                  RatExpr::variable(u, "T")};
    const struct {
      BasisDirection dir;
      const char* name;
    } basis[3] = {{BasisDirection::R, "theta_r"},
                  {BasisDirection::S, "theta_s"},
                  {BasisDirection::T, "theta_t"}};
    for (const auto& b : basis) {
      HiggsField f = higgs_basis_field(b.dir, pt, p);
      for (const auto& pole : f.poles)
        parts.push_back(make_part(
            std::string(b.name) + ".residue_at_" + wlabel_name(pole.at), pole.residue));
    }
  } else if (object == "hamiltonians-rst") {
    auto h = hamiltonians_from_determinant();
    for (int i = 0; i < 3; ++i)
      parts.push_back(make_part("h" + std::to_string(i), h[i]));
  } else if (object == "hamiltonians-u") {
    const auto& polys = table2_polys(source);
    for (int i = 0; i < 3; ++i)
      parts.push_back(
          make_part("4*u3^4*h" + std::to_string(i), polys[i]));
  } else if (object == "vgp") {
    const auto& H = vgp_symbolic();
    for (int i = 0; i < 6; ++i)
      parts.push_back(make_part("H" + std::to_string(i + 1), H[i]));
  } else {
    throw argument_error("unknown object '" + object + "'");
  }
  return parts;
}

}  // namespace

std::string emit_object(const std::string& object, EmitFormat format,
                        Table2Source source) {
  std::vector<Part> parts = object_parts(object, source);
  if (format == EmitFormat::Json) {
    nlohmann::ordered_json j;
    j["object"] = object;
    if (object == "hamiltonians-u")
      j["source"] = source == Table2Source::Derived ? "derived" : "table";
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& p : parts) arr.push_back({{"name", p.name}, {"value", p.canonical}});
    j["parts"] = std::move(arr);
    return j.dump(2) + "\n";
  }
  std::string out;
  for (const auto& p : parts) {
    out += p.name + " = ";
    out += (format == EmitFormat::Canonical) ? p.canonical : p.latex;
    out += "\n";
  }
  return out;
}

}  // namespace hitchin2
