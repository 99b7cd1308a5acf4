#include "hitchin2/format.hpp"

#include <sstream>

namespace hitchin2 {

namespace {

std::string monomial_text(const VarUniverse& u, const Exponents& e) {
  std::string out;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!out.empty()) out += "*";
    out += u.name(i);
    if (e[i] > 1) out += "^" + std::to_string(e[i]);
  }
  return out;
}

std::string term_text(const VarUniverse& u, const Term& t, bool leading) {
  const bool neg = sgn(t.coeff) < 0;
  Rational a = neg ? Rational(-t.coeff) : t.coeff;
  std::string mono = monomial_text(u, t.mono);
  std::string body;
  if (mono.empty())
    body = rat_to_string(a);
  else if (a == 1)
    body = mono;
  else
    body = rat_to_string(a) + "*" + mono;
  if (leading) return neg ? "-" + body : body;
  return (neg ? " - " : " + ") + body;
}

}  // namespace

std::string to_canonical(const PolyExpr& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool leading = true;
  for (const auto& t : f.terms()) {
    out += term_text(*f.universe(), t, leading);
    leading = false;
  }
  return out;
}

std::string to_canonical(const RatExpr& f) {
  if (f.is_polynomial()) return to_canonical(f.num());
  return "(" + to_canonical(f.num()) + ")/(" + to_canonical(f.den()) + ")";
}

std::string to_canonical(const SqrtExtElem& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [mask, c] : e.coefficients()) {
    if (!out.empty()) out += " + ";
    out += "(" + to_canonical(c) + ")";
    for (size_t i = 0; i < e.ring()->gen_count(); ++i)
      if (mask & (uint32_t(1) << i)) out += "*" + e.ring()->gens()[i].name;
  }
  return out;
}

template <class T>
static std::string matrix_canonical(const Mat<T>& m) {
  std::string out = "[";
  for (size_t i = 0; i < m.rows(); ++i) {
    out += i ? ", [" : "[";
    for (size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += to_canonical(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

std::string to_canonical(const MatRat& m) { return matrix_canonical(m); }
std::string to_canonical(const MatExt& m) { return matrix_canonical(m); }

std::string latex_variable(const std::string& name) {
  if (name == "eta0") return "\\eta_0";
  if (name == "eta1") return "\\eta_1";
  if (name == "eta2") return "\\eta_2";
  if (name == "mu0") return "\\mu_0";
  if (name == "mu1") return "\\mu_1";
  if (name == "mu2") return "\\mu_2";
  if (name == "omega0") return "\\omega_0";
  if (name == "omega1") return "\\omega_1";
  if (name == "omegar") return "\\omega_r";
  if (name == "omegas") return "\\omega_s";
  if (name == "sqrt_disc") return "\\delta";
  if (name.size() == 2 && (name[0] == 'u' || name[0] == 'v' ||
                           name[0] == 'x' || name[0] == 'y'))
    return std::string(1, name[0]) + "_" + name.substr(1);
  return name;  // r, s, t, x, R, S, T, c_r, c_s, c_t, h0..h2 as-is
}

namespace {

std::string latex_coeff(const Rational& a) {
  if (is_integer(a)) return a.get_str();
  return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

std::string latex_term(const VarUniverse& u, const Term& t, bool leading) {
  const bool neg = sgn(t.coeff) < 0;
  Rational a = neg ? Rational(-t.coeff) : t.coeff;
  std::string mono;
  for (size_t i = 0; i < t.mono.size(); ++i) {
    if (t.mono[i] == 0) continue;
    if (!mono.empty()) mono += " ";
    mono += latex_variable(u.name(i));
    if (t.mono[i] > 1) mono += "^{" + std::to_string(t.mono[i]) + "}";
  }
  std::string body;
  if (mono.empty())
    body = latex_coeff(a);
  else if (a == 1)
    body = mono;
  else
    body = latex_coeff(a) + " " + mono;
  if (leading) return neg ? "-" + body : body;
  return (neg ? " - " : " + ") + body;
}

}  // namespace

std::string to_latex(const PolyExpr& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool leading = true;
  for (const auto& t : f.terms()) {
    out += latex_term(*f.universe(), t, leading);
    leading = false;
  }
  return out;
}

std::string to_latex(const RatExpr& f) {
  if (f.is_polynomial()) return to_latex(f.num());
  return "\\frac{" + to_latex(f.num()) + "}{" + to_latex(f.den()) + "}";
}

std::string to_latex(const SqrtExtElem& e) {
  if (e.is_zero()) return "0";
  std::string out;
  for (const auto& [mask, c] : e.coefficients()) {
    if (!out.empty()) out += " + ";
    out += "\\left(" + to_latex(c) + "\\right)";
    for (size_t i = 0; i < e.ring()->gen_count(); ++i)
      if (mask & (uint32_t(1) << i))
        out += " " + latex_variable(e.ring()->gens()[i].name);
  }
  return out;
}

template <class T>
static std::string matrix_latex(const Mat<T>& m) {
  std::string out = "\\begin{pmatrix}";
  for (size_t i = 0; i < m.rows(); ++i) {
    if (i) out += " \\\\ ";
    for (size_t j = 0; j < m.cols(); ++j) {
      if (j) out += " & ";
      out += to_latex(m(i, j));
    }
  }
  return out + "\\end{pmatrix}";
}

std::string to_latex(const MatRat& m) { return matrix_latex(m); }
std::string to_latex(const MatExt& m) { return matrix_latex(m); }

}  // namespace hitchin2
