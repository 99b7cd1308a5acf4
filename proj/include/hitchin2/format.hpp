#pragma once

#include <string>

#include "hitchin2/matrix.hpp"

namespace hitchin2 {

// Canonical textual form used by the CLI and the golden files: monomials
// in descending graded-lex order, exact fractions, e.g. "3/2*x^2*r - 1".
// Stable across runs and releases.
std::string to_canonical(const PolyExpr& f);
std::string to_canonical(const RatExpr& f);
std::string to_canonical(const SqrtExtElem& e);
std::string to_canonical(const MatRat& m);
std::string to_canonical(const MatExt& m);

std::string to_latex(const PolyExpr& f);
std::string to_latex(const RatExpr& f);
std::string to_latex(const SqrtExtElem& e);
std::string to_latex(const MatRat& m);
std::string to_latex(const MatExt& m);

std::string latex_variable(const std::string& name);

}  // namespace hitchin2
