#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hitchin2/ratexpr.hpp"

namespace hitchin2 {

struct SqrtGen {
  std::string name;
  RatExpr square;  // defining relation g^2 = square (element of the base)
};

class SqrtExtRing;
using SqrtRingPtr = std::shared_ptr<const SqrtExtRing>;

// Ring extension of the rational-function base by formal square roots.
// Elements are kept in multilinear normal form: every generator exponent
// is 0 or 1, squares reduce via the defining relations.
class SqrtExtRing {
 public:
  // The only roots this artifact ever adjoins. sqrt_disc is the local
  // root used to represent quadratic fiber points exactly.
  static const std::vector<std::string>& allowed_names();

  static SqrtRingPtr make(UniversePtr base, std::vector<SqrtGen> gens);

  const UniversePtr& base() const { return base_; }
  const std::vector<SqrtGen>& gens() const { return gens_; }
  size_t gen_count() const { return gens_.size(); }
  size_t gen_index(const std::string& name) const;

  bool operator==(const SqrtExtRing& other) const;

 private:
  SqrtExtRing(UniversePtr base, std::vector<SqrtGen> gens)
      : base_(std::move(base)), gens_(std::move(gens)) {}

  UniversePtr base_;
  std::vector<SqrtGen> gens_;
};

inline bool same_ring(const SqrtRingPtr& a, const SqrtRingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

class SqrtExtElem {
 public:
  SqrtExtElem() = default;

  static SqrtExtElem zero(SqrtRingPtr ring);
  static SqrtExtElem one(SqrtRingPtr ring);
  static SqrtExtElem from_scalar(SqrtRingPtr ring, const RatExpr& c);
  static SqrtExtElem from_rational(SqrtRingPtr ring, const Rational& q);
  static SqrtExtElem generator(SqrtRingPtr ring, size_t index);
  static SqrtExtElem generator(SqrtRingPtr ring, const std::string& name);

  const SqrtRingPtr& ring() const { return ring_; }
  // mask -> coefficient; bit i set means generator i appears
  const std::map<uint32_t, RatExpr>& coefficients() const { return coef_; }

  bool is_zero() const { return coef_.empty(); }
  bool is_scalar() const;        // no generator part
  RatExpr scalar_part() const;   // coefficient of the empty mask
  RatExpr coefficient(uint32_t mask) const;

  SqrtExtElem operator-() const;
  SqrtExtElem operator+(const SqrtExtElem& rhs) const;
  SqrtExtElem operator-(const SqrtExtElem& rhs) const;
  SqrtExtElem operator*(const SqrtExtElem& rhs) const;
  SqrtExtElem& operator+=(const SqrtExtElem& r) { return *this = *this + r; }
  SqrtExtElem& operator-=(const SqrtExtElem& r) { return *this = *this - r; }
  SqrtExtElem& operator*=(const SqrtExtElem& r) { return *this = *this * r; }

  SqrtExtElem scaled(const RatExpr& c) const;
  SqrtExtElem pow(unsigned e) const;

  // multiplicative inverse via the conjugation tower; throws
  // division_error on zero or on a zero divisor (vanishing norm)
  SqrtExtElem inverse() const;
  SqrtExtElem operator/(const SqrtExtElem& rhs) const { return *this * rhs.inverse(); }

  // ring automorphism g_i -> -g_i
  SqrtExtElem conjugated(size_t gen_index) const;
  // flip every generator sign (the full branch swap)
  SqrtExtElem conjugated_all() const;

  // substitution on base variables; defining squares are substituted too,
  // producing an element of the new ring
  SqrtExtElem substituted(const std::map<std::string, RatExpr>& bindings) const;

  bool operator==(const SqrtExtElem& rhs) const;
  bool operator!=(const SqrtExtElem& rhs) const { return !(*this == rhs); }

 private:
  void prune();
  SqrtExtElem inverse_below(size_t level) const;

  SqrtRingPtr ring_;
  std::map<uint32_t, RatExpr> coef_;
};

struct ExtOps {
  SqrtRingPtr ring;
  SqrtExtElem zero() const { return SqrtExtElem::zero(ring); }
  SqrtExtElem from_rational(const Rational& q) const {
    return SqrtExtElem::from_rational(ring, q);
  }
  SqrtExtElem add(const SqrtExtElem& a, const SqrtExtElem& b) const { return a + b; }
  SqrtExtElem mul(const SqrtExtElem& a, const SqrtExtElem& b) const { return a * b; }
};

// evaluate a polynomial with all variables bound to ring elements
SqrtExtElem eval_in_ring(const PolyExpr& f, const SqrtRingPtr& ring,
                         const std::vector<SqrtExtElem>& values);
SqrtExtElem eval_in_ring(const RatExpr& f, const SqrtRingPtr& ring,
                         const std::vector<SqrtExtElem>& values);

}  // namespace hitchin2
