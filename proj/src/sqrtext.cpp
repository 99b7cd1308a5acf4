#include "hitchin2/sqrtext.hpp"

#include <algorithm>

namespace hitchin2 {

const std::vector<std::string>& SqrtExtRing::allowed_names() {
  static const std::vector<std::string> names = {
      "omega0", "omega1", "omegar", "omegas", "y1", "y2", "sqrt_disc"};
  return names;
}

SqrtRingPtr SqrtExtRing::make(UniversePtr base, std::vector<SqrtGen> gens) {
  if (gens.size() > 6) throw argument_error("too many square-root generators");
  const auto& allowed = allowed_names();
  for (const auto& g : gens) {
    if (std::find(allowed.begin(), allowed.end(), g.name) == allowed.end())
      throw argument_error("cannot adjoin square root '" + g.name +
                           "': not one of the named generators");
    require_same_universe(base, g.square.universe());
    if (g.square.is_zero())
      throw argument_error("square-root generator '" + g.name + "' of zero");
  }
  for (size_t i = 0; i < gens.size(); ++i)
    for (size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i].name == gens[j].name)
        throw argument_error("duplicate square-root generator '" + gens[i].name + "'");
  return SqrtRingPtr(new SqrtExtRing(std::move(base), std::move(gens)));
}

size_t SqrtExtRing::gen_index(const std::string& name) const {
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name == name) return i;
  throw argument_error("no square-root generator named '" + name + "'");
}

bool SqrtExtRing::operator==(const SqrtExtRing& other) const {
  if (!same_universe(base_, other.base_)) return false;
  if (gens_.size() != other.gens_.size()) return false;
  for (size_t i = 0; i < gens_.size(); ++i)
    if (gens_[i].name != other.gens_[i].name || gens_[i].square != other.gens_[i].square)
      return false;
  return true;
}

SqrtExtElem SqrtExtElem::zero(SqrtRingPtr ring) {
  SqrtExtElem e;
  e.ring_ = std::move(ring);
  return e;
}

SqrtExtElem SqrtExtElem::one(SqrtRingPtr ring) {
  return from_rational(std::move(ring), Rational(1));
}

SqrtExtElem SqrtExtElem::from_scalar(SqrtRingPtr ring, const RatExpr& c) {
  SqrtExtElem e;
  require_same_universe(ring->base(), c.universe());
  e.ring_ = std::move(ring);
  if (!c.is_zero()) e.coef_[0] = c;
  return e;
}

SqrtExtElem SqrtExtElem::from_rational(SqrtRingPtr ring, const Rational& q) {
  RatExpr c = RatExpr::constant(ring->base(), q);
  return from_scalar(std::move(ring), c);
}

SqrtExtElem SqrtExtElem::generator(SqrtRingPtr ring, size_t index) {
  if (index >= ring->gen_count()) throw argument_error("generator index out of range");
  SqrtExtElem e;
  e.coef_[uint32_t(1) << index] = RatExpr::constant(ring->base(), Rational(1));
  e.ring_ = std::move(ring);
  return e;
}

SqrtExtElem SqrtExtElem::generator(SqrtRingPtr ring, const std::string& name) {
  size_t idx = ring->gen_index(name);
  return generator(std::move(ring), idx);
}

bool SqrtExtElem::is_scalar() const {
  return coef_.empty() || (coef_.size() == 1 && coef_.begin()->first == 0);
}

RatExpr SqrtExtElem::scalar_part() const { return coefficient(0); }

RatExpr SqrtExtElem::coefficient(uint32_t mask) const {
  auto it = coef_.find(mask);
  if (it == coef_.end()) return RatExpr::zero(ring_->base());
  return it->second;
}

void SqrtExtElem::prune() {
  for (auto it = coef_.begin(); it != coef_.end();)
    it = it->second.is_zero() ? coef_.erase(it) : std::next(it);
}

SqrtExtElem SqrtExtElem::operator-() const {
  SqrtExtElem e(*this);
  for (auto& [m, c] : e.coef_) c = -c;
  return e;
}

SqrtExtElem SqrtExtElem::operator+(const SqrtExtElem& rhs) const {
  if (!same_ring(ring_, rhs.ring_)) throw universe_error("extension ring mismatch");
  SqrtExtElem out(*this);
  for (const auto& [m, c] : rhs.coef_) {
    auto it = out.coef_.find(m);
    if (it == out.coef_.end()) {
      out.coef_.emplace(m, c);
    } else {
      it->second += c;
      if (it->second.is_zero()) out.coef_.erase(it);
    }
  }
  return out;
}

SqrtExtElem SqrtExtElem::operator-(const SqrtExtElem& rhs) const {
  return *this + (-rhs);
}

SqrtExtElem SqrtExtElem::operator*(const SqrtExtElem& rhs) const {
  if (!same_ring(ring_, rhs.ring_)) throw universe_error("extension ring mismatch");
  SqrtExtElem out = zero(ring_);
  for (const auto& [ma, ca] : coef_) {
    for (const auto& [mb, cb] : rhs.coef_) {
      RatExpr c = ca * cb;
      uint32_t common = ma & mb;
      for (size_t i = 0; common; ++i, common >>= 1)
        if (common & 1u) c *= ring_->gens()[i].square;
      uint32_t m = ma ^ mb;
      auto it = out.coef_.find(m);
      if (it == out.coef_.end()) {
        if (!c.is_zero()) out.coef_.emplace(m, std::move(c));
      } else {
        it->second += c;
        if (it->second.is_zero()) out.coef_.erase(it);
      }
    }
  }
  return out;
}

SqrtExtElem SqrtExtElem::scaled(const RatExpr& c) const {
  SqrtExtElem out(*this);
  for (auto& [m, v] : out.coef_) v *= c;
  out.prune();
  return out;
}

SqrtExtElem SqrtExtElem::pow(unsigned e) const {
  SqrtExtElem acc = one(ring_);
  SqrtExtElem base = *this;
  while (e) {
    if (e & 1u) acc = acc * base;
    base = (e >>= 1u) ? base * base : base;
  }
  return acc;
}

SqrtExtElem SqrtExtElem::inverse_below(size_t level) const {
  if (coef_.empty()) throw division_error("inverse of zero in extension ring");
  if (level == 0) {
    // scalar
    return from_scalar(ring_, RatExpr::constant(ring_->base(), Rational(1)) /
                                  coef_.at(0));
  }
  const uint32_t bit = uint32_t(1) << (level - 1);
  SqrtExtElem z0 = zero(ring_), z1 = zero(ring_);
  for (const auto& [m, c] : coef_) {
    if (m & bit)
      z1.coef_[m ^ bit] = c;
    else
      z0.coef_[m] = c;
  }
  if (z1.is_zero()) return z0.inverse_below(level - 1);
  SqrtExtElem d = from_scalar(ring_, ring_->gens()[level - 1].square);
  SqrtExtElem norm = z0 * z0 - z1 * z1 * d;
  if (norm.is_zero())
    throw division_error("extension element is a zero divisor (norm vanishes)");
  SqrtExtElem ninv = norm.inverse_below(level - 1);
  SqrtExtElem num = zero(ring_);
  num.coef_ = z0.coef_;
  for (const auto& [m, c] : z1.coef_) num.coef_[m | bit] = -c;
  return num * ninv;
}

SqrtExtElem SqrtExtElem::inverse() const { return inverse_below(ring_->gen_count()); }

SqrtExtElem SqrtExtElem::conjugated(size_t gen_index) const {
  SqrtExtElem out(*this);
  const uint32_t bit = uint32_t(1) << gen_index;
  for (auto& [m, c] : out.coef_)
    if (m & bit) c = -c;
  return out;
}

SqrtExtElem SqrtExtElem::conjugated_all() const {
  SqrtExtElem out(*this);
  for (auto& [m, c] : out.coef_)
    if (__builtin_popcount(m) & 1) c = -c;
  return out;
}

SqrtExtElem SqrtExtElem::substituted(const std::map<std::string, RatExpr>& bindings) const {
  std::vector<SqrtGen> gens;
  gens.reserve(ring_->gen_count());
  for (const auto& g : ring_->gens())
    gens.push_back({g.name, substitute(g.square, bindings)});
  SqrtRingPtr nr = SqrtExtRing::make(ring_->base(), std::move(gens));
  SqrtExtElem out = zero(nr);
  for (const auto& [m, c] : coef_) {
    RatExpr nc = substitute(c, bindings);
    if (!nc.is_zero()) out.coef_[m] = std::move(nc);
  }
  return out;
}

bool SqrtExtElem::operator==(const SqrtExtElem& rhs) const {
  if (!same_ring(ring_, rhs.ring_)) return false;
  return coef_ == rhs.coef_;
}

SqrtExtElem eval_in_ring(const PolyExpr& f, const SqrtRingPtr& ring,
                         const std::vector<SqrtExtElem>& values) {
  return eval_poly<SqrtExtElem>(f, values, ExtOps{ring});
}

SqrtExtElem eval_in_ring(const RatExpr& f, const SqrtRingPtr& ring,
                         const std::vector<SqrtExtElem>& values) {
  SqrtExtElem den = eval_in_ring(f.den(), ring, values);
  SqrtExtElem num = eval_in_ring(f.num(), ring, values);
  return num * den.inverse();
}

}  // namespace hitchin2
