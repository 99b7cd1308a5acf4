#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>

namespace hitchin2 {

// Arbitrary-precision exact rational. mpq_class keeps values canonical
// (coprime, positive denominator) as long as construction goes through
// the helpers below.
using Rational = mpq_class;

class error : public std::runtime_error {
 public:
  explicit error(const std::string& what) : std::runtime_error(what) {}
};

class universe_error : public error {
 public:
  using error::error;
};

class division_error : public error {
 public:
  using error::error;
};

class pole_error : public error {
 public:
  using error::error;
};

class argument_error : public error {
 public:
  using error::error;
};

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw division_error("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

// Parses "n" or "n/d" with optional sign.
inline Rational rat_from_string(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0)
    throw argument_error("cannot parse rational '" + text + "'");
  if (q.get_den() == 0) throw division_error("rational with zero denominator");
  q.canonicalize();
  return q;
}

inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

// Exact square root when the value is a perfect rational square.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) ||
      !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  return Rational(rn, rd);
}

inline Rational rational_pow(const Rational& base, unsigned exp) {
  Rational out(1);
  Rational b = base;
  unsigned e = exp;
  while (e) {
    if (e & 1u) out *= b;
    b *= b;
    e >>= 1u;
  }
  return out;
}

}  // namespace hitchin2
