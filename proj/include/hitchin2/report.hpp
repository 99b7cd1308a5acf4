#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "hitchin2/rational.hpp"

namespace hitchin2 {

inline const char* kVersion = "1.0.0";
inline const char* kReportSchema = "1";

// Deterministic sampling of exact rationals with bounded numerator and
// denominator; identical seeds reproduce identical draws on every platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}

  long integer(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(gen_);
  }

  Rational rational(long bound = 50) {
    return rat(integer(-bound, bound), integer(1, bound));
  }

  Rational nonzero_rational(long bound = 50) {
    while (true) {
      Rational q = rational(bound);
      if (q != 0) return q;
    }
  }

  // pairwise distinct, distinct from 0 and 1
  std::array<Rational, 3> generic_params(long bound = 12) {
    while (true) {
      std::array<Rational, 3> p = {rational(bound), rational(bound), rational(bound)};
      bool ok = p[0] != p[1] && p[1] != p[2] && p[0] != p[2];
      for (const auto& q : p) ok = ok && q != 0 && q != 1;
      if (ok) return p;
    }
  }

 private:
  std::mt19937_64 gen_;
};

struct CheckRecord {
  std::string id;
  std::string anchor;   // formula the check verifies, e.g. "Table 1"
  std::string status;   // "pass" | "fail" | "skipped"
  std::string detail;   // witness or counterexample serialization
  double elapsed_ms = 0.0;
};

struct VerificationReport {
  std::string suite;
  uint64_t seed = 0;
  std::string version = kVersion;
  std::vector<CheckRecord> records;

  size_t passed() const;
  size_t failed() const;
  size_t skipped() const;
  bool all_passed() const { return failed() == 0; }

  // JSON serialization; records sorted by id. Timings are optional so the
  // default report is byte-identical across runs with the same seed.
  std::string to_json(bool include_timings = false) const;
};

}  // namespace hitchin2
