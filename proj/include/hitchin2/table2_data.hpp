#pragma once

#include <array>
#include <cstddef>

namespace hitchin2::table2 {

// exponents over (r, s, t, u0, u1, u2, u3, eta0, eta1, eta2)
struct TermData {
  std::array<int, 10> exps;
  long num;
  long den;
};

extern const TermData kDerivedH0[];
extern const size_t kDerivedH0Count;
extern const TermData kDerivedH1[];
extern const size_t kDerivedH1Count;
extern const TermData kDerivedH2[];
extern const size_t kDerivedH2Count;

}  // namespace hitchin2::table2
