#include "hitchin2/table2_data.hpp"

namespace hitchin2::table2 {

// Each row: 10 exponents (r s t u0 u1 u2 u3 eta0 eta1 eta2),
// numerator, denominator. h_i = P_i / (4 u3^4).
const TermData kDerivedH0[] = {
    {{1, 1, 1, 4, 0, 0, 0, 2, 0, 0}, -1, 1},
    {{1, 1, 1, 3, 1, 0, 0, 1, 1, 0}, -2, 1},
    {{1, 1, 1, 3, 0, 1, 0, 1, 0, 1}, -2, 1},
    {{1, 1, 1, 2, 2, 0, 0, 0, 2, 0}, -1, 1},
    {{1, 1, 1, 2, 1, 1, 0, 0, 1, 1}, -2, 1},
    {{1, 1, 1, 2, 1, 0, 1, 1, 0, 1}, -2, 1},
    {{1, 1, 1, 2, 0, 2, 0, 0, 0, 2}, -1, 1},
    {{1, 1, 1, 2, 0, 1, 1, 1, 1, 0}, -2, 1},
    {{1, 1, 1, 2, 0, 0, 2, 2, 0, 0}, 2, 1},
    {{1, 1, 1, 1, 2, 0, 1, 0, 1, 1}, -2, 1},
    {{1, 1, 1, 1, 1, 1, 1, 0, 2, 0}, -2, 1},
    {{1, 1, 1, 1, 1, 1, 1, 0, 0, 2}, -2, 1},
    {{1, 1, 1, 1, 1, 0, 2, 1, 1, 0}, 2, 1},
    {{1, 1, 1, 1, 0, 2, 1, 0, 1, 1}, -2, 1},
    {{1, 1, 1, 1, 0, 1, 2, 1, 0, 1}, 2, 1},
    {{1, 1, 1, 0, 2, 0, 2, 0, 0, 2}, -1, 1},
    {{1, 1, 1, 0, 1, 1, 2, 0, 1, 1}, -2, 1},
    {{1, 1, 1, 0, 1, 0, 3, 1, 0, 1}, 2, 1},
    {{1, 1, 1, 0, 0, 2, 2, 0, 2, 0}, -1, 1},
    {{1, 1, 1, 0, 0, 1, 3, 1, 1, 0}, 2, 1},
    {{1, 1, 1, 0, 0, 0, 4, 2, 0, 0}, -1, 1},
    {{1, 1, 0, 2, 0, 0, 2, 2, 0, 0}, -4, 1},
    {{1, 1, 0, 1, 1, 0, 2, 1, 1, 0}, -8, 1},
    {{1, 1, 0, 0, 2, 0, 2, 0, 2, 0}, -4, 1},
    {{1, 0, 1, 4, 0, 0, 0, 2, 0, 0}, 1, 1},
    {{1, 0, 1, 3, 1, 0, 0, 1, 1, 0}, 2, 1},
    {{1, 0, 1, 3, 0, 1, 0, 1, 0, 1}, 2, 1},
    {{1, 0, 1, 2, 2, 0, 0, 0, 2, 0}, 1, 1},
    {{1, 0, 1, 2, 1, 1, 0, 0, 1, 1}, 2, 1},
    {{1, 0, 1, 2, 1, 0, 1, 1, 0, 1}, -2, 1},
    {{1, 0, 1, 2, 0, 2, 0, 0, 0, 2}, 1, 1},
    {{1, 0, 1, 2, 0, 1, 1, 1, 1, 0}, 2, 1},
    {{1, 0, 1, 2, 0, 0, 2, 2, 0, 0}, 2, 1},
    {{1, 0, 1, 1, 2, 0, 1, 0, 1, 1}, -2, 1},
    {{1, 0, 1, 1, 1, 1, 1, 0, 2, 0}, 2, 1},
    {{1, 0, 1, 1, 1, 1, 1, 0, 0, 2}, -2, 1},
    {{1, 0, 1, 1, 1, 0, 2, 1, 1, 0}, 2, 1},
    {{1, 0, 1, 1, 0, 2, 1, 0, 1, 1}, 2, 1},
    {{1, 0, 1, 1, 0, 1, 2, 1, 0, 1}, 2, 1},
    {{1, 0, 1, 0, 2, 0, 2, 0, 0, 2}, 1, 1},
    {{1, 0, 1, 0, 1, 1, 2, 0, 1, 1}, -2, 1},
    {{1, 0, 1, 0, 1, 0, 3, 1, 0, 1}, -2, 1},
    {{1, 0, 1, 0, 0, 2, 2, 0, 2, 0}, 1, 1},
    {{1, 0, 1, 0, 0, 1, 3, 1, 1, 0}, 2, 1},
    {{1, 0, 1, 0, 0, 0, 4, 2, 0, 0}, 1, 1},
    {{0, 1, 1, 2, 2, 0, 0, 2, 0, 0}, 1, 1},
    {{0, 1, 1, 2, 1, 0, 1, 1, 0, 1}, 2, 1},
    {{0, 1, 1, 2, 0, 0, 2, 0, 0, 2}, 1, 1},
    {{0, 1, 1, 1, 3, 0, 0, 1, 1, 0}, 2, 1},
    {{0, 1, 1, 1, 2, 1, 0, 1, 0, 1}, 2, 1},
    {{0, 1, 1, 1, 2, 0, 1, 0, 1, 1}, 2, 1},
    {{0, 1, 1, 1, 1, 1, 1, 2, 0, 0}, -2, 1},
    {{0, 1, 1, 1, 1, 1, 1, 0, 0, 2}, 2, 1},
    {{0, 1, 1, 1, 1, 0, 2, 1, 1, 0}, 2, 1},
    {{0, 1, 1, 1, 0, 1, 2, 1, 0, 1}, -2, 1},
    {{0, 1, 1, 1, 0, 0, 3, 0, 1, 1}, 2, 1},
    {{0, 1, 1, 0, 4, 0, 0, 0, 2, 0}, 1, 1},
    {{0, 1, 1, 0, 3, 1, 0, 0, 1, 1}, 2, 1},
    {{0, 1, 1, 0, 2, 2, 0, 0, 0, 2}, 1, 1},
    {{0, 1, 1, 0, 2, 1, 1, 1, 1, 0}, -2, 1},
    {{0, 1, 1, 0, 2, 0, 2, 0, 2, 0}, 2, 1},
    {{0, 1, 1, 0, 1, 2, 1, 1, 0, 1}, -2, 1},
    {{0, 1, 1, 0, 1, 1, 2, 0, 1, 1}, 2, 1},
    {{0, 1, 1, 0, 0, 2, 2, 2, 0, 0}, 1, 1},
    {{0, 1, 1, 0, 0, 1, 3, 1, 1, 0}, -2, 1},
    {{0, 1, 1, 0, 0, 0, 4, 0, 2, 0}, 1, 1},
};
const size_t kDerivedH0Count = sizeof(kDerivedH0) / sizeof(TermData);

const TermData kDerivedH1[] = {
    {{1, 1, 0, 2, 0, 1, 1, 1, 1, 0}, 4, 1},
    {{1, 1, 0, 1, 1, 1, 1, 0, 2, 0}, 4, 1},
    {{1, 1, 0, 1, 1, 0, 2, 1, 1, 0}, 4, 1},
    {{1, 1, 0, 1, 0, 2, 1, 0, 1, 1}, 4, 1},
    {{1, 1, 0, 1, 0, 1, 2, 1, 0, 1}, -4, 1},
    {{1, 1, 0, 0, 2, 0, 2, 0, 2, 0}, 4, 1},
    {{1, 1, 0, 0, 1, 1, 2, 0, 1, 1}, 4, 1},
    {{1, 1, 0, 0, 1, 0, 3, 1, 0, 1}, -4, 1},
    {{1, 0, 1, 2, 1, 0, 1, 1, 0, 1}, 4, 1},
    {{1, 0, 1, 1, 2, 0, 1, 0, 1, 1}, 4, 1},
    {{1, 0, 1, 1, 1, 1, 1, 0, 0, 2}, 4, 1},
    {{1, 0, 1, 1, 1, 0, 2, 1, 1, 0}, -4, 1},
    {{1, 0, 1, 1, 0, 1, 2, 1, 0, 1}, 4, 1},
    {{1, 0, 1, 0, 1, 1, 2, 0, 1, 1}, 4, 1},
    {{1, 0, 1, 0, 0, 2, 2, 0, 0, 2}, 4, 1},
    {{1, 0, 1, 0, 0, 1, 3, 1, 1, 0}, -4, 1},
    {{0, 1, 1, 4, 0, 0, 0, 2, 0, 0}, 1, 1},
    {{0, 1, 1, 3, 1, 0, 0, 1, 1, 0}, 2, 1},
    {{0, 1, 1, 3, 0, 1, 0, 1, 0, 1}, 2, 1},
    {{0, 1, 1, 2, 2, 0, 0, 2, 0, 0}, -1, 1},
    {{0, 1, 1, 2, 2, 0, 0, 0, 2, 0}, 1, 1},
    {{0, 1, 1, 2, 1, 1, 0, 0, 1, 1}, 2, 1},
    {{0, 1, 1, 2, 0, 2, 0, 2, 0, 0}, 1, 1},
    {{0, 1, 1, 2, 0, 2, 0, 0, 0, 2}, 1, 1},
    {{0, 1, 1, 2, 0, 0, 2, 2, 0, 0}, -2, 1},
    {{0, 1, 1, 2, 0, 0, 2, 0, 2, 0}, 1, 1},
    {{0, 1, 1, 2, 0, 0, 2, 0, 0, 2}, -1, 1},
    {{0, 1, 1, 1, 3, 0, 0, 1, 1, 0}, -2, 1},
    {{0, 1, 1, 1, 2, 1, 0, 1, 0, 1}, -2, 1},
    {{0, 1, 1, 1, 1, 2, 0, 1, 1, 0}, 2, 1},
    {{0, 1, 1, 1, 1, 0, 2, 1, 1, 0}, -2, 1},
    {{0, 1, 1, 1, 0, 3, 0, 1, 0, 1}, 2, 1},
    {{0, 1, 1, 1, 0, 1, 2, 1, 0, 1}, -2, 1},
    {{0, 1, 1, 0, 4, 0, 0, 0, 2, 0}, -1, 1},
    {{0, 1, 1, 0, 3, 1, 0, 0, 1, 1}, -2, 1},
    {{0, 1, 1, 0, 2, 2, 0, 0, 2, 0}, 1, 1},
    {{0, 1, 1, 0, 2, 2, 0, 0, 0, 2}, -1, 1},
    {{0, 1, 1, 0, 2, 0, 2, 2, 0, 0}, 1, 1},
    {{0, 1, 1, 0, 2, 0, 2, 0, 2, 0}, -2, 1},
    {{0, 1, 1, 0, 2, 0, 2, 0, 0, 2}, 1, 1},
    {{0, 1, 1, 0, 1, 3, 0, 0, 1, 1}, 2, 1},
    {{0, 1, 1, 0, 1, 1, 2, 0, 1, 1}, -2, 1},
    {{0, 1, 1, 0, 0, 4, 0, 0, 0, 2}, 1, 1},
    {{0, 1, 1, 0, 0, 2, 2, 2, 0, 0}, -1, 1},
    {{0, 1, 1, 0, 0, 2, 2, 0, 2, 0}, 1, 1},
    {{0, 1, 1, 0, 0, 2, 2, 0, 0, 2}, -2, 1},
    {{0, 1, 1, 0, 0, 0, 4, 2, 0, 0}, 1, 1},
    {{0, 1, 1, 0, 0, 0, 4, 0, 2, 0}, -1, 1},
    {{0, 1, 1, 0, 0, 0, 4, 0, 0, 2}, 1, 1},
    {{1, 0, 0, 2, 0, 1, 1, 1, 1, 0}, -4, 1},
    {{1, 0, 0, 1, 1, 1, 1, 0, 2, 0}, -4, 1},
    {{1, 0, 0, 1, 1, 0, 2, 1, 1, 0}, 4, 1},
    {{1, 0, 0, 1, 0, 2, 1, 0, 1, 1}, -4, 1},
    {{1, 0, 0, 1, 0, 1, 2, 1, 0, 1}, -4, 1},
    {{1, 0, 0, 0, 2, 0, 2, 0, 2, 0}, 4, 1},
    {{1, 0, 0, 0, 1, 1, 2, 0, 1, 1}, 4, 1},
    {{1, 0, 0, 0, 1, 0, 3, 1, 0, 1}, 4, 1},
    {{0, 1, 0, 2, 0, 0, 2, 2, 0, 0}, 4, 1},
    {{0, 1, 0, 1, 1, 1, 1, 2, 0, 0}, 4, 1},
    {{0, 1, 0, 1, 1, 0, 2, 1, 1, 0}, 4, 1},
    {{0, 1, 0, 1, 0, 1, 2, 1, 0, 1}, 4, 1},
    {{0, 1, 0, 1, 0, 0, 3, 0, 1, 1}, -4, 1},
    {{0, 1, 0, 0, 2, 1, 1, 1, 1, 0}, 4, 1},
    {{0, 1, 0, 0, 1, 2, 1, 1, 0, 1}, 4, 1},
    {{0, 1, 0, 0, 1, 1, 2, 0, 1, 1}, -4, 1},
    {{0, 0, 1, 4, 0, 0, 0, 2, 0, 0}, -1, 1},
    {{0, 0, 1, 3, 1, 0, 0, 1, 1, 0}, -2, 1},
    {{0, 0, 1, 3, 0, 1, 0, 1, 0, 1}, -2, 1},
    {{0, 0, 1, 2, 2, 0, 0, 2, 0, 0}, -1, 1},
    {{0, 0, 1, 2, 2, 0, 0, 0, 2, 0}, -1, 1},
    {{0, 0, 1, 2, 1, 1, 0, 0, 1, 1}, -2, 1},
    {{0, 0, 1, 2, 0, 2, 0, 2, 0, 0}, -1, 1},
    {{0, 0, 1, 2, 0, 2, 0, 0, 0, 2}, -1, 1},
    {{0, 0, 1, 2, 0, 0, 2, 2, 0, 0}, -2, 1},
    {{0, 0, 1, 2, 0, 0, 2, 0, 2, 0}, -1, 1},
    {{0, 0, 1, 2, 0, 0, 2, 0, 0, 2}, -1, 1},
    {{0, 0, 1, 1, 3, 0, 0, 1, 1, 0}, -2, 1},
    {{0, 0, 1, 1, 2, 1, 0, 1, 0, 1}, -2, 1},
    {{0, 0, 1, 1, 1, 2, 0, 1, 1, 0}, -2, 1},
    {{0, 0, 1, 1, 1, 0, 2, 1, 1, 0}, -2, 1},
    {{0, 0, 1, 1, 0, 3, 0, 1, 0, 1}, -2, 1},
    {{0, 0, 1, 1, 0, 1, 2, 1, 0, 1}, -2, 1},
    {{0, 0, 1, 0, 4, 0, 0, 0, 2, 0}, -1, 1},
    {{0, 0, 1, 0, 3, 1, 0, 0, 1, 1}, -2, 1},
    {{0, 0, 1, 0, 2, 2, 0, 0, 2, 0}, -1, 1},
    {{0, 0, 1, 0, 2, 2, 0, 0, 0, 2}, -1, 1},
    {{0, 0, 1, 0, 2, 0, 2, 2, 0, 0}, -1, 1},
    {{0, 0, 1, 0, 2, 0, 2, 0, 2, 0}, -2, 1},
    {{0, 0, 1, 0, 2, 0, 2, 0, 0, 2}, -1, 1},
    {{0, 0, 1, 0, 1, 3, 0, 0, 1, 1}, -2, 1},
    {{0, 0, 1, 0, 1, 1, 2, 0, 1, 1}, -2, 1},
    {{0, 0, 1, 0, 0, 4, 0, 0, 0, 2}, -1, 1},
    {{0, 0, 1, 0, 0, 2, 2, 2, 0, 0}, -1, 1},
    {{0, 0, 1, 0, 0, 2, 2, 0, 2, 0}, -1, 1},
    {{0, 0, 1, 0, 0, 2, 2, 0, 0, 2}, -2, 1},
    {{0, 0, 1, 0, 0, 0, 4, 2, 0, 0}, -1, 1},
    {{0, 0, 1, 0, 0, 0, 4, 0, 2, 0}, -1, 1},
    {{0, 0, 1, 0, 0, 0, 4, 0, 0, 2}, -1, 1},
};
const size_t kDerivedH1Count = sizeof(kDerivedH1) / sizeof(TermData);

const TermData kDerivedH2[] = {
    {{1, 0, 0, 0, 2, 0, 2, 0, 2, 0}, -4, 1},
    {{1, 0, 0, 0, 1, 1, 2, 0, 1, 1}, -8, 1},
    {{1, 0, 0, 0, 0, 2, 2, 0, 0, 2}, -4, 1},
    {{0, 1, 0, 2, 0, 2, 0, 2, 0, 0}, -1, 1},
    {{0, 1, 0, 2, 0, 1, 1, 1, 1, 0}, -2, 1},
    {{0, 1, 0, 2, 0, 0, 2, 0, 2, 0}, -1, 1},
    {{0, 1, 0, 1, 1, 2, 0, 1, 1, 0}, -2, 1},
    {{0, 1, 0, 1, 1, 1, 1, 2, 0, 0}, -2, 1},
    {{0, 1, 0, 1, 1, 1, 1, 0, 2, 0}, -2, 1},
    {{0, 1, 0, 1, 1, 0, 2, 1, 1, 0}, -2, 1},
    {{0, 1, 0, 1, 0, 3, 0, 1, 0, 1}, -2, 1},
    {{0, 1, 0, 1, 0, 2, 1, 0, 1, 1}, -2, 1},
    {{0, 1, 0, 1, 0, 1, 2, 1, 0, 1}, 2, 1},
    {{0, 1, 0, 1, 0, 0, 3, 0, 1, 1}, 2, 1},
    {{0, 1, 0, 0, 2, 2, 0, 0, 2, 0}, -1, 1},
    {{0, 1, 0, 0, 2, 1, 1, 1, 1, 0}, -2, 1},
    {{0, 1, 0, 0, 2, 0, 2, 2, 0, 0}, -1, 1},
    {{0, 1, 0, 0, 1, 3, 0, 0, 1, 1}, -2, 1},
    {{0, 1, 0, 0, 1, 2, 1, 1, 0, 1}, -2, 1},
    {{0, 1, 0, 0, 1, 1, 2, 0, 1, 1}, 2, 1},
    {{0, 1, 0, 0, 1, 0, 3, 1, 0, 1}, 2, 1},
    {{0, 1, 0, 0, 0, 4, 0, 0, 0, 2}, -1, 1},
    {{0, 1, 0, 0, 0, 2, 2, 0, 0, 2}, 2, 1},
    {{0, 1, 0, 0, 0, 0, 4, 0, 0, 2}, -1, 1},
    {{0, 0, 1, 2, 2, 0, 0, 2, 0, 0}, 1, 1},
    {{0, 0, 1, 2, 1, 0, 1, 1, 0, 1}, -2, 1},
    {{0, 0, 1, 2, 0, 0, 2, 0, 0, 2}, 1, 1},
    {{0, 0, 1, 1, 3, 0, 0, 1, 1, 0}, 2, 1},
    {{0, 0, 1, 1, 2, 1, 0, 1, 0, 1}, 2, 1},
    {{0, 0, 1, 1, 2, 0, 1, 0, 1, 1}, -2, 1},
    {{0, 0, 1, 1, 1, 1, 1, 2, 0, 0}, 2, 1},
    {{0, 0, 1, 1, 1, 1, 1, 0, 0, 2}, -2, 1},
    {{0, 0, 1, 1, 1, 0, 2, 1, 1, 0}, 2, 1},
    {{0, 0, 1, 1, 0, 1, 2, 1, 0, 1}, -2, 1},
    {{0, 0, 1, 1, 0, 0, 3, 0, 1, 1}, -2, 1},
    {{0, 0, 1, 0, 4, 0, 0, 0, 2, 0}, 1, 1},
    {{0, 0, 1, 0, 3, 1, 0, 0, 1, 1}, 2, 1},
    {{0, 0, 1, 0, 2, 2, 0, 0, 0, 2}, 1, 1},
    {{0, 0, 1, 0, 2, 1, 1, 1, 1, 0}, 2, 1},
    {{0, 0, 1, 0, 2, 0, 2, 0, 2, 0}, 2, 1},
    {{0, 0, 1, 0, 1, 2, 1, 1, 0, 1}, 2, 1},
    {{0, 0, 1, 0, 1, 1, 2, 0, 1, 1}, 2, 1},
    {{0, 0, 1, 0, 0, 2, 2, 2, 0, 0}, 1, 1},
    {{0, 0, 1, 0, 0, 1, 3, 1, 1, 0}, 2, 1},
    {{0, 0, 1, 0, 0, 0, 4, 0, 2, 0}, 1, 1},
    {{0, 0, 0, 2, 0, 2, 0, 2, 0, 0}, 1, 1},
    {{0, 0, 0, 2, 0, 1, 1, 1, 1, 0}, 2, 1},
    {{0, 0, 0, 2, 0, 0, 2, 0, 2, 0}, 1, 1},
    {{0, 0, 0, 1, 1, 2, 0, 1, 1, 0}, 2, 1},
    {{0, 0, 0, 1, 1, 1, 1, 2, 0, 0}, -2, 1},
    {{0, 0, 0, 1, 1, 1, 1, 0, 2, 0}, 2, 1},
    {{0, 0, 0, 1, 1, 0, 2, 1, 1, 0}, -2, 1},
    {{0, 0, 0, 1, 0, 3, 0, 1, 0, 1}, 2, 1},
    {{0, 0, 0, 1, 0, 2, 1, 0, 1, 1}, 2, 1},
    {{0, 0, 0, 1, 0, 1, 2, 1, 0, 1}, 2, 1},
    {{0, 0, 0, 1, 0, 0, 3, 0, 1, 1}, 2, 1},
    {{0, 0, 0, 0, 2, 2, 0, 0, 2, 0}, 1, 1},
    {{0, 0, 0, 0, 2, 1, 1, 1, 1, 0}, -2, 1},
    {{0, 0, 0, 0, 2, 0, 2, 2, 0, 0}, 1, 1},
    {{0, 0, 0, 0, 1, 3, 0, 0, 1, 1}, 2, 1},
    {{0, 0, 0, 0, 1, 2, 1, 1, 0, 1}, -2, 1},
    {{0, 0, 0, 0, 1, 1, 2, 0, 1, 1}, 2, 1},
    {{0, 0, 0, 0, 1, 0, 3, 1, 0, 1}, -2, 1},
    {{0, 0, 0, 0, 0, 4, 0, 0, 0, 2}, 1, 1},
    {{0, 0, 0, 0, 0, 2, 2, 0, 0, 2}, 2, 1},
    {{0, 0, 0, 0, 0, 0, 4, 0, 0, 2}, 1, 1},
};
const size_t kDerivedH2Count = sizeof(kDerivedH2) / sizeof(TermData);

}  // namespace hitchin2::table2
