#pragma once
// Complete exponential sums over Z/c:
//
//   S(m,n;c)    = sum_{x mod c, (x,c)=1} e((m x + n xbar)/c)       Kloosterman
//   R_c(n)      = S(0,n;c)                                          Ramanujan
//   H(k,m1,v;c) = sum_{x mod c} S(m1 x, v; c) e(k x/c)
//               = c * sum_{u mod c, (u,c)=1, m1 u = -k mod c} e(v ubar / c)
//   A(p;al;k)   = sum_{x mod k^3} e((x1 x2 x3 al - x1 p1 - x2 p2 - x3 p3)/k)
//
// Each sum has a direct enumeration and an independent closed evaluation:
// R_c via the divisor/Moebius formula, H via the (c0,c2,k0,k1) splitting,
// A via the divisor-Kloosterman identity (all p_i nonzero), the value
// k*(Id*phi)(k) at p = 0, and a one-axis collapse otherwise.

#include <cstdint>

#include "momentlab/base.hpp"

namespace momentlab {

struct ExpSumValue {
  cplx value{0.0, 0.0};
  int64_t modulus = 1;
  int64_t term_count = 0;
};

ExpSumValue kloosterman(int64_t m, int64_t n, int64_t c);
ExpSumValue ramanujan(int64_t n, int64_t c);        // direct enumeration
ExpSumValue ramanujan_closed(int64_t n, int64_t c);  // sum_{d|(n,c)} d mu(c/d)

// Literal double sum over x mod c (O(c^2) — small c cross-checks only).
ExpSumValue H_double_sum(int64_t k, int64_t m1, int64_t v, int64_t c);
// Reduced single sum over admissible units u.
ExpSumValue H_bruteforce(int64_t k, int64_t m1, int64_t v, int64_t c);
// Closed evaluation via the c = c0 c2, |k| = k0 k1 splitting.
ExpSumValue H_closed(int64_t k, int64_t m1, int64_t v, int64_t c);

// Literal triple sum (O(k^3) — small k cross-checks only).
ExpSumValue A_triple_sum(int64_t p1, int64_t p2, int64_t p3, int64_t alpha,
                         int64_t k);
// One axis collapsed: A = k * sum_{x1,x2: al x1 x2 = p3 (k)} e(-(x1 p1 + x2 p2)/k).
ExpSumValue A_bruteforce(int64_t p1, int64_t p2, int64_t p3, int64_t alpha,
                         int64_t k);
ExpSumValue A_closed(int64_t p1, int64_t p2, int64_t p3, int64_t alpha,
                     int64_t k);

}  // namespace momentlab
