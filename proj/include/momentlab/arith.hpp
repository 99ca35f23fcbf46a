#pragma once
// Elementary multiplicative number theory: factorization by trial division
// (2,3,5-wheel, intended for n up to ~1e12), the usual multiplicative
// functions, the "floor square root" \prod p^{floor(a/2)} of n = \prod p^a,
// and the coprime/power splitting of a pair (c,k) used by the closed H-sum
// evaluation:
//   c = c0*c2, k = k0*k1 with, per prime p,
//     p^{v_p(c)} | c0  iff v_p(c) >  v_p(k),
//     p^{v_p(c)} | c2  iff 1 <= v_p(c) <= v_p(k),
//     p^{v_p(k)} | k0  iff v_p(k) >= v_p(c),
//     p^{v_p(k)} | k1  iff 1 <= v_p(k) < v_p(c),
// so that (c0,k0)=1, c2|k0, k1*rad(k1)|c0.
//
// Also: empirical verification of the divisor-sum bounds
//   sum_{d|N} (d,N/d)^2 / N        <<  N^eps * floorroot(N)/sqrt(N)
// and four companions, with explicit fitted constants.

#include <cstdint>
#include <string>
#include <vector>

#include "momentlab/base.hpp"

namespace momentlab {

struct FactoredInt {
  int64_t n = 1;
  std::vector<std::pair<int64_t, int>> factors;  // (prime, exponent), increasing
};

FactoredInt factorize(int64_t n);

std::vector<int64_t> divisors(const FactoredInt& f);

int mobius(int64_t n);
int64_t euler_phi(int64_t n);
// Number of ordered k-tuples with product n (tau_2 = usual divisor count).
int64_t tau_k(int64_t n, int k);
int64_t radical(int64_t n);

// Largest product \prod p^{floor(a/2)} over n = \prod p^a; i.e. the largest
// m such that m^2 divides n "prime by prime".
int64_t floorroot(int64_t n);

// Dirichlet convolution (Id * phi)(n); multiplicatively
// (Id*phi)(p^a) = p^a + a p^{a-1}(p-1).
int64_t id_star_phi(int64_t n);

struct CkFactorization {
  int64_t c0 = 1, c2 = 1, k0 = 1, k1 = 1;
};

CkFactorization ck_factorize(int64_t c, int64_t k);

// One row per verified bound: observed max over N <= Nmax of
// LHS(N) / (N^eps * shape(N)), compared against the pinned constant.
struct DivisorBoundRow {
  std::string name;
  double max_ratio = 0.0;
  int64_t argmax = 1;
  double constant = 0.0;
  bool pass = false;
};

std::vector<DivisorBoundRow> check_divisor_bounds(int64_t Nmax, double eps = 0.3);

// Average-order sanity bound sum_{n<=x} floorroot(n) <= 2 x log(x+2).
bool floorroot_partial_sum_bound(int64_t x);

}  // namespace momentlab
