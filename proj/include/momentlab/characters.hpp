#pragma once
// Dirichlet characters mod q (q <= ~1e4) built from the cyclic structure of
// (Z/q)^*: a primitive root for each odd prime power, and <-1> x <5> for
// 2^k with k >= 3.  Values come from discrete-log tables, so evaluation is
// exact root-of-unity arithmetic.
//
// Gauss sums are computed from the definition.  L-functions are evaluated
// for Re(s) >= 1.1 by writing L(s,chi) = q^{-s} sum_a chi(a) zeta(s, a/q)
// with the Hurwitz zeta handled by Euler-Maclaurin (absolute error well
// below 1e-10 in that half-plane).

#include <cstdint>
#include <vector>

#include "momentlab/base.hpp"

namespace momentlab {

struct CyclicFactor {
  int64_t pk;            // prime power modulus of this factor (or 2^k block)
  int64_t order;         // order of the generator
  int64_t gen;           // generator of this cyclic piece
  std::vector<int64_t> dlog;  // residue -> exponent, -1 where undefined
};

struct DirichletGroup {
  int64_t q = 1;
  std::vector<CyclicFactor> factors;
  int64_t size = 1;  // = phi(q) = product of factor orders

  // CRT data: for each factor, the idempotent-style projection residue.
  std::vector<int64_t> moduli;  // prime power chunks of q (2^k kept whole)
};

struct DirichletCharacter {
  const DirichletGroup* group = nullptr;
  std::vector<int64_t> exps;  // exponent of the character on each generator

  cplx operator()(int64_t a) const;
  bool is_principal() const;
};

DirichletGroup character_group(int64_t q);

// All phi(q) characters mod q, principal first.
std::vector<DirichletCharacter> all_characters(const DirichletGroup& g);

// tau(chi) = sum_{a mod q} chi(a) e(a/q).
cplx gauss_sum(const DirichletCharacter& chi);

// Hurwitz zeta(s, a), a in (0,1], Re(s) > 1 (used with Re(s) >= 1.1).
cplx hurwitz_zeta(cplx s, double a);
cplx riemann_zeta(cplx s);

cplx dirichlet_L(cplx s, const DirichletCharacter& chi);

// L-series of an arbitrary completely multiplicative-looking periodic
// coefficient vector v (v[0] unused, indices mod m), same contract on s.
cplx dirichlet_L_periodic(cplx s, const std::vector<cplx>& v, int64_t m);

}  // namespace momentlab
