#pragma once
// Fourier coefficients of Eisenstein series attached to a pair of cusps of
// Gamma_0(N): a general cusp v/f on one side and an Atkin-Lehner cusp 1/r
// (s = N/r, (r,s)=1) on the other.
//
// The series side sums cusp Kloosterman phases over double cosets.  Writing
// K = adj(M_c) g W for g in Gamma_0(N), the bottom-left entry of K is
// always w s j with w the width of v/f and j >= 1, so the moduli are
// gamma_j = sqrt(w s) j; the bottom-right entry is w D' with D' mod s j the
// right-translation coordinate, and the phase is e(n D' / (s j)).  Whether
// a pair (j, D') occurs is decided by gcd(j, D') = 1 together with a
// condition that only depends on (X, Y) mod N, where
//   X = s a0 j - r D',  Y = b0 j + D',   s a0 + r b0 = 1:
// an element (A,B;C,D) of Gamma_0(N) with vC - fA = X, vD - fB = Y exists
// iff f | X d0 (d0 = inverse of v mod f) and t1 Y = 1 (mod gcd(X, N/f))
// where f t1 = -X d0 (mod N).  That table is precomputed once per pair, so
// enumeration costs O(#reps) up to the gcd filter.
//
// The closed side evaluates the finite expression for the same coefficient:
// a Ramanujan sum, a divisor sum twisted by Gauss sums of characters at the
// ramified part, and a Dirichlet L-value at 2u in the denominator.

#include <cstdint>
#include <vector>

#include "momentlab/base.hpp"
#include "momentlab/cusps.hpp"

namespace momentlab {

// Data shared by every coefficient of one pair (cusp v/f, Atkin-Lehner 1/r).
struct EisPair {
  int64_t N, r, s;
  CuspRep cusp;   // normalized v/f
  int64_t width;  // width of v/f
  int64_t a0, b0;  // s a0 + r b0 = 1

  // valid_dm[j mod N] lists the residues D' mod N that pass the class test.
  std::vector<std::vector<int64_t>> valid_dm;
  int64_t max_dm_count = 0;
};

EisPair make_eis_pair(int64_t N, int64_t r, const CuspRep& cusp);

// Valid D' in [0, s j) at level j (for cross-checking the enumeration).
std::vector<int64_t> eis_level_coords(const EisPair& P, int64_t j);

struct EisSeries {
  // values[i][k] is the coefficient for ns[i], us[k].
  std::vector<std::vector<cplx>> values;
  double tail_bound = 0.0;  // rigorous bound on the truncation error, any n, u
  int64_t reps = 0;         // phases actually summed
  int64_t j_max = 0;        // last level included
};

// Truncated double-coset series for all requested n and u in one pass over
// levels.  Stops once the tail bound drops below tol or reps reaches
// rep_cap; tail_bound reports the bound actually achieved.
EisSeries phi_series(const EisPair& P, const std::vector<int64_t>& ns,
                     const std::vector<cplx>& us, double tol, int64_t rep_cap);

// Finite evaluation of the same coefficient.  With f the cusp denominator,
// factor f_r = (f, r), f_s = (f, s), r = f_r r', s = f_s s'; split
// f_r = f_r' f0 with f_r' the part supported on the primes of r', and
// s' = s_f' s0 with s_f' the part supported on the primes of f_s; put
// a = (f_r', r'), b = (s_f', f_s).  The coefficient vanishes unless
// (f_r'/a)(s_f'/b) divides n, and for n = (f_r'/a)(s_f'/b) k,
// k_r = (k, a), k_s = (k, b), l = k/(k_r k_s) it equals
//
//   (w s f_r^2)^{-u} (f_r'/a)(s_f'/b) / (phi(a/k_r) phi(b/k_s))
//     * sum_{d | k, (d, f_s r') = 1} d^{1-2u} R_{s0 f0}(l/d)
//     * sum_{chi mod a/k_r, psi mod b/k_s}
//         (chi psi)(l) tau(conj chi) tau(conj psi)
//         (chi psi)((s0 f0 d^2)^{-1} v) chi(-k_s b^{-1}) psi(k_r a^{-1})
//         / L(2u, conj(chi)^2 conj(psi)^2 chi_0)
//
// where w is the cusp width, R_c the Ramanujan sum, and chi_0 the principal
// character mod f_s r' s0 f0.  Requires Re u > 1/2 off the L-zeros; the
// checks drive it on the same Re u > 1 range as the series.
cplx phi_closed(const EisPair& P, int64_t n, cplx u);

struct EisCheckRow {
  int64_t N, r, v, f, n;
  cplx u;
  cplx series, closed;
  double abs_err;
  double tolerance;  // tail bound + slack
  bool pass;
};

// Closed evaluation against the truncated series for every cusp pair of
// level N and n = 1..nmax, at each u in us.
std::vector<EisCheckRow> verify_eisenstein_pairs(int64_t N,
                                                 const std::vector<cplx>& us,
                                                 int64_t nmax, double tol,
                                                 int64_t rep_cap, double slack);

}  // namespace momentlab
