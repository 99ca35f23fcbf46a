#pragma once
// Cusps of Gamma_0(N), scaling matrices in an integral model, and explicit
// double-coset enumeration.
//
// A cusp is written v/f with f | N, (v,f)=1, and v taken mod (f, N/f); its
// width is N/(f (f, N/f)).  Scaling matrices sigma are represented by an
// integer matrix M with positive determinant D, standing for M/sqrt(D):
//   - for a cusp v/f:        M = (v w, b; f w, d), v d - b f = 1, D = w,
//   - for the Atkin-Lehner cusp 1/r (s = N/r, (r,s)=1):
//                            M = (s, -b0; N, s a0), s a0 + r b0 = 1, D = s.
//
// For two scaling matrices s1 = M1/sqrt(D1), s2 = M2/sqrt(D2) the double
// cosets in Gammainf \ s1^{-1} Gamma_0(N) s2 / Gammainf are enumerated by
// their bottom rows: K = adj(M1) g M2 runs over integer matrices with
// det K = D1 D2 and g = M1 K adj(M2) / (D1 D2) in Gamma_0(N); for a fixed
// bottom row (k21, k22) the top row is determined mod k21, so scanning
// k22 in [0, k21) and solving k11 k22 = D1 D2 (mod k21) finds every coset
// exactly once.  The modulus of the coset is k21/sqrt(D1 D2) and the
// attached phase for indices (m,n) is e((k11 m + k22 n)/k21).

#include <cstdint>
#include <vector>

#include "momentlab/base.hpp"
#include "momentlab/expsums.hpp"

namespace momentlab {

struct CuspRep {
  int64_t N = 1;
  int64_t v = 1;
  int64_t f = 1;
};

int64_t cusp_width(int64_t N, int64_t f);

// Gamma_0(N)-equivalence of the cusps u1/w1 and u2/w2 (inputs need not be
// reduced; w = 0 means the cusp at infinity).
bool cusp_equivalent(int64_t N, int64_t u1, int64_t w1, int64_t u2, int64_t w2);

CuspRep normalize_cusp(int64_t N, int64_t u, int64_t w);

std::vector<CuspRep> cusp_list(int64_t N);

struct ScalingMatrix {
  int64_t a = 1, b = 0, c = 0, d = 1;
  int64_t det = 1;  // the matrix stands for ((a,b;c,d))/sqrt(det)
};

ScalingMatrix scaling_matrix(const CuspRep& cusp);
ScalingMatrix atkin_lehner_matrix(int64_t N, int64_t s);

struct CosetRep {
  int64_t k11, k12, k21, k22;
};

// All double-coset representatives with bottom-left entry exactly k21 > 0.
std::vector<CosetRep> double_coset_reps(const ScalingMatrix& s1,
                                        const ScalingMatrix& s2, int64_t N,
                                        int64_t k21);

// S_{inf, 1/r}(m, n; c sqrt(s)) by direct enumeration, s = N/r.
ExpSumValue doublecoset_kloosterman(int64_t N, int64_t r, int64_t m, int64_t n,
                                    int64_t c);

// Moduli c sqrt(s) <= bound listed by the integer index c: from the closed
// description {r | c, (c,s) = 1} and from enumeration (nonempty rep set).
std::vector<int64_t> allowed_moduli_closed(int64_t N, int64_t r, double bound);
std::vector<int64_t> allowed_moduli_enumerated(int64_t N, int64_t r,
                                               double bound);

struct ALCheckRow {
  int64_t c, m, n;
  cplx lhs, rhs;
  double abs_err;
  int64_t n_reps;
  bool pass;
};

// Enumerated S_{inf,1/r}(m,n; c sqrt(s)) against the classical Kloosterman
// S(sbar m, n; c) on r | c, (c,s)=1 (and emptiness off that set).
std::vector<ALCheckRow> verify_atkin_lehner_identity(int64_t N, int64_t r,
                                                     int64_t mmax, int64_t nmax,
                                                     int64_t cmax, double tol);

}  // namespace momentlab
