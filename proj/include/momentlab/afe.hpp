#pragma once
// Approximate-functional-equation weights and the coefficient-level Hecke
// identities sitting under them.
//
//   gamma_factor     gamma(s,kappa) = pi^-s Gamma((s+(kappa-1)/2)/2)
//                                          Gamma((s+(kappa+1)/2)/2)
//   V_weight         V1 / V2 / V by contour integration on Re(u) = sigma,
//                    V1(x) = (1/2pi i) int (G(u)/u) r(u)   x^-u du,
//                    V2(x) = (1/2pi i) int (G(u)/u) r(u)^2 x^-u du,
//                    V(x)  = same as V2 with an extra zeta_q(1+2u),
//                    where r(u) = gamma_factor(1/2+u)/gamma_factor(1/2)
//   V_esum           the independent route V(x) = sum_{(e,q)=1} V2(e^2 x)/e
//   F_a              triple e1,e2,e3-sum of V1 products (coprime to q),
//                    F_a(x) = sum 1/(e1e2e3) V1(a x1 e1e2) V1(a x2 e1e3)
//                                            V1(a x3 e2e3)
//   F_a_contour      the equivalent triple contour with three zeta_q
//                    couplings zeta_q(1+u_i+u_j); independent of the e-sum
//   fa_inert_family  F_a as a 3-d InertFamily for derivative certification
//   SatakeModel      synthetic Hecke eigenvalues lambda(n)
//   hecke_identity_check
//                    square / cube coefficient identities for every M <= Nmax
//
// The G convention: G(u) = (1-4u^2)^m e^{u^2} is even and entire with
// G(0) = 1 and G(1/2) = 0, and decays like e^{-t^2} on every vertical line.
// Note e^{u^2} *grows* along horizontal shifts, so the decay of V1 in x is
// Gaussian in log x rather than a hard power: |V1| crosses 1e-8 only near
// x ~ 5e3 (see test_afe.cpp for the measured envelope).  Signed V1(x) is
// negative for x >~ 0.55.

#include <cstdint>
#include <map>
#include <vector>

#include "momentlab/base.hpp"
#include "momentlab/oscillatory.hpp"

namespace momentlab {

// G(u) = (1 - 4u^2)^m e^{u^2}.  The polynomial factor is evaluated exactly
// at u = 0 and u = 1/2 (1 - 4u^2 is computed as written, so both special
// values come out exact in doubles).
struct GFunction {
  int m = 1;
  cplx operator()(cplx u) const;
};

cplx gamma_factor(cplx s, int kappa);

enum class VKind { V1, V2, V };

// Contour evaluation on Re(u) = sigma, truncated at |Im u| = 40 (the e^{-t^2}
// decay of G makes the tail ~e^{-1599}).  q enters only for kind V, through
// zeta_q(1+2u) = (1-q^{-1-2u}) zeta(1+2u); sigma must stay positive (the
// integrand has its u = 0 pole to the left, and gamma_factor poles start at
// Re(u) <= -2).
double V_weight(VKind kind, double x, int kappa, int64_t q, int g_degree = 1,
                double sigma = 1.0);

// V by its defining e-sum, truncated at emax.  V2(e^2 x) is already below
// any tolerance long before e = 10^4 for the x >= 1e-4 range used here.
double V_esum(double x, int kappa, int64_t q, int64_t emax = 10000,
              int g_degree = 1);

// Triple e-sum for F_a, truncated once any V1 argument a*x_i*(e_i e_j)
// exceeds arg_cutoff.  The truncation rule is symmetric under permuting the
// axes, so the computed sum is exactly symmetric.  The tail is dominated by
// terms with a single V1 factor just past the cutoff (one pair product
// large, the other two moderate): measured against the contour form at
// x_i ~ 0.1 it is 2.8e-7 with cutoff 600 and 1.1e-8 with the default 1200.
// Requires x_i > q^{-1/2} (up to 1e-9 slack, so certification grids may
// touch the left edge) and a >= 1, gcd(a, q) = 1.
double F_a(double x1, double x2, double x3, int64_t a, int64_t q,
           int g_degree = 1, double arg_cutoff = 1200.0);

// The same function through the triple contour
//   (2pi i)^-3 iiint prod_i (G(u_i)/u_i) r(u_i) (a x_i)^{-u_i}
//     zeta_q(1+u1+u2) zeta_q(1+u1+u3) zeta_q(1+u2+u3) du,
// evaluated as a tensor sum over trapezoid nodes with the zeta couplings
// read off a table indexed by node-index sums.
double F_a_contour(double x1, double x2, double x3, int64_t a, int64_t q,
                   int g_degree = 1);

// F_a on the dyadic box prod [scales_i, 2 scales_i] as an InertFamily for
// certify_inert.  Uses the contour form with per-axis-coordinate caching:
// certification evaluates on tensor grids, so each axis value repeats ~10^4
// times and the cached quadratic form costs ~node^2 per call instead of
// node^3.  The family is safe to share, but not across threads.
InertFamily fa_inert_family(int64_t a, int64_t q, std::vector<double> scales,
                            double X, int g_degree = 1);

// Hecke eigenvalues from Satake parameters: lambda(p^k) =
// sin((k+1) theta_p)/sin(theta_p), extended multiplicatively.  Primes
// dividing the level follow the newform convention instead:
// lambda(p^k) = lambda(p)^k with lambda(p) = level_sign * p^{-1/2}
// (|lambda(p)| = p^{-1/2} for p | level).  Primes missing from the theta
// map get a deterministic value derived from the seed, so a "random" model
// is just a seed and a level.
struct SatakeModel {
  std::map<int64_t, double> theta;  // overrides, theta_p in [0, pi]
  int64_t level = 1;
  int level_sign = -1;
  uint64_t seed = 0;

  double theta_at(int64_t p) const;
  double lambda_pk(int64_t p, int k) const;
  double lambda(int64_t n) const;

  static SatakeModel random(uint64_t seed, int64_t level);
};

enum class HeckeKind { square, cube };

struct HeckeMismatch {
  int64_t M = 0;
  double lhs = 0.0;
  double rhs = 0.0;
};

// square: for every M <= Nmax,
//   sum_{m1 m2 = M} lambda(m1) lambda(m2)
//     = sum_{e^2 | M, (e,q)=1} tau_2(M/e^2) lambda(M/e^2).
// cube: for every M <= Nmax,
//   sum_{m1 m2 m3 = M} lambda(m1) lambda(m2) lambda(m3)
//     = sum_{a^3 P^2 | M, (aP,q)=1} mu(a) tau_3(P) tau_3(M/(a^3 P^2))
//                                   * lambda(M/(a^2 P^2)),
// which is the fully summed form of the a,e1,e2,e3-parameterization (for
// fixed a and P = e1e2e3, the e-splittings contribute tau_3(P) and the
// n-splittings tau_3 of their product).  Both identities need the newform
// convention at q, so model.level must equal q.
struct HeckeCheckReport {
  HeckeKind kind = HeckeKind::square;
  int64_t q = 0;
  int64_t Nmax = 0;
  int64_t checked = 0;
  double max_abs_diff = 0.0;
  std::vector<HeckeMismatch> mismatches;  // |lhs - rhs| > 1e-10 max(1,|lhs|)
  bool pass = false;
};

HeckeCheckReport hecke_identity_check(HeckeKind kind, const SatakeModel& model,
                                      int64_t q, int64_t Nmax);

}  // namespace momentlab
