#pragma once
// Complex gamma (Lanczos), Bessel/Hankel evaluators, the Mellin transforms of
// the Kuznetsov kernels, the script-H gamma-ratio kernel, the Hankel(2)-J
// Mellin integral, and the oscillatory double integral that script-H factors.
//
// The check_* helpers pair a closed form with an independent quadrature and
// return both values plus their relative disagreement, so callers (tests,
// report suites) decide what tolerance to enforce.

#include <complex>
#include <string>
#include <vector>

#include "momentlab/base.hpp"
#include "momentlab/oscillatory.hpp"
#include "momentlab/quadrature.hpp"

namespace momentlab {

// Gamma via Lanczos (g = 607/128, 15 terms), reflection below Re z = 1/2.
// Relative error <= 1e-12 for |z| <= 50.  Throws domain_error at the poles.
cplx gamma_complex(cplx z);

// A branch of log Gamma with exp(log_gamma_complex(z)) == gamma_complex(z),
// for Re z > 0.  The real part (hence |Gamma|) is branch-independent, which
// is all the magnitude/slope checks need.
cplx log_gamma_complex(cplx z);

// J_nu(x) for real x >= 0: ascending series for x <= 10, Hankel asymptotics
// beyond.  Both are computed in the overlap window by the test suite.
cplx bessel_J(cplx nu, double x);

// Hankel functions.  For |z| >= 10 the asymptotic series applies to any
// complex z in the principal half-planes we use (H1 decays upward, H2
// downward).  Below that, real z only: J -+ iY with Y_nu by reflection and a
// dedicated log series at nu = 0.
cplx hankel1(cplx nu, cplx z);
cplx hankel2(cplx nu, cplx z);

// K_{2it}(x) = int_0^inf exp(-x cosh u) cos(2tu) du, x > 0.
double bessel_K2it(double t, double x);

// Closed Mellin transforms:
//   int_0^inf J_nu(x) x^{s-1} dx = 2^{s-1} Gamma((s+nu)/2) / Gamma((nu-s)/2 + 1)
//   int_0^inf K_{2it}(x) x^{s-1} dx = 2^{s-2} Gamma(s/2+it) Gamma(s/2-it)
cplx mellin_J_closed(cplx s, cplx nu);
cplx mellin_K_closed(cplx s, double t);

struct MellinPoint {
  cplx s{};
  cplx value{};
  std::string method;  // "closed_form" | "quadrature"
  double est_error = 0.0;
};

// Independent quadrature oracles for the two transforms above.  mellin_J
// integrates [0,50] directly and rotates the H1/H2 halves of the tail onto
// vertical rays; mellin_K splits at x=1 and takes the lower part in log
// coordinates.  Preconditions: Re(s+nu) > 0 and Re s < 3/2 (J); Re s > 0 (K).
MellinPoint mellin_J_quadrature(cplx s, cplx nu);
MellinPoint mellin_K_quadrature(cplx s, double t);

// Kuznetsov kernels in Mellin form:
//   h+-(s,t) = (1/pi) 2^{s-1} {cos(pi s/2), cosh(pi t)} Gamma(s/2+it) Gamma(s/2-it)
//   h(s,k)   = 2^{s-1} Gamma((s+k-1)/2) / Gamma((k+1-s)/2)
cplx h_plus(cplx s, double t);
cplx h_minus(cplx s, double t);
cplx h_holo(cplx s, double k);

struct TransformCheckRow {
  std::string label;
  cplx direct{};
  cplx mellin{};
  double rel = 0.0;
};

// phi_h(k) = int J_{k-1}(X/y) phi(y) dy versus the h(s,k) Mellin contour on
// Re s = 1; phi_-(t) = int (2/pi) cosh(pi t) K_{2it}(X/v) phi(v) dv versus
// the h-(s,t) contour on Re s = 2.  phi must be a 1-d family.
TransformCheckRow check_phi_holomorphic(const InertFamily& phi, int k, double X);
TransformCheckRow check_phi_minus(const InertFamily& phi, double t, double X);

// The three standard consistency cases: k=4, the t=0 minus case, and the
// k=2 boundary weight, all at argument X.
std::vector<TransformCheckRow> kuznetsov_transform_consistency(
    const InertFamily& phi, double X);

struct HKernelArgs {
  cplx s{}, w{}, u{};
  int kappa = 4;  // even, >= 2
};

// (-1)^{kappa/2} (2pi)^{s+w+u-1} Gamma(s+w+u) Gamma(k/2-w-u) Gamma(k/2-s)
//   / (Gamma(k/2+s) Gamma(k/2+w+u)),  k/2 = kappa/2.
// Holomorphy region Re s, Re(w+u) < kappa/2 and Re(s+w+u) > 0 is enforced.
cplx script_H(const HKernelArgs& args);

// int_0^inf H2_nu(x) J_mu(x) x^{lambda-1} dx in closed gamma form,
// valid for Re(+-nu - mu) < Re lambda < 1.
cplx hankel_J_mellin_closed(cplx nu, cplx mu, cplx lambda);

struct HankelJRow {
  cplx nu{};
  double mu = 0.0;
  double lambda = 0.0;
  cplx closed{};
  cplx quad{};
  double rel = 0.0;
  double est_error = 0.0;
};

// Closed form versus quadrature: direct on [0,50], then the H2*H1 half of
// the tail summed from the asymptotic product series and the H2*H2 half
// rotated down a vertical ray where it decays like exp(-2 tau).
HankelJRow hankel_J_mellin_check(cplx nu, double mu, double lambda);

struct ScriptIArgs {
  cplx s{}, w{}, u{};
  int kappa = 4;
  int64_t m1 = 2, a = 1, c = 3, k = 2;
};

struct ScriptICheck {
  cplx numeric{};
  cplx closed{};
  double rel = 0.0;
};

// The double integral
//   I = int_0^inf J_{kappa-1}(4 pi sqrt(m1 a z)/c) z^{-s}
//         [ int_0^inf e(-m1 a z/(c k t)) e(-k t/c) t^{s-w-u} dt/t ] dz/sqrt(z)
// evaluated numerically (inner integral on a three-leg saddle contour, outer
// in sqrt(z) coordinates) against its closed form
//   e^{i pi (s+w+u)/2} script_H(s,w,u,kappa) k^{-(s-w-u)} (a m1)^{s-1/2}
//     c^{1-(s+w+u)}.
// Needs 0 < Re(s-w-u) < 1 for the contour legs to balance.
ScriptICheck script_I_check(const ScriptIArgs& args);

}  // namespace momentlab
