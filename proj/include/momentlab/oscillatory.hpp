#pragma once
// Inert weights and one-variable stationary phase:
//
//   smoothstep(N,t)  C^N polynomial step, 0 below t=0 and 1 above t=1
//   bump(x)          omega = S_8(2 log2 x) - S_8(2 log2 x - 1), support (1,2);
//                    its half-octave translates telescope:
//                    sum_k omega(2^{-k/2} x) = 1 for every x > 0
//   certify_inert    finite-difference estimates of sup |x^j d^j w| / X^{|j|}
//                    on a 16^d tensor grid, per multi-index up to total order 4
//   decay checks     |w^(t)| against X1 (1 + |t| X1 / X)^{-A} envelopes,
//                    where w^(t) = int w(x) e(-t x) dx, and the Mellin
//                    analogue on Re s = 1/2
//   stationary_phase_eval
//                    I = int w(t) e^{i psi(t)} dt by phase-portioned
//                    quadrature, against the leading asymptotic
//                    w(t0) e^{i psi(t0) +- i pi/4} sqrt(2 pi / |psi''(t0)|)

#include <cstdint>
#include <functional>
#include <vector>

#include "momentlab/base.hpp"

namespace momentlab {

double smoothstep(int n, double t);
double bump(double x);

// Smooth weight on a product of dyadic boxes [scales[i], 2 scales[i]].
// eval must return 0 outside the box (the built-in families do).
struct InertFamily {
  std::function<double(const std::vector<double>&)> eval;
  std::vector<double> scales;
  double X = 1.0;
  int max_order = 4;
};

// prod_i bump(x_i / scales[i]); 1-inert with the bump's own constants.
InertFamily bump_family(const std::vector<double>& scales);

struct InertOrderRow {
  std::vector<int> j;      // multi-index, sum(j) <= tested order
  double sup_ratio = 0.0;  // max over the grid of |x^j d^j w| / X^{|j|}
};

struct InertReport {
  std::vector<InertOrderRow> rows;
  std::vector<double> worst_by_order;  // index = total order |j|
  bool pass = false;
};

// limits[k] bounds worst_by_order[k]; the default limits are the bump
// product family's own constants with ~2x headroom, so "pass" means
// "no worse than a plain dyadic bump".
InertReport certify_inert(const InertFamily& family, int orders = 4,
                          std::vector<double> limits = {});

cplx inert_fourier(const InertFamily& family, double t);  // int w e(-t x) dx
cplx inert_mellin(const InertFamily& family, cplx s);     // int w x^{s-1} dx

struct DecayRow {
  double A = 0.0;
  double sup_ratio = 0.0;  // sup_t |transform| / envelope_A(t)
};

struct DecayReport {
  std::vector<DecayRow> fourier;  // envelope X1 (1 + |t| X1/X)^{-A}
  std::vector<DecayRow> mellin;   // envelope of (1 + |Im s|/X)^{-A} on Re s = 1/2
  double knee = 0.0;              // smallest T with |w^| below 5% of peak beyond
  double peak = 0.0;
};

DecayReport fourier_truncation_check(const InertFamily& family,
                                     const std::vector<double>& As = {2, 4, 8});

struct PhaseSpec {
  std::function<double(double)> phase;    // psi(t), radians
  std::function<double(double)> dphase;   // psi'
  std::function<double(double)> d2phase;  // psi''
  double Y = 1.0;  // phase magnitude scale over the support
  double Z = 1.0;  // support length scale
};

struct StationaryPhaseResult {
  cplx value{0.0, 0.0};          // I, by quadrature
  bool has_critical_point = false;
  bool boundary_flag = false;    // t0 too close to a support edge to trust
  double t0 = 0.0;
  cplx leading{0.0, 0.0};        // stationary-phase main term (0 if no t0)
  double scaling_bound = 0.0;    // 10 Z / sqrt(Y)
};

// family must be 1-d; the phase functions are evaluated on its box.
StationaryPhaseResult stationary_phase_eval(const InertFamily& family,
                                            const PhaseSpec& phase);

// The post-Poisson Bessel phase psi(t) = 2 pi (-k t / c + 2 sqrt(t m1 n a)/c)
// against weight bump(t/M2); critical point t0 = m1 n a / k^2.  Reports the
// quadrature value against both the exact leading term and the scaling form
// sqrt(c) M2 / (a m1 n)^{1/4} bump(t0/M2).
struct SqrtPhaseRow {
  double M2;
  int64_t k, c, m1, n, a;
  double t0 = 0.0;
  double abs_value = 0.0;
  double leading_abs = 0.0;   // |leading asymptotic|
  double scaling_pred = 0.0;  // sqrt(c) M2 (a m1 n)^{-1/4} bump(t0/M2)
  double ratio_leading = 0.0;
  double ratio_scaling = 0.0;
};

SqrtPhaseRow sqrt_phase_case(double M2, int64_t k, int64_t c, int64_t m1,
                             int64_t n, int64_t a);

}  // namespace momentlab
