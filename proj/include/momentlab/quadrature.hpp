#pragma once
// Adaptive Simpson quadrature for complex-valued integrands on real
// intervals, plus helpers for contour legs: integration along complex rays
// and uniform trapezoid sums on vertical lines (exponentially accurate for
// analytic integrands that decay).

#include <complex>
#include <functional>
#include <limits>

#include "momentlab/base.hpp"

namespace momentlab {

namespace detail {

template <class F>
cplx simpson_step(const F& f, double a, double b, cplx fa, cplx fm, cplx fb,
                  cplx whole, double tol, int depth, double* err_acc) {
  double m = 0.5 * (a + b);
  double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
  cplx flm = f(lm), frm = f(rm);
  cplx left = (fa + 4.0 * flm + fm) * ((m - a) / 6.0);
  cplx right = (fm + 4.0 * frm + fb) * ((b - m) / 6.0);
  cplx delta = left + right - whole;
  // Two stopping guards besides the tolerance: once delta is a few ulps of
  // the panel sums it is pure roundoff, and once the interval width nears
  // the spacing of doubles at |x| further splitting cannot resolve anything.
  // Without them, integrand noise makes the tol/2 splitting race the
  // shrinking delta all the way to max depth.
  double noise = 32.0 * std::numeric_limits<double>::epsilon() *
                 (std::abs(left) + std::abs(right) + std::abs(whole));
  bool unresolvable =
      (b - a) <= 256.0 * std::numeric_limits<double>::epsilon() *
                     std::max(std::abs(a), std::abs(b));
  if (depth <= 0 || unresolvable ||
      std::abs(delta) <= std::max(15.0 * tol, noise)) {
    *err_acc += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  return simpson_step(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1, err_acc) +
         simpson_step(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1, err_acc);
}

}  // namespace detail

struct QuadResult {
  cplx value{0.0, 0.0};
  double err_estimate{0.0};
};

// Adaptive Simpson on [a,b] with absolute tolerance tol.
template <class F>
QuadResult integrate(const F& f, double a, double b, double tol = 1e-10,
                     int max_depth = 48) {
  if (a == b) return {};
  QuadResult r;
  cplx fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
  cplx whole = (fa + 4.0 * fm + fb) * ((b - a) / 6.0);
  r.value = detail::simpson_step(f, a, b, fa, fm, fb, whole, tol, max_depth,
                                 &r.err_estimate);
  return r;
}

// Uniform panels with adaptive refinement inside each; for oscillatory
// integrands pick n so every panel sees O(1) radians, which keeps the
// adaptive error test honest (a single Simpson estimate over many cycles
// can false-converge).
template <class F>
QuadResult integrate_panels(const F& f, double a, double b, int n,
                            double tol = 1e-10, int max_depth = 32) {
  if (n < 1) n = 1;
  QuadResult acc;
  double w = (b - a) / n;
  for (int i = 0; i < n; ++i) {
    QuadResult r =
        integrate(f, a + i * w, a + (i + 1) * w, tol / n, max_depth);
    acc.value += r.value;
    acc.err_estimate += r.err_estimate;
  }
  return acc;
}

// Integrate f over the ray z = z0 + t*dir, t in [0, tmax]:
//   \int f(z) dz = dir * \int_0^{tmax} f(z0 + t dir) dt.
template <class F>
QuadResult integrate_ray(const F& f, cplx z0, cplx dir, double tmax,
                         double tol = 1e-10, int max_depth = 48) {
  auto g = [&](double t) { return f(z0 + t * dir); };
  QuadResult r = integrate(g, 0.0, tmax, tol, max_depth);
  r.value *= dir;
  r.err_estimate *= std::abs(dir);
  return r;
}

// Trapezoid sum of f over the vertical segment s = sigma + i*v, v in
// [-vmax, vmax], step h, as a contour integral (ds = i dv):
//   \int f(s) ds  approx  i*h * sum f(sigma + i k h).
template <class F>
cplx vertical_line_sum(const F& f, double sigma, double vmax, double h) {
  cplx acc = f(cplx(sigma, 0.0));
  int n = static_cast<int>(vmax / h);
  for (int k = 1; k <= n; ++k) {
    acc += f(cplx(sigma, k * h)) + f(cplx(sigma, -k * h));
  }
  return cplx(0.0, 1.0) * h * acc;
}

}  // namespace momentlab
