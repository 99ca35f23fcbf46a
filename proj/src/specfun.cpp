#include "momentlab/specfun.hpp"

#include <cmath>
#include <stdexcept>

namespace momentlab {

namespace {

constexpr double kLanczosG = 607.0 / 128.0;
// Godfrey's 15-term coefficient set for g = 607/128.
constexpr double kLanczosC[15] = {
    0.99999999999999709182,     57.156235665862923517,
    -59.597960355475491248,     14.136097974741747174,
    -0.49191381609762019978,    3.3994649984811888699e-5,
    4.6523628927048575665e-5,   -9.8374475304879564677e-5,
    1.5808870322491248884e-4,   -2.1026444172410488319e-4,
    2.1743961811521264320e-4,   -1.6431810653676389022e-4,
    8.4418223983852743293e-5,   -2.6190838401581408670e-5,
    3.6899182659531622704e-6};

constexpr double kEulerGamma = 0.57721566490153286061;

cplx lanczos_sum(cplx z) {
  cplx acc(kLanczosC[0], 0.0);
  for (int k = 1; k < 15; ++k) acc += kLanczosC[k] / (z + static_cast<double>(k - 1));
  return acc;
}

bool is_nonpositive_integer(cplx z) {
  return z.imag() == 0.0 && z.real() <= 0.0 &&
         z.real() == std::floor(z.real());
}

// Asymptotic Hankel series, kind = +1 for H1, -1 for H2.  Superasymptotic
// truncation: stop before the first growing term.
cplx hankel_asym(cplx nu, cplx z, int kind) {
  cplx nu2 = 4.0 * nu * nu;
  cplx rot = kind > 0 ? cplx(0.0, 1.0) : cplx(0.0, -1.0);
  cplx zinv = 1.0 / z;
  cplx a(1.0, 0.0), pw(1.0, 0.0), S(1.0, 0.0);
  double prev = 1e300;
  for (int k = 1; k <= 24; ++k) {
    double m = 2.0 * k - 1.0;
    a *= (nu2 - m * m) / (8.0 * k);
    pw *= rot * zinv;
    cplx term = a * pw;
    double mag = std::abs(term);
    if (mag > prev) break;
    S += term;
    prev = mag;
    if (mag < 1e-18) break;
  }
  cplx omega = z - (0.5 * nu + 0.25) * PI;
  cplx phase = std::exp(cplx(0.0, static_cast<double>(kind)) * omega);
  return std::sqrt(2.0 / (PI * z)) * phase * S;
}

cplx bessel_J_series(cplx nu, double x) {
  double h = 0.5 * x;
  cplx term = std::exp(nu * std::log(h)) / gamma_complex(nu + 1.0);
  cplx sum = term;
  double q = -h * h;
  for (int j = 1; j <= 90; ++j) {
    term *= q / (static_cast<double>(j) * (nu + static_cast<double>(j)));
    sum += term;
    if (j > 4 && std::abs(term) <= 1e-17 * (std::abs(sum) + 1e-290)) break;
  }
  return sum;
}

// Y_0 by its log series (x in the series range).
double bessel_Y0_series(double x) {
  double h = 0.5 * x, q = h * h;
  double j0 = bessel_J_series(cplx(0.0, 0.0), x).real();
  double term = 1.0, Hk = 0.0, acc = 0.0;
  for (int k = 1; k <= 60; ++k) {
    term *= -q / (static_cast<double>(k) * k);
    Hk += 1.0 / k;
    acc -= term * Hk;  // (-1)^{k+1} H_k q^k / (k!)^2
    if (std::abs(term) < 1e-18) break;
  }
  return (2.0 / PI) * ((std::log(h) + kEulerGamma) * j0 + acc);
}

cplx bessel_Y_small(cplx nu, double x) {
  if (std::abs(nu) < 1e-12) return cplx(bessel_Y0_series(x), 0.0);
  if (nu.imag() == 0.0 && nu.real() == std::floor(nu.real()))
    throw std::domain_error(
        "hankel small-argument path: nonzero integer order not supported");
  cplx c = std::cos(PI * nu), s = std::sin(PI * nu);
  return (bessel_J(nu, x) * c - bessel_J(-nu, x)) / s;
}

void require_1d(const InertFamily& family, const char* who) {
  if (family.scales.size() != 1)
    throw std::invalid_argument(std::string(who) + ": needs a 1-d family");
}

// a_k(nu) coefficients of the Hankel asymptotic series, k = 0..n.
std::vector<cplx> hankel_a_coeffs(cplx nu, int n) {
  std::vector<cplx> a(n + 1);
  a[0] = 1.0;
  cplx nu2 = 4.0 * nu * nu;
  for (int k = 1; k <= n; ++k) {
    double m = 2.0 * k - 1.0;
    a[k] = a[k - 1] * (nu2 - m * m) / (8.0 * k);
  }
  return a;
}

}  // namespace

cplx gamma_complex(cplx z) {
  if (is_nonpositive_integer(z))
    throw std::domain_error("gamma_complex: pole at nonpositive integer");
  if (z.real() < 0.5)
    return PI / (std::sin(PI * z) * gamma_complex(1.0 - z));
  cplx t = z + (kLanczosG - 0.5);
  return std::sqrt(2.0 * PI) * std::pow(t, z - 0.5) * std::exp(-t) *
         lanczos_sum(z);
}

cplx log_gamma_complex(cplx z) {
  if (z.real() <= 0.0)
    throw std::domain_error("log_gamma_complex: requires Re z > 0");
  if (z.real() < 0.5) return log_gamma_complex(z + 1.0) - std::log(z);
  cplx t = z + (kLanczosG - 0.5);
  return 0.5 * std::log(2.0 * PI) + (z - 0.5) * std::log(t) - t +
         std::log(lanczos_sum(z));
}

cplx bessel_J(cplx nu, double x) {
  if (x < 0.0) throw std::invalid_argument("bessel_J: x must be >= 0");
  if (nu.imag() == 0.0 && nu.real() < 0.0 &&
      nu.real() == std::floor(nu.real())) {
    double m = -nu.real();
    double sign = std::fmod(m, 2.0) == 0.0 ? 1.0 : -1.0;
    return sign * bessel_J(cplx(m, 0.0), x);
  }
  if (x == 0.0) {
    if (std::abs(nu) == 0.0) return cplx(1.0, 0.0);
    if (nu.real() > 0.0) return cplx(0.0, 0.0);
    throw std::domain_error("bessel_J: singular at x = 0 for Re nu < 0");
  }
  if (x <= 10.0) return bessel_J_series(nu, x);
  return 0.5 * (hankel_asym(nu, cplx(x, 0.0), +1) +
                hankel_asym(nu, cplx(x, 0.0), -1));
}

cplx hankel1(cplx nu, cplx z) {
  if (std::abs(z) >= 10.0) return hankel_asym(nu, z, +1);
  if (z.imag() != 0.0)
    throw std::domain_error("hankel1: small |z| supported for real z only");
  double x = z.real();
  return bessel_J(nu, x) + cplx(0.0, 1.0) * bessel_Y_small(nu, x);
}

cplx hankel2(cplx nu, cplx z) {
  if (std::abs(z) >= 10.0) return hankel_asym(nu, z, -1);
  if (z.imag() != 0.0)
    throw std::domain_error("hankel2: small |z| supported for real z only");
  double x = z.real();
  return bessel_J(nu, x) - cplx(0.0, 1.0) * bessel_Y_small(nu, x);
}

double bessel_K2it(double t, double x) {
  if (x <= 0.0) throw std::invalid_argument("bessel_K2it: x must be > 0");
  double U = x >= 60.0 ? 1.0 : std::acosh(60.0 / x);
  auto f = [&](double u) {
    return cplx(std::exp(-x * std::cosh(u)) * std::cos(2.0 * t * u), 0.0);
  };
  int panels = static_cast<int>(2.0 * std::abs(t) * U / 1.5) + 4;
  double tol = 4e-15 * std::exp(-std::min(x, 600.0)) * std::max(U, 1.0);
  return integrate_panels(f, 0.0, U, panels, tol).value.real();
}

cplx mellin_J_closed(cplx s, cplx nu) {
  return std::exp((s - 1.0) * std::log(2.0)) * gamma_complex(0.5 * (s + nu)) /
         gamma_complex(0.5 * (nu - s) + 1.0);
}

cplx mellin_K_closed(cplx s, double t) {
  return std::exp((s - 2.0) * std::log(2.0)) *
         gamma_complex(0.5 * s + cplx(0.0, t)) *
         gamma_complex(0.5 * s - cplx(0.0, t));
}

MellinPoint mellin_J_quadrature(cplx s, cplx nu) {
  if ((s + nu).real() <= 0.0 || s.real() >= 1.5)
    throw std::domain_error("mellin_J_quadrature: need Re(s+nu) > 0, Re s < 3/2");
  const double X0 = 50.0;
  // x <= 1 in log coordinates: the integrand is x^{s+nu-1}(1 + O(x^2)), so
  // v = log x turns the endpoint power into a clean exponential decay.
  double V = 38.0 / (s + nu).real();
  auto low_f = [&](double v) {
    return bessel_J(nu, std::exp(v)) * std::exp(s * v);
  };
  int low_panels = static_cast<int>(std::abs((s + nu).imag()) * V / 1.5) + 6;
  QuadResult low = integrate_panels(low_f, -V, 0.0, low_panels, 1e-12);
  auto mid_f = [&](double x) {
    return bessel_J(nu, x) * std::exp((s - 1.0) * std::log(x));
  };
  QuadResult head = integrate_panels(mid_f, 1.0, X0, 24, 1e-11);
  // J = (H1 + H2)/2; rotate the H1 half up (decays exp(-tau)), H2 down.
  auto ray = [&](int kind) {
    return integrate(
        [&](double tau) {
          cplx z(X0, kind > 0 ? tau : -tau);
          return hankel_asym(nu, z, kind) * std::exp((s - 1.0) * std::log(z));
        },
        0.0, 45.0, 1e-12);
  };
  QuadResult up = ray(+1), down = ray(-1);
  cplx tail = 0.5 * (cplx(0.0, 1.0) * up.value + cplx(0.0, -1.0) * down.value);
  MellinPoint p;
  p.s = s;
  p.method = "quadrature";
  p.value = low.value + head.value + tail;
  p.est_error = low.err_estimate + head.err_estimate +
                0.5 * (up.err_estimate + down.err_estimate);
  return p;
}

MellinPoint mellin_K_quadrature(cplx s, double t) {
  if (s.real() <= 0.0)
    throw std::domain_error("mellin_K_quadrature: need Re s > 0");
  double V = 38.0 / s.real();
  auto low_f = [&](double v) {
    return bessel_K2it(t, std::exp(v)) * std::exp(s * v);
  };
  int low_panels = static_cast<int>(2.0 * std::abs(t) * V / 1.5) + 6;
  QuadResult low = integrate_panels(low_f, -V, 0.0, low_panels, 1e-11);
  auto high_f = [&](double x) {
    return cplx(bessel_K2it(t, x), 0.0) * std::exp((s - 1.0) * std::log(x));
  };
  QuadResult high = integrate_panels(high_f, 1.0, 40.0, 8, 1e-11);
  MellinPoint p;
  p.s = s;
  p.method = "quadrature";
  p.value = low.value + high.value;
  p.est_error = low.err_estimate + high.err_estimate;
  return p;
}

cplx h_plus(cplx s, double t) {
  return (1.0 / PI) * std::exp((s - 1.0) * std::log(2.0)) *
         std::cos(0.5 * PI * s) * gamma_complex(0.5 * s + cplx(0.0, t)) *
         gamma_complex(0.5 * s - cplx(0.0, t));
}

cplx h_minus(cplx s, double t) {
  return (1.0 / PI) * std::exp((s - 1.0) * std::log(2.0)) * std::cosh(PI * t) *
         gamma_complex(0.5 * s + cplx(0.0, t)) *
         gamma_complex(0.5 * s - cplx(0.0, t));
}

cplx h_holo(cplx s, double k) {
  // Log form so the ratio survives orders the raw gammas would overflow.
  return std::exp((s - 1.0) * std::log(2.0) +
                  log_gamma_complex(0.5 * (s + k - 1.0)) -
                  log_gamma_complex(0.5 * (k + 1.0 - s)));
}

TransformCheckRow check_phi_holomorphic(const InertFamily& phi, int k,
                                        double X) {
  require_1d(phi, "check_phi_holomorphic");
  double a = phi.scales[0], b = 2.0 * a;
  auto w = [&](double y) {
    std::vector<double> v{y};
    return phi.eval(v);
  };
  QuadResult direct = integrate(
      [&](double y) { return bessel_J(cplx(k - 1.0, 0.0), X / y) * w(y); }, a,
      b, 1e-12);
  double lx = std::log(X);
  auto f = [&](cplx s) {
    return h_holo(s, k) * inert_mellin(phi, s + 1.0) * std::exp(-s * lx);
  };
  // |h(sigma+i tau, k)| ~ tau^{sigma-1} has no exponential decay, so the
  // truncation error rides on the weight's Mellin falloff alone.  Running at
  // sigma = 0.3 buys an extra tau^{-0.7} and the line is carried to 140.
  cplx mellin = vertical_line_sum(f, 0.3, 140.0, 0.05) / (2.0 * PI * cplx(0.0, 1.0));
  TransformCheckRow row;
  row.label = "phi_h k=" + std::to_string(k);
  row.direct = direct.value;
  row.mellin = mellin;
  row.rel = std::abs(direct.value - mellin) /
            std::max(std::abs(direct.value), 1e-300);
  return row;
}

TransformCheckRow check_phi_minus(const InertFamily& phi, double t, double X) {
  require_1d(phi, "check_phi_minus");
  double a = phi.scales[0], b = 2.0 * a;
  auto w = [&](double y) {
    std::vector<double> v{y};
    return phi.eval(v);
  };
  double ch = std::cosh(PI * t);
  QuadResult direct = integrate(
      [&](double v) {
        return cplx((2.0 / PI) * ch * bessel_K2it(t, X / v) * w(v), 0.0);
      },
      a, b, 1e-12);
  double lx = std::log(X);
  auto f = [&](cplx s) {
    return h_minus(s, t) * inert_mellin(phi, s + 1.0) * std::exp(-s * lx);
  };
  cplx mellin = vertical_line_sum(f, 2.0, 60.0, 0.05) / (2.0 * PI * cplx(0.0, 1.0));
  TransformCheckRow row;
  row.label = "phi_minus t=" + std::to_string(t);
  row.direct = direct.value;
  row.mellin = mellin;
  row.rel = std::abs(direct.value - mellin) /
            std::max(std::abs(direct.value), 1e-300);
  return row;
}

std::vector<TransformCheckRow> kuznetsov_transform_consistency(
    const InertFamily& phi, double X) {
  std::vector<TransformCheckRow> rows;
  rows.push_back(check_phi_holomorphic(phi, 4, X));
  rows.push_back(check_phi_minus(phi, 0.0, X));
  rows.push_back(check_phi_holomorphic(phi, 2, X));
  return rows;
}

cplx script_H(const HKernelArgs& args) {
  if (args.kappa < 2 || args.kappa % 2 != 0)
    throw std::invalid_argument("script_H: kappa must be even and >= 2");
  double hk = 0.5 * args.kappa;
  cplx wu = args.w + args.u;
  cplx swu = args.s + wu;
  if (!(args.s.real() < hk && wu.real() < hk && swu.real() > 0.0))
    throw std::domain_error("script_H: outside the holomorphy region");
  double sign = (args.kappa / 2) % 2 == 0 ? 1.0 : -1.0;
  return sign * std::exp((swu - 1.0) * std::log(2.0 * PI)) * gamma_complex(swu) *
         gamma_complex(hk - wu) * gamma_complex(hk - args.s) /
         (gamma_complex(hk + args.s) * gamma_complex(hk + wu));
}

cplx hankel_J_mellin_closed(cplx nu, cplx mu, cplx lambda) {
  cplx num = gamma_complex(1.0 - lambda) *
             gamma_complex(0.5 * (nu + mu + lambda)) *
             gamma_complex(0.5 * (mu - nu + lambda));
  cplx den = gamma_complex(0.5 * (nu + mu - lambda) + 1.0) *
             gamma_complex(0.5 * (mu - nu - lambda) + 1.0);
  cplx phase = std::exp(cplx(0.0, -0.5 * PI) * (mu - nu + lambda));
  return cplx(0.0, 1.0) * std::exp((lambda - 1.0) * std::log(2.0)) * num /
         (PI * den) * phase;
}

HankelJRow hankel_J_mellin_check(cplx nu, double mu, double lambda) {
  HankelJRow row;
  row.nu = nu;
  row.mu = mu;
  row.lambda = lambda;
  row.closed = hankel_J_mellin_closed(nu, cplx(mu, 0.0), cplx(lambda, 0.0));

  const double X0 = 50.0;
  cplx s = cplx(lambda, 0.0);
  auto head_f = [&](double x) {
    if (x <= 0.0) return cplx(0.0, 0.0);
    return hankel2(nu, cplx(x, 0.0)) * bessel_J(cplx(mu, 0.0), x) *
           std::exp((s - 1.0) * std::log(x));
  };
  QuadResult head = integrate_panels(head_f, 0.0, X0, 24, 1e-11);

  // Tail, H2*H1 half: the phases cancel, so the product is the asymptotic
  // series (2/(pi x)) e^{i pi (nu-mu)/2} sum_m d_m x^{-m} and each power
  // integrates in closed form.
  const int n = 12;
  std::vector<cplx> av = hankel_a_coeffs(nu, n), au = hankel_a_coeffs(cplx(mu, 0.0), n);
  cplx tail1(0.0, 0.0);
  for (int m = 0; m <= n; ++m) {
    cplx dm(0.0, 0.0);
    for (int j = 0; j <= m; ++j) {
      cplx ij = std::exp(cplx(0.0, 0.5 * PI * (m - 2 * j)));  // (-i)^j i^{m-j}
      dm += ij * av[j] * au[m - j];
    }
    // int_{X0}^inf x^{lambda-2-m} dx = X0^{lambda-1-m} / (m+1-lambda)
    tail1 += dm * std::exp((s - 1.0 - static_cast<double>(m)) * std::log(X0)) /
             (static_cast<double>(m) + 1.0 - s);
  }
  tail1 *= std::exp(cplx(0.0, 0.5 * PI) * (nu - cplx(mu, 0.0))) / PI;

  // Tail, H2*H2 half: phase e^{-2ix}, rotated down where it dies as e^{-2tau}.
  QuadResult t2 = integrate(
      [&](double tau) {
        cplx z(X0, -tau);
        return hankel_asym(nu, z, -1) * hankel_asym(cplx(mu, 0.0), z, -1) *
               std::exp((s - 1.0) * std::log(z));
      },
      0.0, 22.0, 1e-12);
  cplx tail2 = 0.5 * cplx(0.0, -1.0) * t2.value;

  row.quad = head.value + tail1 + tail2;
  row.est_error = head.err_estimate + t2.err_estimate;
  row.rel = std::abs(row.quad - row.closed) / std::abs(row.closed);
  return row;
}

namespace {

// Inner integral of the double-Bessel identity on its three-leg contour:
// up the e^{i pi/4} ray to |t| = t0 = sqrt(A/B), across the |t| = t0 arc
// (where the phase is purely oscillatory), down the e^{-i pi/4} ray.  On the
// rays the exponent's real part is -sqrt(2) pi |A/tau - B tau|, so both ends
// are truncated where that reaches ~45.
cplx oscillatory_pair_integral(double A, double B, cplx nu0, double* err) {
  double t0 = std::sqrt(A / B);
  const double T = 45.0 / (std::sqrt(2.0) * PI);
  double root = std::sqrt(T * T + 4.0 * A * B);
  double tau_lo = 2.0 * A / (T + root);
  double tau_hi = (T + root) / (2.0 * B);
  const cplx e_p = std::exp(cplx(0.0, 0.25 * PI));
  const cplx e_m = std::conj(e_p);
  auto f = [&](cplx t) {
    return std::exp(cplx(0.0, -2.0 * PI) * (A / t + B * t)) *
           std::exp((nu0 - 1.0) * std::log(t));
  };
  QuadResult leg1 = integrate_panels(
      [&](double tau) { return f(tau * e_p); }, tau_lo, t0, 24, 1e-10);
  double arc_phase = 4.0 * PI * std::sqrt(A * B) * (1.0 - std::cos(0.25 * PI));
  int arc_panels = static_cast<int>(arc_phase / 1.5) + 6;
  QuadResult arc = integrate_panels(
      [&](double th) {
        cplx t = t0 * std::exp(cplx(0.0, th));
        return f(t) * cplx(0.0, 1.0) * t;
      },
      -0.25 * PI, 0.25 * PI, arc_panels, 1e-10);
  QuadResult leg3 = integrate_panels(
      [&](double tau) { return f(tau * e_m); }, t0, tau_hi, 24, 1e-10);
  if (err) *err = leg1.err_estimate + arc.err_estimate + leg3.err_estimate;
  // The path traverses the arc from +pi/4 down to -pi/4.
  return e_p * leg1.value - arc.value + e_m * leg3.value;
}

}  // namespace

ScriptICheck script_I_check(const ScriptIArgs& args) {
  cplx nu0 = args.s - args.w - args.u;
  if (!(nu0.real() > 0.0 && nu0.real() < 1.0))
    throw std::domain_error("script_I_check: need 0 < Re(s-w-u) < 1");
  double m1 = static_cast<double>(args.m1), a = static_cast<double>(args.a);
  double c = static_cast<double>(args.c), k = static_cast<double>(args.k);
  double B = k / c;
  double bessel_scale = 4.0 * PI * std::sqrt(m1 * a) / c;

  // Outer integral in zeta = sqrt(z):  I = 2 int_0^Z J_{kappa-1}(c1 zeta)
  // zeta^{-2s} Inner(zeta^2) d zeta.  The integrand falls off like
  // zeta^{-2 Re s - 1} times the saddle width zeta^{1/2}, and the surviving
  // (constant-phase) part of the tail beyond Z is a few 1e-5 relative.
  const double Z = 30.0;
  auto outer_f = [&](double zeta) {
    if (zeta <= 0.0) return cplx(0.0, 0.0);
    double z = zeta * zeta;
    double A = m1 * a * z / (c * k);
    cplx inner = oscillatory_pair_integral(A, B, nu0, nullptr);
    return 2.0 * bessel_J(cplx(args.kappa - 1.0, 0.0), bessel_scale * zeta) *
           std::exp(-2.0 * args.s * std::log(zeta)) * inner;
  };
  int panels = static_cast<int>(Z * (2.0 * bessel_scale) / 1.5) + 40;
  QuadResult outer = integrate_panels(outer_f, 0.0, Z, panels, 1e-8);

  // The closed side carries e^{i pi (s+w+u)/2} on top of the script-H
  // gamma block: tracking the phases through the Hankel-J evaluation gives
  // (-i)^kappa e^{i pi (s+w+u)/2} = (-1)^{kappa/2} e^{i pi (s+w+u)/2}, and
  // the numeric double integral (plus the independent Hankel-Mellin route)
  // confirms the factor at the 1e-5 level.
  HKernelArgs h{args.s, args.w, args.u, args.kappa};
  cplx swu = args.s + args.w + args.u;
  cplx closed = script_H(h) * std::exp(cplx(0.0, 0.5 * PI) * swu) *
                std::exp(-nu0 * std::log(k)) *
                std::exp((args.s - 0.5) * std::log(a * m1)) *
                std::exp((1.0 - swu) * std::log(c));

  ScriptICheck out;
  out.numeric = outer.value;
  out.closed = closed;
  out.rel = std::abs(out.numeric - out.closed) / std::abs(out.closed);
  return out;
}

}  // namespace momentlab
