#include "momentlab/oscillatory.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "momentlab/quadrature.hpp"

namespace momentlab {

namespace {

double binom_d(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  k = std::min(k, n - k);
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Odometer over 0 <= t[i] <= hi[i]; false once every digit has wrapped.
bool advance(std::vector<int>& t, const std::vector<int>& hi) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (++t[i] <= hi[i]) return true;
    t[i] = 0;
  }
  return false;
}

void collect_multi_indices(int dims, int budget, std::vector<int>& cur,
                           std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == dims) {
    out.push_back(cur);
    return;
  }
  for (int j = 0; j <= budget; ++j) {
    cur.push_back(j);
    collect_multi_indices(dims, budget - j, cur, out);
    cur.pop_back();
  }
}

void require_1d(const InertFamily& family, const char* who) {
  if (family.scales.size() != 1)
    throw std::invalid_argument(std::string(who) + ": need a 1-d family");
}

// Default certification limits, indexed by total order.  Measured on
// bump_family over 1-3 dimensional boxes (the pure one-axis derivative
// always dominates the mixed indices: 1, 9.02, 133.3, 4414, 1.48e5) and
// doubled, so the default "pass" means "no worse than a plain dyadic bump
// product".
const double kBumpLimits[] = {1.5, 18.0, 270.0, 8900.0, 3.0e5};

}  // namespace

double smoothstep(int n, double t) {
  if (t <= 0.0) return 0.0;
  if (t >= 1.0) return 1.0;
  // The alternating series is ill-conditioned toward t = 1 (its terms reach
  // ~1e6 for n = 8 while the value stays below 1); the exact symmetry
  // S_n(t) = 1 - S_n(1-t) keeps the evaluation point in (0, 1/2], which
  // holds the absolute noise near 1e-13 instead of 1e-10.
  if (t > 0.5) return 1.0 - smoothstep(n, 1.0 - t);
  // S_n(t) = t^{n+1} sum_{k=0}^n C(n+k,k) C(2n+1,n-k) (-t)^k
  double acc = 0.0, tk = 1.0;
  for (int k = 0; k <= n; ++k) {
    acc += binom_d(n + k, k) * binom_d(2 * n + 1, n - k) * tk;
    tk *= -t;
  }
  return std::pow(t, n + 1) * acc;
}

double bump(double x) {
  if (x <= 1.0 || x >= 2.0) return 0.0;
  double y = 2.0 * std::log2(x);
  return smoothstep(8, y) - smoothstep(8, y - 1.0);
}

InertFamily bump_family(const std::vector<double>& scales) {
  InertFamily fam;
  fam.scales = scales;
  fam.eval = [scales](const std::vector<double>& x) {
    double w = 1.0;
    for (std::size_t i = 0; i < scales.size(); ++i) w *= bump(x[i] / scales[i]);
    return w;
  };
  return fam;
}

InertReport certify_inert(const InertFamily& family, int orders,
                          std::vector<double> limits) {
  const int d = static_cast<int>(family.scales.size());
  if (d == 0) throw std::invalid_argument("certify_inert: empty family");
  if (orders < 0) throw std::invalid_argument("certify_inert: orders < 0");
  if (limits.empty())
    limits.assign(kBumpLimits, kBumpLimits + std::min(orders + 1, 5));
  while (static_cast<int>(limits.size()) < orders + 1)
    limits.push_back(limits.back() * 12.0);

  std::vector<std::vector<int>> indices;
  std::vector<int> scratch;
  collect_multi_indices(d, orders, scratch, indices);

  const int grid = 16;       // sample points per axis
  const double hrel = 0.02;  // stencil step, relative to the axis scale
  // Irrational stagger (2 - golden ratio): a half-integer offset can land
  // every sample on a zero of an oscillation commensurate with the grid,
  // e.g. cos(2 pi N x) on [1,2] with N a multiple of grid/2.
  const double stagger = 0.3819660112501051;

  InertReport rep;
  rep.worst_by_order.assign(orders + 1, 0.0);
  const std::vector<int> grid_hi(d, grid - 1);
  std::vector<double> x(d), xs(d);
  for (const auto& j : indices) {
    int total = 0;
    for (int ji : j) total += ji;
    InertOrderRow row;
    row.j = j;
    std::vector<int> g(d, 0);
    do {
      for (int i = 0; i < d; ++i)
        x[i] = family.scales[i] * (1.0 + (g[i] + stagger) / grid);
      // tensor central difference for d^j, then multiply by x^j / h^j
      double est = 0.0;
      std::vector<int> t(d, 0);
      do {
        double wgt = 1.0;
        for (int i = 0; i < d; ++i) {
          wgt *= ((t[i] & 1) ? -1.0 : 1.0) * binom_d(j[i], t[i]);
          xs[i] = x[i] + (0.5 * j[i] - t[i]) * hrel * family.scales[i];
        }
        est += wgt * family.eval(xs);
      } while (advance(t, j));
      double mono = 1.0;
      for (int i = 0; i < d; ++i)
        mono *= std::pow(x[i] / (hrel * family.scales[i]), j[i]);
      double ratio = std::abs(est) * mono / std::pow(family.X, total);
      row.sup_ratio = std::max(row.sup_ratio, ratio);
    } while (advance(g, grid_hi));
    rep.worst_by_order[total] =
        std::max(rep.worst_by_order[total], row.sup_ratio);
    rep.rows.push_back(std::move(row));
  }
  rep.pass = true;
  for (int k = 0; k <= orders; ++k)
    if (rep.worst_by_order[k] > limits[k]) rep.pass = false;
  return rep;
}

cplx inert_fourier(const InertFamily& family, double t) {
  require_1d(family, "inert_fourier");
  double a = family.scales[0], b = 2.0 * a;
  int panels =
      static_cast<int>(2.0 * PI * std::abs(t) * (b - a) / 1.5) + 4;
  auto f = [&](double x) {
    std::vector<double> v{x};
    double p = 2.0 * PI * t * x;
    return family.eval(v) * cplx(std::cos(p), -std::sin(p));
  };
  return integrate_panels(f, a, b, panels, 1e-12 * (b - a)).value;
}

cplx inert_mellin(const InertFamily& family, cplx s) {
  require_1d(family, "inert_mellin");
  double a = family.scales[0], b = 2.0 * a;
  int panels =
      static_cast<int>(std::abs(s.imag()) * std::log(2.0) / 1.5) + 4;
  auto f = [&](double x) {
    std::vector<double> v{x};
    return family.eval(v) * std::exp((s - 1.0) * std::log(x));
  };
  double scale = (b - a) * std::pow(a, s.real() - 1.0);
  return integrate_panels(f, a, b, panels, 1e-12 * scale).value;
}

DecayReport fourier_truncation_check(const InertFamily& family,
                                     const std::vector<double>& As) {
  require_1d(family, "fourier_truncation_check");
  const double X1 = family.scales[0];
  const double X = family.X;
  DecayReport rep;

  // Frequencies out to several times the expected knee X/X1 (plus the
  // bump's own spectral width, ~4 cycles, which dominates when X is small).
  const int npts = 600;
  const double tmax = (6.0 * std::max(X, 1.0) + 12.0) / X1;
  std::vector<double> ts(npts + 1), mag(npts + 1);
  for (int i = 0; i <= npts; ++i) {
    ts[i] = tmax * i / npts;
    mag[i] = std::abs(inert_fourier(family, ts[i]));
  }
  rep.peak = *std::max_element(mag.begin(), mag.end());

  // knee: smallest grid frequency beyond which nothing exceeds 5% of peak
  int idx = 0;
  double run_max = 0.0;
  for (int i = npts; i >= 0; --i) {
    run_max = std::max(run_max, mag[i]);
    if (run_max > 0.05 * rep.peak) {
      idx = i + 1;
      break;
    }
  }
  rep.knee = idx <= npts ? ts[idx] : tmax;

  for (double A : As) {
    DecayRow row{A, 0.0};
    for (int i = 0; i <= npts; ++i) {
      double env = X1 * std::pow(1.0 + ts[i] * X1 / X, -A);
      row.sup_ratio = std::max(row.sup_ratio, mag[i] / env);
    }
    rep.fourier.push_back(row);
  }

  // Mellin analogue on Re s = 1/2.  x^{i tau} oscillates in log x, so the
  // knee is scale-free; a phase e(X x / X1) on the box pushes it out to
  // tau ~ 2 pi X, hence that normalization in the envelope.
  const double taumax = 8.0 * PI * std::max(X, 1.0) + 60.0;
  std::vector<double> mmag(npts + 1);
  for (int i = 0; i <= npts; ++i)
    mmag[i] = std::abs(inert_mellin(family, cplx(0.5, taumax * i / npts)));
  for (double A : As) {
    DecayRow row{A, 0.0};
    for (int i = 0; i <= npts; ++i) {
      double env = std::sqrt(X1) *
                   std::pow(1.0 + taumax * i / npts / (2.0 * PI * X), -A);
      row.sup_ratio = std::max(row.sup_ratio, mmag[i] / env);
    }
    rep.mellin.push_back(row);
  }
  return rep;
}

StationaryPhaseResult stationary_phase_eval(const InertFamily& family,
                                            const PhaseSpec& phase) {
  require_1d(family, "stationary_phase_eval");
  const double a = family.scales[0], b = 2.0 * a;
  StationaryPhaseResult out;
  out.scaling_bound = 10.0 * phase.Z / std::sqrt(std::max(phase.Y, 1e-300));

  // One pass over psi' gives both the total phase variation (for panel
  // sizing) and any sign change (critical point, refined by bisection).
  const int probe = 512;
  const double dt = (b - a) / probe;
  double var = 0.0;
  double prev = phase.dphase(a);
  double crit = -1.0;
  for (int i = 1; i <= probe; ++i) {
    double t = a + i * dt;
    double cur = phase.dphase(t);
    var += 0.5 * (std::abs(prev) + std::abs(cur)) * dt;
    if (crit < 0.0 && (prev == 0.0 || (prev < 0.0) != (cur < 0.0))) {
      double lo = t - dt, hi = t;
      bool lo_neg = phase.dphase(lo) < 0.0;
      for (int it = 0; it < 80; ++it) {
        double mid = 0.5 * (lo + hi);
        if ((phase.dphase(mid) < 0.0) == lo_neg) lo = mid;
        else hi = mid;
      }
      crit = 0.5 * (lo + hi);
    }
    prev = cur;
  }

  int panels = static_cast<int>(var / 1.2) + 8;
  auto f = [&](double t) {
    std::vector<double> v{t};
    double w = family.eval(v);
    if (w == 0.0) return cplx(0.0, 0.0);
    double p = phase.phase(t);
    return w * cplx(std::cos(p), std::sin(p));
  };
  out.value = integrate_panels(f, a, b, panels, 1e-11 * (b - a)).value;

  if (crit >= 0.0) {
    out.has_critical_point = true;
    out.t0 = crit;
    double edge = 0.02 * (b - a);
    out.boundary_flag = (out.t0 < a + edge) || (out.t0 > b - edge);
    std::vector<double> v{out.t0};
    double w0 = family.eval(v);
    double p2 = phase.d2phase(out.t0);
    if (p2 != 0.0) {
      double amp = w0 * std::sqrt(2.0 * PI / std::abs(p2));
      double ph = phase.phase(out.t0) + (p2 > 0.0 ? PI / 4 : -PI / 4);
      out.leading = amp * cplx(std::cos(ph), std::sin(ph));
    }
  }
  return out;
}

SqrtPhaseRow sqrt_phase_case(double M2, int64_t k, int64_t c, int64_t m1,
                             int64_t n, int64_t a) {
  SqrtPhaseRow row;
  row.M2 = M2;
  row.k = k;
  row.c = c;
  row.m1 = m1;
  row.n = n;
  row.a = a;

  const double mna = static_cast<double>(m1) * n * a;
  const double C = static_cast<double>(c);
  const double K = static_cast<double>(k);

  InertFamily fam = bump_family({M2});
  PhaseSpec ps;
  ps.phase = [=](double t) {
    return 2.0 * PI * (-K * t / C + 2.0 * std::sqrt(t * mna) / C);
  };
  ps.dphase = [=](double t) {
    return 2.0 * PI * (-K + std::sqrt(mna / t)) / C;
  };
  ps.d2phase = [=](double t) {
    return -PI * std::sqrt(mna) / (C * t * std::sqrt(t));
  };
  ps.Y = 2.0 * PI * K * M2 / C;
  ps.Z = M2;

  StationaryPhaseResult r = stationary_phase_eval(fam, ps);
  row.t0 = mna / (K * K);
  row.abs_value = std::abs(r.value);
  row.leading_abs = std::abs(r.leading);
  row.scaling_pred =
      std::sqrt(C) * M2 / std::pow(mna, 0.25) * bump(row.t0 / M2);
  if (row.leading_abs > 0.0) row.ratio_leading = row.abs_value / row.leading_abs;
  if (row.scaling_pred > 0.0) row.ratio_scaling = row.abs_value / row.scaling_pred;
  return row;
}

}  // namespace momentlab
