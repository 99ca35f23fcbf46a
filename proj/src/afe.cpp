#include "momentlab/afe.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <unordered_map>

#include "momentlab/arith.hpp"
#include "momentlab/characters.hpp"
#include "momentlab/specfun.hpp"

namespace momentlab {

namespace {

bool is_prime(int64_t n) {
  if (n < 2) return false;
  FactoredInt f = factorize(n);
  return f.factors.size() == 1 && f.factors[0].second == 1;
}

uint64_t splitmix64(uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Trapezoid nodes u_j = sigma + i h j, |j| <= K, with everything except the
// x^{-u} factor folded into the coefficients.  eval() runs the remaining
// geometric factor e^{-i h j log x} as a Horner-style recurrence.
struct NodeTable {
  double sigma = 1.0;
  double h = 0.125;
  int K = 0;
  std::vector<cplx> c;  // index j + K

  double eval(double x) const {
    const double L = std::log(x);
    const cplx w{std::cos(h * L), -std::sin(h * L)};
    cplx p{std::cos(K * h * L), std::sin(K * h * L)};  // w^{-K}
    cplx acc{0.0, 0.0};
    for (int j = 0; j < 2 * K + 1; ++j) {
      acc += c[j] * p;
      p *= w;
    }
    return std::pow(x, -sigma) * acc.real();
  }
};

// pw = 1 for V1, 2 for V2/V; zeta_q factor included iff q > 0.
NodeTable make_vnodes(int pw, int kappa, int64_t q, int g_degree, double sigma,
                      double h, int K) {
  GFunction G{g_degree};
  const cplx g0 = gamma_factor(cplx(0.5, 0.0), kappa);
  NodeTable t;
  t.sigma = sigma;
  t.h = h;
  t.K = K;
  t.c.resize(2 * K + 1);
  for (int j = -K; j <= K; ++j) {
    const cplx u(sigma, h * j);
    const cplx r = gamma_factor(0.5 + u, kappa) / g0;
    cplx v = G(u) / u * (pw == 1 ? r : r * r) * (h / (2.0 * PI));
    if (q > 0) {
      const cplx s = 1.0 + 2.0 * u;
      v *= (1.0 - std::exp(-s * std::log(static_cast<double>(q)))) *
           riemann_zeta(s);
    }
    t.c[j + K] = v;
  }
  return t;
}

void check_vargs(double x, int kappa, int g_degree, double sigma) {
  if (!(x > 0.0)) throw std::domain_error("V_weight: x must be positive");
  if (kappa < 2 || kappa % 2 != 0)
    throw std::invalid_argument("V_weight: kappa must be a positive even int");
  if (g_degree < 1) throw std::invalid_argument("V_weight: g_degree < 1");
  if (!(sigma > 0.0))
    throw std::domain_error("V_weight: contour must stay right of u = 0");
}

// Shared geometry of the triple-contour tensor: nodes on Re(u) = 1 with the
// pairwise couplings Z[m] = zeta_q(3 + i h m) read off by node-index sums.
struct FaContourTables {
  double h = 0.35;
  int K = 19;  // |Im u| <= 6.65; the integrand there is ~e^{-40}
  std::vector<cplx> z;  // index m + 2K, m = j1 + j2 in [-2K, 2K]

  void build_z(int64_t q) {
    z.resize(4 * K + 1);
    for (int m = -2 * K; m <= 2 * K; ++m) {
      const cplx s(3.0, h * m);
      z[m + 2 * K] =
          (1.0 - std::exp(-s * std::log(static_cast<double>(q)))) *
          riemann_zeta(s);
    }
  }

  // c_j = (h/2pi) (G(u)/u) r(u) (ax)^{-u} on u = 1 + i h j.
  std::vector<cplx> axis(double ax, int kappa, int g_degree) const {
    NodeTable t = make_vnodes(1, kappa, 0, g_degree, 1.0, h, K);
    std::vector<cplx> out(2 * K + 1);
    const double L = std::log(ax);
    const cplx w{std::cos(h * L), -std::sin(h * L)};
    cplx p{std::cos(K * h * L), std::sin(K * h * L)};
    for (int j = 0; j < 2 * K + 1; ++j) {
      out[j] = t.c[j] * p / ax;
      p *= w;
    }
    return out;
  }
};

void check_fa_args(double x1, double x2, double x3, int64_t a, int64_t q) {
  if (a < 1) throw std::invalid_argument("F_a: a must be >= 1");
  if (!is_prime(q)) throw std::invalid_argument("F_a: q must be prime");
  if (a % q == 0) throw std::invalid_argument("F_a: a must be coprime to q");
  const double lo = (1.0 - 1e-9) / std::sqrt(static_cast<double>(q));
  if (!(x1 > lo) || !(x2 > lo) || !(x3 > lo))
    throw std::domain_error("F_a: arguments must exceed q^{-1/2}");
}

int kappa_default() { return 4; }

}  // namespace

cplx GFunction::operator()(cplx u) const {
  const cplx base = 1.0 - 4.0 * u * u;
  cplx p{1.0, 0.0};
  for (int i = 0; i < m; ++i) p *= base;
  return p * std::exp(u * u);
}

cplx gamma_factor(cplx s, int kappa) {
  if (kappa < 2 || kappa % 2 != 0)
    throw std::invalid_argument("gamma_factor: kappa must be a positive even");
  const double k2 = 0.5 * (kappa - 1);
  return std::exp(-s * std::log(PI)) * gamma_complex(0.5 * (s + k2)) *
         gamma_complex(0.5 * (s + k2 + 1.0));
}

double V_weight(VKind kind, double x, int kappa, int64_t q, int g_degree,
                double sigma) {
  check_vargs(x, kappa, g_degree, sigma);
  if (kind == VKind::V && !is_prime(q))
    throw std::invalid_argument("V_weight: kind V needs a prime q");
  const int pw = (kind == VKind::V1) ? 1 : 2;
  const int64_t zq = (kind == VKind::V) ? q : 0;
  NodeTable t = make_vnodes(pw, kappa, zq, g_degree, sigma, 0.125, 320);
  return t.eval(x);
}

double V_esum(double x, int kappa, int64_t q, int64_t emax, int g_degree) {
  check_vargs(x, kappa, g_degree, 1.0);
  if (!is_prime(q)) throw std::invalid_argument("V_esum: q must be prime");
  if (emax < 1) throw std::invalid_argument("V_esum: emax < 1");
  NodeTable t = make_vnodes(2, kappa, 0, g_degree, 1.0, 0.125, 320);
  double acc = 0.0;
  for (int64_t e = 1; e <= emax; ++e) {
    if (e % q == 0) continue;
    const double ex = static_cast<double>(e) * static_cast<double>(e) * x;
    acc += t.eval(ex) / static_cast<double>(e);
  }
  return acc;
}

double F_a(double x1, double x2, double x3, int64_t a, int64_t q, int g_degree,
           double arg_cutoff) {
  check_fa_args(x1, x2, x3, a, q);
  if (!(arg_cutoff > 0.0)) throw std::invalid_argument("F_a: bad cutoff");
  // |t| <= 8 keeps every node that matters at double precision (the dropped
  // remainder is ~e^{-63} of the peak); V1 arguments stay <= arg_cutoff, so
  // the e^{-i h j log x} recurrence is far from its aliasing limit.
  NodeTable v1 = make_vnodes(1, kappa_default(), 0, g_degree, 1.0, 0.125, 64);

  const double ad = static_cast<double>(a);
  const double xs[3] = {x1, x2, x3};
  int64_t P[3];
  std::vector<double> tab[3];
  for (int i = 0; i < 3; ++i) {
    P[i] = static_cast<int64_t>(arg_cutoff / (ad * xs[i]));
    tab[i].resize(P[i] + 1, 0.0);
    for (int64_t p = 1; p <= P[i]; ++p)
      tab[i][p] = v1.eval(ad * xs[i] * static_cast<double>(p));
  }
  const int64_t pmax = std::max({P[0], P[1], P[2], int64_t(1)});
  std::vector<double> inv(pmax + 1, 0.0);
  for (int64_t e = 1; e <= pmax; ++e) inv[e] = 1.0 / static_cast<double>(e);

  double acc = 0.0;
  for (int64_t e1 = 1; e1 <= std::min(P[0], P[1]); ++e1) {
    if (e1 % q == 0) continue;
    const int64_t e2max = std::min(P[0] / e1, P[2]);
    for (int64_t e2 = 1; e2 <= e2max; ++e2) {
      if (e2 % q == 0) continue;
      const double t12 = tab[0][e1 * e2] * inv[e1] * inv[e2];
      if (t12 == 0.0) continue;
      const int64_t e3max = std::min(P[1] / e1, P[2] / e2);
      double inner = 0.0;
      for (int64_t e3 = 1; e3 <= e3max; ++e3) {
        if (e3 % q == 0) continue;
        inner += tab[1][e1 * e3] * tab[2][e2 * e3] * inv[e3];
      }
      acc += t12 * inner;
    }
  }
  return acc;
}

double F_a_contour(double x1, double x2, double x3, int64_t a, int64_t q,
                   int g_degree) {
  check_fa_args(x1, x2, x3, a, q);
  FaContourTables ct;
  ct.build_z(q);
  const double ad = static_cast<double>(a);
  const std::vector<cplx> c1 = ct.axis(ad * x1, kappa_default(), g_degree);
  const std::vector<cplx> c2 = ct.axis(ad * x2, kappa_default(), g_degree);
  const std::vector<cplx> c3 = ct.axis(ad * x3, kappa_default(), g_degree);
  const int n = 2 * ct.K + 1;
  const cplx* Z = ct.z.data() + 2 * ct.K;  // Z[m] valid for m in [-2K, 2K]
  cplx acc{0.0, 0.0};
  for (int i = -ct.K; i <= ct.K; ++i) {
    cplx row{0.0, 0.0};
    for (int j = -ct.K; j <= ct.K; ++j) {
      const cplx cij = c2[j + ct.K] * Z[i + j];
      cplx inner{0.0, 0.0};
      for (int k = -ct.K; k <= ct.K; ++k)
        inner += c3[k + ct.K] * Z[i + k] * Z[j + k];
      row += cij * inner;
    }
    acc += c1[i + ct.K] * row;
  }
  (void)n;
  return acc.real();
}

InertFamily fa_inert_family(int64_t a, int64_t q, std::vector<double> scales,
                            double X, int g_degree) {
  if (scales.size() != 3)
    throw std::invalid_argument("fa_inert_family: need 3 scales");
  if (a < 1 || !is_prime(q) || a % q == 0)
    throw std::invalid_argument("fa_inert_family: bad a or q");

  // Certification walks a tensor grid, so each axis coordinate recurs ~10^4
  // times.  Cache, per coordinate: axis 0 -> the partial contraction
  // Q[j,k] = sum_i c1[i] Z[i+j] Z[i+k]; axes 1,2 -> the coefficient vector.
  // An evaluation is then the n^2 quadratic form sum c2[j] c3[k] Z[j+k] Q[j,k].
  struct Cache {
    FaContourTables ct;
    int64_t a;
    int kappa, m;
    std::unordered_map<uint64_t, std::vector<cplx>> qmat, cv1, cv2;
  };
  auto cache = std::make_shared<Cache>();
  cache->ct.build_z(q);
  cache->a = a;
  cache->kappa = kappa_default();
  cache->m = g_degree;

  auto eval = [cache](const std::vector<double>& x) -> double {
    Cache& C = *cache;
    const int K = C.ct.K;
    const int n = 2 * K + 1;
    const cplx* Z = C.ct.z.data() + 2 * K;
    const double ad = static_cast<double>(C.a);

    auto cvec = [&](double xi,
                    std::unordered_map<uint64_t, std::vector<cplx>>& store)
        -> const std::vector<cplx>& {
      const uint64_t key = std::bit_cast<uint64_t>(xi);
      auto it = store.find(key);
      if (it != store.end()) return it->second;
      return store.emplace(key, C.ct.axis(ad * xi, C.kappa, C.m))
          .first->second;
    };
    const uint64_t k0 = std::bit_cast<uint64_t>(x[0]);
    auto it = C.qmat.find(k0);
    if (it == C.qmat.end()) {
      const std::vector<cplx> c1 = C.ct.axis(ad * x[0], C.kappa, C.m);
      std::vector<cplx> Q(static_cast<size_t>(n) * n, cplx{0.0, 0.0});
      for (int i = -K; i <= K; ++i) {
        const cplx ci = c1[i + K];
        for (int j = -K; j <= K; ++j) {
          const cplx cij = ci * Z[i + j];
          cplx* row = Q.data() + static_cast<size_t>(j + K) * n;
          for (int k = -K; k <= K; ++k) row[k + K] += cij * Z[i + k];
        }
      }
      it = C.qmat.emplace(k0, std::move(Q)).first;
    }
    const std::vector<cplx>& Q = it->second;
    const std::vector<cplx>& c2 = cvec(x[1], C.cv1);
    const std::vector<cplx>& c3 = cvec(x[2], C.cv2);

    cplx acc{0.0, 0.0};
    for (int j = -K; j <= K; ++j) {
      const cplx* row = Q.data() + static_cast<size_t>(j + K) * n;
      cplx inner{0.0, 0.0};
      for (int k = -K; k <= K; ++k)
        inner += c3[k + K] * Z[j + k] * row[k + K];
      acc += c2[j + K] * inner;
    }
    return acc.real();
  };

  InertFamily fam;
  fam.eval = eval;
  fam.scales = std::move(scales);
  fam.X = X;
  return fam;
}

double SatakeModel::theta_at(int64_t p) const {
  auto it = theta.find(p);
  if (it != theta.end()) return it->second;
  const uint64_t z =
      splitmix64(seed ^ (0x9E3779B97F4A7C15ULL * static_cast<uint64_t>(p)));
  const double u = static_cast<double>(z >> 11) * 0x1p-53;
  return 0.15 + u * (PI - 0.3);
}

double SatakeModel::lambda_pk(int64_t p, int k) const {
  if (k == 0) return 1.0;
  if (level > 1 && p == level) {
    double v = std::pow(static_cast<double>(p), -0.5 * k);
    return (level_sign < 0 && (k & 1)) ? -v : v;
  }
  const double th = theta_at(p);
  const double s = std::sin(th);
  if (std::abs(s) < 1e-9) {
    // theta at 0 or pi: lambda(p^k) -> (k+1) (+-1)^k
    const double sign = (th > PI / 2 && (k & 1)) ? -1.0 : 1.0;
    return sign * (k + 1);
  }
  return std::sin((k + 1) * th) / s;
}

double SatakeModel::lambda(int64_t n) const {
  if (n < 1) throw std::domain_error("SatakeModel::lambda: n must be >= 1");
  double acc = 1.0;
  for (const auto& [p, k] : factorize(n).factors) acc *= lambda_pk(p, k);
  return acc;
}

SatakeModel SatakeModel::random(uint64_t seed, int64_t level) {
  if (level != 1 && !is_prime(level))
    throw std::invalid_argument("SatakeModel::random: level must be 1/prime");
  SatakeModel m;
  m.level = level;
  m.level_sign = (splitmix64(seed ^ 0xD1B54A32D192ED03ULL) & 1) ? 1 : -1;
  m.seed = seed;
  return m;
}

HeckeCheckReport hecke_identity_check(HeckeKind kind, const SatakeModel& model,
                                      int64_t q, int64_t Nmax) {
  if (Nmax < 1 || Nmax > 10000)
    throw std::invalid_argument("hecke_identity_check: Nmax out of range");
  if (!is_prime(q))
    throw std::invalid_argument("hecke_identity_check: q must be prime");
  if (model.level != q)
    throw std::invalid_argument(
        "hecke_identity_check: model level must equal q (the identities use "
        "the newform convention at q)");

  std::vector<double> lam(Nmax + 1, 1.0);
  for (int64_t n = 1; n <= Nmax; ++n) lam[n] = model.lambda(n);

  HeckeCheckReport rep;
  rep.kind = kind;
  rep.q = q;
  rep.Nmax = Nmax;
  for (int64_t M = 1; M <= Nmax; ++M) {
    const FactoredInt fM = factorize(M);
    const std::vector<int64_t> divs = divisors(fM);
    double lhs = 0.0, rhs = 0.0;
    if (kind == HeckeKind::square) {
      for (int64_t d : divs) lhs += lam[d] * lam[M / d];
      for (int64_t e = 1; e * e <= M; ++e) {
        if (M % (e * e) != 0 || e % q == 0) continue;
        const int64_t r = M / (e * e);
        rhs += static_cast<double>(tau_k(r, 2)) * lam[r];
      }
    } else {
      for (int64_t d1 : divs)
        for (int64_t d2 : divisors(factorize(M / d1)))
          lhs += lam[d1] * lam[d2] * lam[M / d1 / d2];
      for (int64_t ca = 1; ca * ca * ca <= M; ++ca) {
        if (M % (ca * ca * ca) != 0 || ca % q == 0) continue;
        const int mu = mobius(ca);
        if (mu == 0) continue;
        const int64_t rest = M / (ca * ca * ca);
        for (int64_t P = 1; P * P <= rest; ++P) {
          if (rest % (P * P) != 0 || P % q == 0) continue;
          rhs += mu * static_cast<double>(tau_k(P, 3)) *
                 static_cast<double>(tau_k(rest / (P * P), 3)) *
                 lam[M / (ca * ca * P * P)];
        }
      }
    }
    const double diff = std::abs(lhs - rhs);
    rep.max_abs_diff = std::max(rep.max_abs_diff, diff);
    if (diff > 1e-10 * std::max(1.0, std::abs(lhs)))
      rep.mismatches.push_back({M, lhs, rhs});
    ++rep.checked;
  }
  rep.pass = rep.mismatches.empty();
  return rep;
}

}  // namespace momentlab
