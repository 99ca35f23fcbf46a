#include "momentlab/arith.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace momentlab {

FactoredInt factorize(int64_t n) {
  if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
  FactoredInt f;
  f.n = n;
  auto strip = [&](int64_t p) {
    if (n % p) return;
    int e = 0;
    while (n % p == 0) { n /= p; ++e; }
    f.factors.push_back({p, e});
  };
  strip(2); strip(3); strip(5);
  // 2,3,5-wheel: candidate steps between residues coprime to 30.
  static const int wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  int64_t p = 7;
  int wi = 0;
  while (p * p <= n) {
    strip(p);
    p += wheel[wi];
    wi = (wi + 1) & 7;
  }
  if (n > 1) f.factors.push_back({n, 1});
  std::sort(f.factors.begin(), f.factors.end());
  return f;
}

std::vector<int64_t> divisors(const FactoredInt& f) {
  std::vector<int64_t> d{1};
  for (auto [p, e] : f.factors) {
    size_t sz = d.size();
    int64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < sz; ++j) d.push_back(d[j] * pk);
    }
  }
  std::sort(d.begin(), d.end());
  return d;
}

int mobius(int64_t n) {
  FactoredInt f = factorize(n);
  for (auto [p, e] : f.factors)
    if (e > 1) return 0;
  return (f.factors.size() % 2 == 0) ? 1 : -1;
}

int64_t euler_phi(int64_t n) {
  int64_t r = n;
  for (auto [p, e] : factorize(n).factors) r = r / p * (p - 1);
  return r;
}

int64_t tau_k(int64_t n, int k) {
  if (k < 1) throw std::invalid_argument("tau_k: k must be >= 1");
  // Multiplicative; at p^e the count of ordered k-tuples is binom(e+k-1, k-1).
  int64_t r = 1;
  for (auto [p, e] : factorize(n).factors) {
    int64_t b = 1;
    for (int i = 1; i <= k - 1; ++i) b = b * (e + i) / i;
    r *= b;
  }
  return r;
}

int64_t radical(int64_t n) {
  int64_t r = 1;
  for (auto [p, e] : factorize(n).factors) r *= p;
  return r;
}

int64_t floorroot(int64_t n) {
  int64_t r = 1;
  for (auto [p, e] : factorize(n).factors)
    for (int i = 0; i < e / 2; ++i) r *= p;
  return r;
}

int64_t id_star_phi(int64_t n) {
  int64_t r = 1;
  for (auto [p, e] : factorize(n).factors) {
    int64_t pe = 1;
    for (int i = 0; i < e - 1; ++i) pe *= p;  // p^{e-1}
    r *= pe * p + e * pe * (p - 1);
  }
  return r;
}

CkFactorization ck_factorize(int64_t c, int64_t k) {
  if (c <= 0 || k <= 0)
    throw std::invalid_argument("ck_factorize: arguments must be positive");
  CkFactorization out;
  FactoredInt fc = factorize(c), fk = factorize(k);
  auto vp = [](const FactoredInt& f, int64_t p) {
    for (auto [q, e] : f.factors)
      if (q == p) return e;
    return 0;
  };
  auto pow_i = [](int64_t p, int e) {
    int64_t r = 1;
    while (e-- > 0) r *= p;
    return r;
  };
  std::vector<int64_t> primes;
  for (auto [p, e] : fc.factors) primes.push_back(p);
  for (auto [p, e] : fk.factors) primes.push_back(p);
  std::sort(primes.begin(), primes.end());
  primes.erase(std::unique(primes.begin(), primes.end()), primes.end());
  for (int64_t p : primes) {
    int vc = vp(fc, p), vk = vp(fk, p);
    if (vc > vk) out.c0 *= pow_i(p, vc);
    else if (vc >= 1) out.c2 *= pow_i(p, vc);
    if (vk >= 1) {
      if (vk >= vc) out.k0 *= pow_i(p, vk);
      else out.k1 *= pow_i(p, vk);
    }
  }
  return out;
}

std::vector<DivisorBoundRow> check_divisor_bounds(int64_t Nmax, double eps) {
  // Constants fitted over N <= 1e5 at eps = 0.3: observed maxima 1.149 (N=2),
  // 1.573 (N=6), 1.573 (N=6), 1.620 (N=24), 3.217 (N=210), pinned with ~25%
  // headroom.  The last bound's champion is the squarefree divisor-count
  // spike tau(N)/N^eps.
  struct Spec {
    const char* name;
    double constant;
  };
  static const Spec specs[5] = {
      {"sum g^2/N <= C N^eps floorroot(N)/sqrt(N)", 1.5},
      {"sum g^2 sqrt(d)/N <= C N^eps floorroot(N)^{3/2}/sqrt(N)", 2.0},
      {"sum g^2/(sqrt(d) N) <= C N^eps floorroot(N)^{3/2}/N", 2.0},
      {"sum g sqrt(d)/N <= C N^eps sqrt(floorroot(N))/sqrt(N)", 2.1},
      {"sum g/N <= C N^eps floorroot(N)/N", 4.0},
  };
  std::vector<DivisorBoundRow> rows(5);
  for (int i = 0; i < 5; ++i) {
    rows[i].name = specs[i].name;
    rows[i].constant = specs[i].constant;
    rows[i].argmax = 1;
  }
  // Smallest prime factor sieve drives an incremental factorization so the
  // whole range is covered without per-N trial division.
  std::vector<int32_t> spf(Nmax + 1, 0);
  for (int64_t i = 2; i <= Nmax; ++i) {
    if (spf[i] == 0)
      for (int64_t j = i; j <= Nmax; j += i)
        if (spf[j] == 0) spf[j] = static_cast<int32_t>(i);
  }
  std::vector<int64_t> divs;
  for (int64_t N = 1; N <= Nmax; ++N) {
    FactoredInt f;
    f.n = N;
    int64_t m = N;
    while (m > 1) {
      int64_t p = spf[m];
      int e = 0;
      while (m % p == 0) { m /= p; ++e; }
      f.factors.push_back({p, e});
    }
    int64_t fr = 1;
    for (auto [p, e] : f.factors)
      for (int i = 0; i < e / 2; ++i) fr *= p;
    divs = divisors(f);
    double s1 = 0, s2 = 0, s3 = 0, s4 = 0, s5 = 0;
    for (int64_t d : divs) {
      double g = static_cast<double>(std::gcd(d, N / d));
      double sd = std::sqrt(static_cast<double>(d));
      s1 += g * g;
      s2 += g * g * sd;
      s3 += g * g / sd;
      s4 += g * sd;
      s5 += g;
    }
    double dn = static_cast<double>(N);
    double sn = std::sqrt(dn);
    double ne = std::pow(dn, eps);
    double frd = static_cast<double>(fr);
    double fr32 = frd * std::sqrt(frd);
    double lhs[5] = {s1 / dn, s2 / dn, s3 / dn, s4 / dn, s5 / dn};
    double shape[5] = {ne * frd / sn, ne * fr32 / sn, ne * fr32 / dn,
                       ne * std::sqrt(frd) / sn, ne * frd / dn};
    for (int i = 0; i < 5; ++i) {
      double ratio = lhs[i] / shape[i];
      if (ratio > rows[i].max_ratio) {
        rows[i].max_ratio = ratio;
        rows[i].argmax = N;
      }
    }
  }
  for (auto& r : rows) r.pass = r.max_ratio <= r.constant;
  return rows;
}

bool floorroot_partial_sum_bound(int64_t x) {
  double acc = 0.0;
  for (int64_t n = 1; n <= x; ++n) {
    acc += static_cast<double>(floorroot(n));
    double bound = 2.0 * static_cast<double>(n) * std::log(static_cast<double>(n) + 2.0);
    if (acc > bound) return false;
  }
  return true;
}

}  // namespace momentlab
