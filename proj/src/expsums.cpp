#include "momentlab/expsums.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

#include "momentlab/arith.hpp"

namespace momentlab {

namespace {

// e(j/c) for j in [0,c).
std::vector<cplx> root_table(int64_t c) {
  std::vector<cplx> t(c);
  for (int64_t j = 0; j < c; ++j)
    t[j] = e(static_cast<double>(j) / static_cast<double>(c));
  return t;
}

// Inverse table mod c: inv[x] = xbar for units, -1 otherwise.
std::vector<int64_t> inverse_table(int64_t c) {
  std::vector<int64_t> inv(c, -1);
  for (int64_t x = (c == 1 ? 0 : 1); x < c; ++x)
    if (std::gcd(x, c) == 1) inv[x] = inv_mod(x, c);
  if (c == 1) inv[0] = 0;
  return inv;
}

}  // namespace

ExpSumValue kloosterman(int64_t m, int64_t n, int64_t c) {
  if (c <= 0) throw std::invalid_argument("kloosterman: c must be positive");
  ExpSumValue out;
  out.modulus = c;
  if (c == 1) {
    out.value = {1.0, 0.0};
    out.term_count = 1;
    return out;
  }
  auto roots = root_table(c);
  m = mod_pos(m, c);
  n = mod_pos(n, c);
  for (int64_t x = 1; x < c; ++x) {
    if (std::gcd(x, c) != 1) continue;
    int64_t xb = inv_mod(x, c);
    out.value += roots[mod_pos(m * x + n * xb, c)];
    ++out.term_count;
  }
  return out;
}

ExpSumValue ramanujan(int64_t n, int64_t c) { return kloosterman(0, n, c); }

ExpSumValue ramanujan_closed(int64_t n, int64_t c) {
  if (c <= 0) throw std::invalid_argument("ramanujan_closed: c must be positive");
  ExpSumValue out;
  out.modulus = c;
  int64_t g = std::gcd(mod_pos(n, c), c);
  if (g == 0) g = c;  // n = 0 mod c
  int64_t acc = 0;
  for (int64_t d : divisors(factorize(g))) {
    acc += d * mobius(c / d);
    ++out.term_count;
  }
  out.value = {static_cast<double>(acc), 0.0};
  return out;
}

ExpSumValue H_double_sum(int64_t k, int64_t m1, int64_t v, int64_t c) {
  ExpSumValue out;
  out.modulus = c;
  auto roots = root_table(c);
  auto inv = inverse_table(c);
  for (int64_t x = 0; x < c; ++x) {
    // S(m1 x, v; c) * e(k x / c)
    cplx s{0.0, 0.0};
    for (int64_t y = 0; y < c; ++y) {
      if (inv[y] < 0) continue;
      s += roots[mod_pos(m1 * x % c * y + v * inv[y], c)];
      ++out.term_count;
    }
    out.value += s * roots[mod_pos(k * x, c)];
  }
  return out;
}

ExpSumValue H_bruteforce(int64_t k, int64_t m1, int64_t v, int64_t c) {
  if (c <= 0) throw std::invalid_argument("H_bruteforce: c must be positive");
  ExpSumValue out;
  out.modulus = c;
  auto roots = root_table(c);
  int64_t u0, step;
  int64_t nsol = solve_linear_mod(m1, -k, c, &u0, &step);
  if (nsol == 0) return out;
  cplx acc{0.0, 0.0};
  for (int64_t t = 0; t < nsol; ++t) {
    int64_t u = u0 + t * step;
    if (c > 1 && std::gcd(u, c) != 1) continue;
    int64_t ub = (c == 1) ? 0 : inv_mod(u, c);
    acc += roots[mod_pos(v * ub, c)];
    ++out.term_count;
  }
  out.value = static_cast<double>(c) * acc;
  return out;
}

ExpSumValue H_closed(int64_t k, int64_t m1, int64_t v, int64_t c) {
  if (c <= 0) throw std::invalid_argument("H_closed: c must be positive");
  ExpSumValue out;
  out.modulus = c;
  if (k == 0) {
    if (m1 % c != 0) return out;
    ExpSumValue r = ramanujan_closed(v, c);
    out.value = static_cast<double>(c) * r.value;
    out.term_count = r.term_count;
    return out;
  }
  CkFactorization f = ck_factorize(c, k < 0 ? -k : k);
  // Vanishing conditions: m1 = k1 c2 m1' with (m1', c0) = 1, and k1 | v.
  if (m1 % (f.k1 * f.c2) != 0) return out;
  int64_t m1p = m1 / (f.k1 * f.c2);
  if (std::gcd(mod_pos(m1p, f.c0), f.c0) != 1) return out;
  if (v % f.k1 != 0) return out;
  int64_t k0_signed = (k < 0) ? -f.k0 : f.k0;
  cplx phase{1.0, 0.0};
  if (f.c0 > 1) {
    int64_t k0bar = inv_mod(mod_pos(k0_signed, f.c0), f.c0);
    int64_t vm = mod_pos(v, f.c0);
    phase = e_frac(-(vm * mod_pos(m1p, f.c0) % f.c0 * k0bar), f.c0);
  }
  ExpSumValue r = ramanujan_closed(v, f.c2);
  out.value = static_cast<double>(c) * phase * r.value *
              static_cast<double>(f.k1);
  out.term_count = r.term_count + 1;
  return out;
}

ExpSumValue A_triple_sum(int64_t p1, int64_t p2, int64_t p3, int64_t alpha,
                         int64_t k) {
  ExpSumValue out;
  out.modulus = k;
  auto roots = root_table(k);
  for (int64_t x1 = 0; x1 < k; ++x1)
    for (int64_t x2 = 0; x2 < k; ++x2) {
      int64_t q = mod_pos(alpha * x1 % k * x2, k);
      for (int64_t x3 = 0; x3 < k; ++x3) {
        out.value += roots[mod_pos(q * x3 - x1 * p1 - x2 * p2 - x3 * p3, k)];
        ++out.term_count;
      }
    }
  return out;
}

ExpSumValue A_bruteforce(int64_t p1, int64_t p2, int64_t p3, int64_t alpha,
                         int64_t k) {
  if (k <= 0) throw std::invalid_argument("A_bruteforce: k must be positive");
  ExpSumValue out;
  out.modulus = k;
  auto roots = root_table(k);
  cplx acc{0.0, 0.0};
  for (int64_t x1 = 0; x1 < k; ++x1) {
    int64_t x0, step;
    int64_t nsol = solve_linear_mod(mod_pos(alpha * x1, k), p3, k, &x0, &step);
    for (int64_t t = 0; t < nsol; ++t) {
      int64_t x2 = x0 + t * step;
      acc += roots[mod_pos(-(x1 * p1 + x2 * p2), k)];
      ++out.term_count;
    }
  }
  out.value = static_cast<double>(k) * acc;
  return out;
}

ExpSumValue A_closed(int64_t p1, int64_t p2, int64_t p3, int64_t alpha,
                     int64_t k) {
  if (k <= 0) throw std::invalid_argument("A_closed: k must be positive");
  ExpSumValue out;
  out.modulus = k;
  if (p1 == 0 && p2 == 0 && p3 == 0) {
    out.value = {static_cast<double>(k) * static_cast<double>(id_star_phi(k)),
                 0.0};
    out.term_count = 1;
    return out;
  }
  if (p1 != 0 && p2 != 0 && p3 != 0) {
    int64_t g = std::gcd(std::gcd(p2 < 0 ? -p2 : p2, p3 < 0 ? -p3 : p3), k);
    cplx acc{0.0, 0.0};
    for (int64_t f : divisors(factorize(g))) {
      int64_t kf = k / f;
      int64_t abar = (kf == 1) ? 0 : inv_mod(mod_pos(alpha, kf), kf);
      ExpSumValue s = kloosterman(p1 % kf * abar, p2 * p3 / (f * f), kf);
      acc += static_cast<double>(f) * s.value;
      out.term_count += s.term_count;
    }
    out.value = static_cast<double>(k) * acc;
    return out;
  }
  // Some but not all p_i vanish: collapse the x1 axis instead, giving
  // A = k * sum_{x2,x3: al x2 x3 = p1 (k)} e(-(x2 p2 + x3 p3)/k).
  auto roots = root_table(k);
  cplx acc{0.0, 0.0};
  for (int64_t x2 = 0; x2 < k; ++x2) {
    int64_t x0, step;
    int64_t nsol = solve_linear_mod(mod_pos(alpha * x2, k), p1, k, &x0, &step);
    for (int64_t t = 0; t < nsol; ++t) {
      int64_t x3 = x0 + t * step;
      acc += roots[mod_pos(-(x2 * p2 + x3 * p3), k)];
      ++out.term_count;
    }
  }
  out.value = static_cast<double>(k) * acc;
  return out;
}

}  // namespace momentlab
