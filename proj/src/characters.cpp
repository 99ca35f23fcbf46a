#include "momentlab/characters.hpp"

#include <numeric>
#include <stdexcept>

#include "momentlab/arith.hpp"

namespace momentlab {

namespace {

int64_t primitive_root(int64_t pk, int64_t p) {
  // Generator of (Z/p^k)^* for odd p: find one mod p, then fix it up so it
  // stays primitive mod p^2 (then it is primitive mod every power).
  int64_t phi_p = p - 1;
  std::vector<int64_t> prime_divs;
  for (auto [q, e] : factorize(phi_p).factors) prime_divs.push_back(q);
  int64_t g = 2;
  for (;; ++g) {
    bool ok = true;
    for (int64_t q : prime_divs)
      if (pow_mod(g, phi_p / q, p) == 1) { ok = false; break; }
    if (ok) break;
  }
  if (pk == p) return g;
  if (pow_mod(g, phi_p, p * p) == 1) g += p;
  return g % pk;
}

CyclicFactor make_factor(int64_t pk, int64_t order, int64_t gen) {
  CyclicFactor f;
  f.pk = pk;
  f.order = order;
  f.gen = gen % pk;
  f.dlog.assign(pk, -1);
  int64_t x = 1;
  for (int64_t i = 0; i < order; ++i) {
    f.dlog[x] = i;
    x = mul_mod(x, f.gen, pk);
  }
  return f;
}

}  // namespace

DirichletGroup character_group(int64_t q) {
  if (q <= 0 || q > 100000)
    throw std::invalid_argument("character_group: modulus out of range");
  DirichletGroup G;
  G.q = q;
  for (auto [p, e] : factorize(q).factors) {
    int64_t pk = 1;
    for (int i = 0; i < e; ++i) pk *= p;
    G.moduli.push_back(pk);
    if (p == 2) {
      if (e == 1) continue;  // trivial unit group
      if (e == 2) {
        G.factors.push_back(make_factor(4, 2, 3));
      } else {
        G.factors.push_back(make_factor(pk, 2, pk - 1));       // <-1>
        G.factors.push_back(make_factor(pk, pk / 4, 5));       // <5>
        // <-1> and <5> jointly generate; build the joint dlog pair below.
      }
    } else {
      int64_t phi = pk / p * (p - 1);
      G.factors.push_back(make_factor(pk, phi, primitive_root(pk, p)));
    }
  }
  // For the 2^k (k>=3) block the two tables above each only cover half the
  // residues; rebuild them as the coordinates of a in <-1> x <5>.
  for (size_t i = 0; i < G.factors.size(); ++i) {
    CyclicFactor& f = G.factors[i];
    if (f.pk % 2 == 0 && f.pk >= 8 && f.gen == f.pk - 1) {
      CyclicFactor& f5 = G.factors[i + 1];
      f.dlog.assign(f.pk, -1);
      f5.dlog.assign(f.pk, -1);
      for (int64_t s = 0; s < 2; ++s) {
        int64_t x = (s == 0) ? 1 : f.pk - 1;
        for (int64_t j = 0; j < f5.order; ++j) {
          f.dlog[x] = s;
          f5.dlog[x] = j;
          x = mul_mod(x, 5, f.pk);
        }
      }
      ++i;
    }
  }
  G.size = 1;
  for (auto& f : G.factors) G.size *= f.order;
  return G;
}

cplx DirichletCharacter::operator()(int64_t a) const {
  const DirichletGroup& G = *group;
  a = mod_pos(a, G.q);
  if (std::gcd(a, G.q) != 1) return {0.0, 0.0};
  // Accumulate sum of exps[i] * dlog_i(a) / order_i as a single rational
  // phase with denominator lcm of the orders (orders are <= 1e4, lcm fits).
  int64_t num = 0, den = 1;
  for (size_t i = 0; i < G.factors.size(); ++i) {
    const CyclicFactor& f = G.factors[i];
    int64_t d = f.dlog[a % f.pk];
    int64_t n_i = mod_pos(exps[i] * d, f.order);
    int64_t g = std::gcd(den, f.order);
    int64_t den2 = den / g * f.order;
    num = num * (den2 / den) + n_i * (den2 / f.order);
    den = den2;
    num = mod_pos(num, den);
  }
  return e_frac(num, den);
}

bool DirichletCharacter::is_principal() const {
  for (int64_t e : exps)
    if (e != 0) return false;
  return true;
}

std::vector<DirichletCharacter> all_characters(const DirichletGroup& G) {
  std::vector<DirichletCharacter> out;
  out.reserve(G.size);
  std::vector<int64_t> exps(G.factors.size(), 0);
  for (int64_t idx = 0; idx < G.size; ++idx) {
    DirichletCharacter chi;
    chi.group = &G;
    chi.exps = exps;
    out.push_back(std::move(chi));
    for (size_t i = 0; i < exps.size(); ++i) {
      if (++exps[i] < G.factors[i].order) break;
      exps[i] = 0;
    }
  }
  return out;
}

cplx gauss_sum(const DirichletCharacter& chi) {
  const DirichletGroup& G = *chi.group;
  cplx acc{0.0, 0.0};
  for (int64_t a = 1; a <= G.q; ++a) {
    if (std::gcd(a, G.q) != 1) continue;
    acc += chi(a) * e_frac(a, G.q);
  }
  return acc;
}

cplx hurwitz_zeta(cplx s, double a) {
  if (s.real() < 1.1)
    throw std::domain_error("hurwitz_zeta: requires Re(s) >= 1.1");
  if (!(a > 0.0 && a <= 1.0))
    throw std::invalid_argument("hurwitz_zeta: a must lie in (0,1]");
  int K = 25 + static_cast<int>(std::ceil(1.5 * std::abs(s.imag())));
  cplx acc{0.0, 0.0};
  for (int k = 0; k < K; ++k) acc += std::pow(cplx(k + a, 0.0), -s);
  double X = K + a;
  cplx xs = std::pow(cplx(X, 0.0), -s);
  acc += xs * X / (s - 1.0);
  acc += 0.5 * xs;
  // Euler-Maclaurin correction terms: B_{2j}/(2j)! * (s)_{2j-1} * X^{-s-2j+1}.
  static const double coef[8] = {
      1.0 / 12, -1.0 / 720, 1.0 / 30240, -1.0 / 1209600,
      1.0 / 47900160, -691.0 / 1307674368000.0, 1.0 / 74724249600.0,
      -3617.0 / 10670622842880000.0};
  cplx poch{1.0, 0.0};       // (s)_{2j-1} built incrementally
  cplx xpow = xs / X;        // X^{-s-2j+1}, starting at j = 1
  for (int j = 1; j <= 8; ++j) {
    if (j == 1) {
      poch = s;
    } else {
      poch *= (s + cplx(2.0 * j - 3.0, 0.0)) * (s + cplx(2.0 * j - 2.0, 0.0));
    }
    acc += coef[j - 1] * poch * xpow;
    xpow /= (X * X);
  }
  return acc;
}

cplx riemann_zeta(cplx s) { return hurwitz_zeta(s, 1.0); }

cplx dirichlet_L(cplx s, const DirichletCharacter& chi) {
  const DirichletGroup& G = *chi.group;
  cplx acc{0.0, 0.0};
  for (int64_t a = 1; a <= G.q; ++a) {
    if (std::gcd(a, G.q) != 1) continue;
    acc += chi(a) * hurwitz_zeta(s, static_cast<double>(a) / G.q);
  }
  return std::pow(cplx(static_cast<double>(G.q), 0.0), -s) * acc;
}

cplx dirichlet_L_periodic(cplx s, const std::vector<cplx>& v, int64_t m) {
  cplx acc{0.0, 0.0};
  for (int64_t a = 1; a <= m; ++a) {
    cplx c = v[a % m];
    if (c == cplx{0.0, 0.0}) continue;
    acc += c * hurwitz_zeta(s, static_cast<double>(a) / m);
  }
  return std::pow(cplx(static_cast<double>(m), 0.0), -s) * acc;
}

}  // namespace momentlab
