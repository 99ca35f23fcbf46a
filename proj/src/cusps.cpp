#include "momentlab/cusps.hpp"

#include <numeric>
#include <stdexcept>

#include "momentlab/arith.hpp"

namespace momentlab {

int64_t cusp_width(int64_t N, int64_t f) {
  if (N <= 0 || f <= 0 || N % f != 0)
    throw std::invalid_argument("cusp_width: need f | N");
  return N / (f * std::gcd(f, N / f));
}

namespace {

// Reduce (u,w) to a primitive vector with w > 0, or (1,0) for infinity.
void primitivize(int64_t& u, int64_t& w) {
  if (u == 0 && w == 0)
    throw std::invalid_argument("cusp: (0,0) is not a cusp");
  int64_t g = std::gcd(u < 0 ? -u : u, w < 0 ? -w : w);
  u /= g;
  w /= g;
  if (w < 0 || (w == 0 && u < 0)) { u = -u; w = -w; }
}

}  // namespace

bool cusp_equivalent(int64_t N, int64_t u1, int64_t w1, int64_t u2, int64_t w2) {
  primitivize(u1, w1);
  primitivize(u2, w2);
  // gamma0 maps (u1,w1) to (u2,w2); the stabilizer of (u1,w1) shifts the
  // bottom-left entry by multiples of w1*w2, so membership in Gamma_0(N)
  // holds for some choice iff gcd(w1*w2, N) divides it.
  Egcd e1 = egcd(u1, w1);  // p u1 + q w1 = 1
  // A = (p, q; -w1, u1) sends (u1,w1) to (1,0).
  Egcd e2 = egcd(u2, w2);  // u2 * x + w2 * y = 1 -> u2*(x) - (-y)*w2 = 1
  // B = (u2, -y; w2, x) has det u2*x - (-y)*w2 = 1 and sends (1,0) to (u2,w2).
  int64_t c0 = w2 * e1.x + e2.x * (-w1);
  int64_t mod = std::gcd(w1 * w2, N);
  if (mod == 0) mod = N;
  return mod_pos(c0, mod) == 0;
}

CuspRep normalize_cusp(int64_t N, int64_t u, int64_t w) {
  primitivize(u, w);
  int64_t f = std::gcd(w, N);
  if (f == 0) f = N;
  for (int64_t v = 1; v <= f || v == 1; ++v) {
    if (std::gcd(v, f) != 1) continue;
    if (cusp_equivalent(N, u, w, v, f)) return {N, v, f};
    if (f == 1) break;
  }
  throw std::logic_error("normalize_cusp: no representative found");
}

std::vector<CuspRep> cusp_list(int64_t N) {
  std::vector<CuspRep> out;
  for (int64_t f : divisors(factorize(N))) {
    for (int64_t v = 1; v <= f || v == 1; ++v) {
      if (std::gcd(v, f) != 1) continue;
      bool fresh = true;
      for (const CuspRep& c : out)
        if (c.f == f && cusp_equivalent(N, v, f, c.v, c.f)) { fresh = false; break; }
      if (fresh) out.push_back({N, v, f});
      if (f == 1) break;
    }
  }
  return out;
}

ScalingMatrix scaling_matrix(const CuspRep& cusp) {
  int64_t w = cusp_width(cusp.N, cusp.f);
  Egcd e = egcd(cusp.v, cusp.f);  // v x + f y = 1 -> d = x, b = -y
  ScalingMatrix M;
  M.a = cusp.v * w;
  M.b = -e.y;
  M.c = cusp.f * w;
  M.d = e.x;
  M.det = w;
  // det check: v w x - (-y) f w = w (v x + f y) = w.
  return M;
}

ScalingMatrix atkin_lehner_matrix(int64_t N, int64_t s) {
  if (N % s != 0 || std::gcd(s, N / s) != 1)
    throw std::invalid_argument("atkin_lehner_matrix: need s || N");
  int64_t r = N / s;
  Egcd e = egcd(s, r);  // s x + r y = 1
  ScalingMatrix M;
  M.a = s;
  M.b = -e.y;
  M.c = N;
  M.d = s * e.x;
  M.det = s;  // s*s*x + y*r*s = s(s x + r y) = s
  return M;
}

std::vector<CosetRep> double_coset_reps(const ScalingMatrix& s1,
                                        const ScalingMatrix& s2, int64_t N,
                                        int64_t k21) {
  std::vector<CosetRep> out;
  const int64_t D = s1.det * s2.det;
  // adj(M2)
  const int64_t A2 = s2.d, B2 = -s2.b, C2 = -s2.c, D2 = s2.a;
  for (int64_t k22 = 0; k22 < k21; ++k22) {
    int64_t x0, step;
    int64_t nsol = solve_linear_mod(k22, D, k21, &x0, &step);
    int found_here = 0;
    for (int64_t t = 0; t < nsol; ++t) {
      int64_t k11 = x0 + t * step;
      int64_t k12_num = k11 * k22 - D;
      if (k12_num % k21 != 0) continue;  // cannot happen, but keep exact
      int64_t k12 = k12_num / k21;
      // G = M1 * K * adj(M2); g = G / D must be integral, g21 = 0 mod N.
      int64_t K11 = k11, K12 = k12, K21 = k21, K22 = k22;
      int64_t P11 = s1.a * K11 + s1.b * K21, P12 = s1.a * K12 + s1.b * K22;
      int64_t P21 = s1.c * K11 + s1.d * K21, P22 = s1.c * K12 + s1.d * K22;
      int64_t G11 = P11 * A2 + P12 * C2, G12 = P11 * B2 + P12 * D2;
      int64_t G21 = P21 * A2 + P22 * C2, G22 = P21 * B2 + P22 * D2;
      if (G11 % D || G12 % D || G21 % D || G22 % D) continue;
      if ((G21 / D) % N != 0) continue;
      out.push_back({k11, k12, k21, k22});
      ++found_here;
    }
    if (found_here > 1)
      throw std::logic_error("double_coset_reps: bottom row hit twice");
  }
  return out;
}

ExpSumValue doublecoset_kloosterman(int64_t N, int64_t r, int64_t m, int64_t n,
                                    int64_t c) {
  if (N % r != 0 || std::gcd(r, N / r) != 1)
    throw std::invalid_argument("doublecoset_kloosterman: need r || N");
  int64_t s = N / r;
  ScalingMatrix id;  // cusp at infinity: identity scaling matrix
  ScalingMatrix W = atkin_lehner_matrix(N, s);
  ExpSumValue out;
  out.modulus = c * s;
  auto reps = double_coset_reps(id, W, N, c * s);
  for (const CosetRep& K : reps) {
    out.value += e_frac(K.k11 * m + K.k22 * n, c * s);
    ++out.term_count;
  }
  return out;
}

std::vector<int64_t> allowed_moduli_closed(int64_t N, int64_t r, double bound) {
  int64_t s = N / r;
  std::vector<int64_t> out;
  double sq = std::sqrt(static_cast<double>(s));
  for (int64_t c = 1; c * sq <= bound; ++c)
    if (c % r == 0 && std::gcd(c, s) == 1) out.push_back(c);
  return out;
}

std::vector<int64_t> allowed_moduli_enumerated(int64_t N, int64_t r,
                                               double bound) {
  int64_t s = N / r;
  ScalingMatrix id;
  ScalingMatrix W = atkin_lehner_matrix(N, s);
  std::vector<int64_t> out;
  double sq = std::sqrt(static_cast<double>(s));
  for (int64_t c = 1; c * sq <= bound; ++c)
    if (!double_coset_reps(id, W, N, c * s).empty()) out.push_back(c);
  return out;
}

std::vector<ALCheckRow> verify_atkin_lehner_identity(int64_t N, int64_t r,
                                                     int64_t mmax, int64_t nmax,
                                                     int64_t cmax, double tol) {
  int64_t s = N / r;
  std::vector<ALCheckRow> rows;
  for (int64_t c = 1; c <= cmax; ++c) {
    ScalingMatrix id;
    ScalingMatrix W = atkin_lehner_matrix(N, s);
    auto reps = double_coset_reps(id, W, N, c * s);
    bool allowed = (c % r == 0) && (std::gcd(c, s) == 1);
    for (int64_t m = 1; m <= mmax; ++m)
      for (int64_t n = 1; n <= nmax; ++n) {
        cplx lhs{0, 0};
        for (const CosetRep& K : reps)
          lhs += e_frac(K.k11 * m + K.k22 * n, c * s);
        cplx rhs{0, 0};
        if (allowed) {
          int64_t sbar = (c == 1) ? 0 : inv_mod(mod_pos(s, c), c);
          rhs = kloosterman(sbar * m, n, c).value;
        }
        ALCheckRow row;
        row.c = c;
        row.m = m;
        row.n = n;
        row.lhs = lhs;
        row.rhs = rhs;
        row.abs_err = std::abs(lhs - rhs);
        row.n_reps = static_cast<int64_t>(reps.size());
        row.pass = row.abs_err <= tol;
        rows.push_back(row);
      }
  }
  return rows;
}

}  // namespace momentlab
