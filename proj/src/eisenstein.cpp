#include "momentlab/eisenstein.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "momentlab/arith.hpp"
#include "momentlab/characters.hpp"
#include "momentlab/expsums.hpp"

namespace momentlab {

EisPair make_eis_pair(int64_t N, int64_t r, const CuspRep& cusp) {
  if (N % r != 0 || std::gcd(r, N / r) != 1)
    throw std::invalid_argument("make_eis_pair: r must exactly divide N");
  EisPair P;
  P.N = N;
  P.r = r;
  P.s = N / r;
  P.cusp = normalize_cusp(N, cusp.v, cusp.f);
  P.width = cusp_width(N, P.cusp.f);
  Egcd e = egcd(P.s, r);  // s a0 + r b0 = 1
  P.a0 = e.x;
  P.b0 = e.y;

  // Class table: (X, Y) mod N admits a matrix (A,B;C,D) in Gamma_0(N) with
  // vC - fA = X, vD - fB = Y iff
  //   (a) f | X d0 with d0 = v^{-1} mod f  (so that C can be 0 mod N), and
  //   (b) t1 Y = 1 (mod g), g = gcd(X, N/f), f t1 = -X d0 (mod N):
  // condition (a) makes the t-congruence solvable, (b) matches it with the
  // determinant equation t Y - t2 X = 1.
  int64_t f = P.cusp.f, v = P.cusp.v;
  int64_t d0 = mod_pos(egcd(v, f).x, N);  // v d0 = 1 (mod f)
  int64_t Nf = N / f;
  std::vector<std::vector<bool>> V(N, std::vector<bool>(N, false));
  for (int64_t Xm = 0; Xm < N; ++Xm) {
    if ((Xm * d0) % f != 0) continue;
    int64_t c = mod_pos(-Xm * d0, N);
    int64_t t1 = (c / f) % Nf;
    int64_t g = std::gcd(Xm, Nf);
    for (int64_t Ym = 0; Ym < N; ++Ym)
      if (mod_pos(t1 * Ym - 1, g) == 0) V[Xm][Ym] = true;
  }

  int64_t a0m = mod_pos(P.a0, N), b0m = mod_pos(P.b0, N);
  P.valid_dm.assign(N, {});
  for (int64_t jm = 0; jm < N; ++jm) {
    for (int64_t dm = 0; dm < N; ++dm) {
      int64_t Xm = mod_pos(P.s % N * a0m % N * jm - r * dm, N);
      int64_t Ym = mod_pos(b0m * jm + dm, N);
      if (V[Xm][Ym]) P.valid_dm[jm].push_back(dm);
    }
    P.max_dm_count = std::max<int64_t>(P.max_dm_count, P.valid_dm[jm].size());
  }
  return P;
}

std::vector<int64_t> eis_level_coords(const EisPair& P, int64_t j) {
  std::vector<int64_t> out;
  int64_t sj = P.s * j;
  for (int64_t dm : P.valid_dm[j % P.N])
    for (int64_t D = dm; D < sj; D += P.N)
      if (std::gcd(j, D) == 1) out.push_back(D);
  std::sort(out.begin(), out.end());
  return out;
}

// Sum over j > J of (#reps at level j) * gamma_j^{-2 Re u}, bounded with
// #reps <= max_dm_count (s j / N + 1) and integral comparison.
static double series_tail(const EisPair& P, int64_t J, double sigma) {
  if (P.max_dm_count == 0) return 0.0;
  double ws = static_cast<double>(P.width) * static_cast<double>(P.s);
  double dm = static_cast<double>(P.max_dm_count);
  double lin = static_cast<double>(P.s) / static_cast<double>(P.N) *
               std::pow(static_cast<double>(J), 2.0 - 2.0 * sigma) /
               (2.0 * sigma - 2.0);
  double con = std::pow(static_cast<double>(J), 1.0 - 2.0 * sigma) /
               (2.0 * sigma - 1.0);
  return dm * std::pow(ws, -sigma) * (lin + con);
}

EisSeries phi_series(const EisPair& P, const std::vector<int64_t>& ns,
                     const std::vector<cplx>& us, double tol,
                     int64_t rep_cap) {
  EisSeries out;
  out.values.assign(ns.size(), std::vector<cplx>(us.size(), cplx{0.0, 0.0}));
  double sigma = 1e9;
  for (cplx u : us) sigma = std::min(sigma, u.real());
  if (sigma <= 1.0)
    throw std::invalid_argument("phi_series: needs Re u > 1 to converge");
  if (P.max_dm_count == 0) return out;

  int64_t nmax = 0;
  for (int64_t n : ns) nmax = std::max(nmax, n);
  std::vector<int64_t> slot(nmax + 1, -1);
  for (size_t i = 0; i < ns.size(); ++i) slot[ns[i]] = static_cast<int64_t>(i);

  double ws = static_cast<double>(P.width) * static_cast<double>(P.s);
  std::vector<cplx> level(ns.size());
  for (int64_t j = 1;; ++j) {
    int64_t sj = P.s * j;
    std::fill(level.begin(), level.end(), cplx{0.0, 0.0});
    for (int64_t dm : P.valid_dm[j % P.N]) {
      for (int64_t D = dm; D < sj; D += P.N) {
        if (std::gcd(j, D) != 1) continue;
        ++out.reps;
        cplx z = e_frac(D, sj), zp = 1.0;
        for (int64_t k = 1; k <= nmax; ++k) {
          zp *= z;
          if (slot[k] >= 0) level[slot[k]] += zp;
        }
      }
    }
    for (size_t ui = 0; ui < us.size(); ++ui) {
      cplx factor =
          std::exp(-us[ui] * std::log(ws * static_cast<double>(j) *
                                      static_cast<double>(j)));
      for (size_t i = 0; i < ns.size(); ++i)
        out.values[i][ui] += level[i] * factor;
    }
    out.j_max = j;
    out.tail_bound = series_tail(P, j, sigma);
    if (out.tail_bound <= tol || out.reps >= rep_cap) break;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Closed evaluation.

namespace {

// p-part of n supported on the primes of m (and its complement).
int64_t part_supported_on(int64_t n, int64_t m) {
  int64_t part = 1;
  while (true) {
    int64_t g = std::gcd(n, m);
    if (g == 1) return part;
    part *= g;
    n /= g;
  }
}

DirichletCharacter conj_char(const DirichletCharacter& chi) {
  DirichletCharacter bar = chi;
  for (size_t i = 0; i < bar.exps.size(); ++i)
    bar.exps[i] = mod_pos(-bar.exps[i], chi.group->factors[i].order);
  return bar;
}

struct LKey {
  int64_t qchi, qpsi, m0, ci, pi;
  double ure, uim;
  bool operator<(const LKey& o) const {
    return std::tie(qchi, qpsi, m0, ci, pi, ure, uim) <
           std::tie(o.qchi, o.qpsi, o.m0, o.ci, o.pi, o.ure, o.uim);
  }
};

struct GroupData {
  DirichletGroup G;
  std::vector<DirichletCharacter> chars;
  std::vector<cplx> tau_bar;  // gauss sum of the conjugate character
};

GroupData& group_data(int64_t q) {
  static std::map<int64_t, GroupData> cache;
  auto it = cache.find(q);
  if (it == cache.end()) {
    GroupData d;
    d.G = character_group(q);
    it = cache.emplace(q, std::move(d)).first;
    it->second.chars = all_characters(it->second.G);
    for (auto& chi : it->second.chars) {
      chi.group = &it->second.G;
      it->second.tau_bar.push_back(gauss_sum(conj_char(chi)));
    }
  }
  return it->second;
}

// L(2u, conj(chi)^2 conj(psi)^2 chi0) with chi0 principal mod m0, computed
// as a periodic L-series mod lcm of the three moduli.
cplx twisted_L(cplx u, const DirichletCharacter& chi,
               const DirichletCharacter& psi, int64_t m0) {
  int64_t qc = chi.group->q, qp = psi.group->q;
  int64_t M = std::lcm(std::lcm(qc, qp), m0);
  std::vector<cplx> vals(M, cplx{0.0, 0.0});  // indexed by residue mod M
  for (int64_t x = 0; x < M; ++x) {
    if (std::gcd(x, m0) != 1) continue;
    cplx cx = chi(x), px = psi(x);
    vals[x] = std::conj(cx * cx) * std::conj(px * px);
  }
  return dirichlet_L_periodic(2.0 * u, vals, M);
}

}  // namespace

cplx phi_closed(const EisPair& P, int64_t n, cplx u) {
  int64_t f = P.cusp.f, v = P.cusp.v;
  int64_t fr = std::gcd(f, P.r), fs = std::gcd(f, P.s);
  int64_t rp = P.r / fr, sp = P.s / fs;
  int64_t frp = part_supported_on(fr, rp), f0 = fr / frp;
  int64_t sfp = part_supported_on(sp, fs), s0 = sp / sfp;
  int64_t a = std::gcd(frp, rp), A = frp / a;
  int64_t b = std::gcd(sfp, fs), B = sfp / b;

  if (n % (A * B) != 0) return {0.0, 0.0};
  int64_t k = n / (A * B);
  int64_t kr = std::gcd(k, a), ks = std::gcd(k, b);
  int64_t ell = k / (kr * ks);
  int64_t qchi = a / kr, qpsi = b / ks;
  int64_t m0 = fs * rp * s0 * f0;

  GroupData& gc = group_data(qchi);
  GroupData& gp = group_data(qpsi);

  static std::map<LKey, cplx> Lcache;
  auto Lval = [&](size_t ci, size_t pi) {
    LKey key{qchi, qpsi, m0, static_cast<int64_t>(ci),
             static_cast<int64_t>(pi), u.real(), u.imag()};
    auto it = Lcache.find(key);
    if (it == Lcache.end())
      it = Lcache.emplace(key, twisted_L(u, gc.chars[ci], gp.chars[pi], m0))
               .first;
    return it->second;
  };

  int64_t Np = P.N / f, Npp = Np / std::gcd(f, Np);
  double base =
      static_cast<double>(Npp) * static_cast<double>(P.s) * static_cast<double>(fr * fr);
  cplx pref = std::exp(-u * std::log(base)) * static_cast<double>(A) *
              static_cast<double>(B);
  pref /= static_cast<double>(euler_phi(qchi)) * static_cast<double>(euler_phi(qpsi));

  int64_t inv_b_qchi = inv_mod(mod_pos(b, qchi), qchi);
  int64_t inv_a_qpsi = inv_mod(mod_pos(a, qpsi), qpsi);

  cplx acc{0.0, 0.0};
  for (int64_t d : divisors(factorize(k))) {
    if (std::gcd(d, fs * rp) != 1) continue;
    // (d, fs rp) = 1 forces d | ell, so the Ramanujan sum argument is whole.
    cplx dfac = ramanujan_closed(ell / d, s0 * f0).value *
                std::exp((1.0 - 2.0 * u) * std::log(static_cast<double>(d)));
    int64_t argc =
        mod_pos(inv_mod(mod_pos(s0 * f0 % qchi * d % qchi * d, qchi), qchi) * v,
                qchi);
    int64_t argp =
        mod_pos(inv_mod(mod_pos(s0 * f0 % qpsi * d % qpsi * d, qpsi), qpsi) * v,
                qpsi);
    cplx pairsum{0.0, 0.0};
    for (size_t ci = 0; ci < gc.chars.size(); ++ci) {
      const DirichletCharacter& chi = gc.chars[ci];
      cplx cfix = chi(ell) * gc.tau_bar[ci] * chi(argc) * chi(-ks * inv_b_qchi);
      if (cfix == cplx{0.0, 0.0}) continue;
      for (size_t pi = 0; pi < gp.chars.size(); ++pi) {
        const DirichletCharacter& psi = gp.chars[pi];
        cplx pfix =
            psi(ell) * gp.tau_bar[pi] * psi(argp) * psi(kr * inv_a_qpsi);
        if (pfix == cplx{0.0, 0.0}) continue;
        pairsum += cfix * pfix / Lval(ci, pi);
      }
    }
    acc += dfac * pairsum;
  }
  return pref * acc;
}

std::vector<EisCheckRow> verify_eisenstein_pairs(int64_t N,
                                                 const std::vector<cplx>& us,
                                                 int64_t nmax, double tol,
                                                 int64_t rep_cap,
                                                 double slack) {
  std::vector<int64_t> ns(nmax);
  for (int64_t i = 0; i < nmax; ++i) ns[i] = i + 1;
  std::vector<EisCheckRow> rows;
  for (int64_t r : divisors(factorize(N))) {
    if (std::gcd(r, N / r) != 1) continue;
    for (const CuspRep& cusp : cusp_list(N)) {
      EisPair P = make_eis_pair(N, r, cusp);
      EisSeries S = phi_series(P, ns, us, tol, rep_cap);
      for (size_t i = 0; i < ns.size(); ++i)
        for (size_t ui = 0; ui < us.size(); ++ui) {
          EisCheckRow row;
          row.N = N;
          row.r = r;
          row.v = P.cusp.v;
          row.f = P.cusp.f;
          row.n = ns[i];
          row.u = us[ui];
          row.series = S.values[i][ui];
          row.closed = phi_closed(P, ns[i], us[ui]);
          row.abs_err = std::abs(row.series - row.closed);
          row.tolerance = S.tail_bound + slack;
          row.pass = row.abs_err <= row.tolerance;
          rows.push_back(row);
        }
    }
  }
  return rows;
}

}  // namespace momentlab
