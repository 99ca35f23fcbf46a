#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <numeric>

#include "momentlab/arith.hpp"
#include "momentlab/characters.hpp"
#include "momentlab/cusps.hpp"
#include "momentlab/eisenstein.hpp"

using namespace momentlab;

TEST_CASE("level coordinates reproduce the generic double-coset enumeration") {
  for (int64_t N : {4LL, 6LL, 12LL, 18LL}) {
    for (int64_t r : divisors(factorize(N))) {
      if (std::gcd(r, N / r) != 1) continue;
      int64_t s = N / r;
      for (const CuspRep& cusp : cusp_list(N)) {
        EisPair P = make_eis_pair(N, r, cusp);
        ScalingMatrix M1 = scaling_matrix(P.cusp);
        ScalingMatrix W = atkin_lehner_matrix(N, s);
        int64_t w = P.width;
        for (int64_t j = 1; w * s * j <= 260; ++j) {
          auto fast = eis_level_coords(P, j);
          auto slow = double_coset_reps(M1, W, N, w * s * j);
          std::vector<int64_t> slow_coords;
          for (const CosetRep& rep : slow) {
            REQUIRE(rep.k22 % w == 0);
            slow_coords.push_back(rep.k22 / w);
          }
          std::sort(slow_coords.begin(), slow_coords.end());
          INFO("N=", N, " r=", r, " v=", P.cusp.v, " f=", P.cusp.f, " j=", j);
          CHECK(fast == slow_coords);
        }
        // No coset has bottom-left entry that is not a multiple of w s.
        for (int64_t k21 = 1; k21 <= std::min<int64_t>(w * s, 40); ++k21)
          if (k21 % (w * s) != 0)
            CHECK(double_coset_reps(M1, W, N, k21).empty());
      }
    }
  }
}

TEST_CASE("level 1 reduces to sigma_{1-2u}(n)/zeta(2u)") {
  EisPair P = make_eis_pair(1, 1, CuspRep{1, 1, 1});
  std::vector<cplx> us = {cplx{1.25, 0.0}, cplx{1.25, 0.5}};
  std::vector<int64_t> ns = {1, 2, 3, 4, 6, 12};
  EisSeries S = phi_series(P, ns, us, 1e-9, 4000000);
  for (size_t ui = 0; ui < us.size(); ++ui) {
    cplx u = us[ui];
    for (size_t i = 0; i < ns.size(); ++i) {
      cplx sigma{0.0, 0.0};
      for (int64_t d : divisors(factorize(ns[i])))
        sigma += std::exp((1.0 - 2.0 * u) * std::log(double(d)));
      cplx expect = sigma / riemann_zeta(2.0 * u);
      CHECK(std::abs(S.values[i][ui] - expect) <= S.tail_bound + 1e-9);
      CHECK(std::abs(phi_closed(P, ns[i], u) - expect) < 1e-10);
    }
  }
}

TEST_CASE("tail bound is honest: deeper truncation stays within it") {
  for (int64_t N : {6LL, 8LL}) {
    for (int64_t r : divisors(factorize(N))) {
      if (std::gcd(r, N / r) != 1) continue;
      for (const CuspRep& cusp : cusp_list(N)) {
        EisPair P = make_eis_pair(N, r, cusp);
        std::vector<cplx> us = {cplx{1.25, 0.0}};
        std::vector<int64_t> ns = {1, 5};
        EisSeries shallow = phi_series(P, ns, us, 1e-2, 50000);
        EisSeries deep = phi_series(P, ns, us, 1e-5, 1500000);
        for (size_t i = 0; i < ns.size(); ++i) {
          double drift = std::abs(shallow.values[i][0] - deep.values[i][0]);
          CHECK(drift <= shallow.tail_bound + deep.tail_bound);
        }
      }
    }
  }
}

TEST_CASE("closed form matches the truncated series on small levels") {
  std::vector<cplx> us = {cplx{1.25, 0.0}, cplx{1.25, 0.5}};
  for (int64_t N : {1LL, 2LL, 3LL, 4LL, 6LL}) {
    auto rows = verify_eisenstein_pairs(N, us, 6, 1e-7, 300000, 1e-6);
    CHECK(!rows.empty());
    for (const auto& row : rows) {
      INFO("N=", row.N, " r=", row.r, " v=", row.v, " f=", row.f, " n=", row.n,
           " u=(", row.u.real(), ",", row.u.imag(), ") series=(",
           row.series.real(), ",", row.series.imag(), ") closed=(",
           row.closed.real(), ",", row.closed.imag(), ") err=", row.abs_err,
           " tolerance=", row.tolerance);
      CHECK(row.pass);
    }
  }
}
