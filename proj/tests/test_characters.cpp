#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>

#include "momentlab/arith.hpp"
#include "momentlab/characters.hpp"

using namespace momentlab;

static double cdist(cplx a, cplx b) { return std::abs(a - b); }

TEST_CASE("character group sizes and orthogonality") {
  for (int64_t q : {1LL, 2LL, 3LL, 4LL, 8LL, 9LL, 12LL, 16LL, 24LL, 35LL,
                    40LL, 72LL, 97LL}) {
    DirichletGroup G = character_group(q);
    CHECK(G.size == euler_phi(q));
    auto chars = all_characters(G);
    REQUIRE(static_cast<int64_t>(chars.size()) == G.size);
    CHECK(chars[0].is_principal());
    // Row orthogonality: sum_a chi(a) conj(psi(a)) = phi(q) [chi == psi].
    for (size_t i = 0; i < chars.size() && i < 6; ++i)
      for (size_t j = 0; j < chars.size() && j < 6; ++j) {
        cplx acc{0, 0};
        for (int64_t a = 0; a < q; ++a)
          acc += chars[i](a) * std::conj(chars[j](a));
        cplx expect = (i == j) ? cplx(static_cast<double>(G.size), 0) : cplx(0, 0);
        INFO("q=", q, " i=", i, " j=", j);
        CHECK(cdist(acc, expect) < 1e-8);
      }
  }
}

TEST_CASE("characters are completely multiplicative on units") {
  for (int64_t q : {7LL, 8LL, 9LL, 15LL, 16LL, 36LL}) {
    DirichletGroup G = character_group(q);
    auto chars = all_characters(G);
    for (const auto& chi : chars)
      for (int64_t a = 1; a < q; ++a)
        for (int64_t b = 1; b < q; ++b) {
          if (std::gcd(a, q) != 1 || std::gcd(b, q) != 1) continue;
          CHECK(cdist(chi(a * b), chi(a) * chi(b)) < 1e-10);
        }
  }
}

TEST_CASE("gauss sums: primitive modulus-p characters have |tau| = sqrt(p)") {
  for (int64_t p : {3LL, 5LL, 7LL, 11LL, 13LL}) {
    DirichletGroup G = character_group(p);
    auto chars = all_characters(G);
    for (const auto& chi : chars) {
      if (chi.is_principal()) continue;  // tau = mu(p) = -1 for principal
      CHECK(std::abs(std::abs(gauss_sum(chi)) - std::sqrt(static_cast<double>(p)))
            < 1e-9);
    }
  }
  // Quadratic character mod 5: tau = sqrt(5).
  DirichletGroup G5 = character_group(5);
  for (const auto& chi : all_characters(G5)) {
    bool quad = !chi.is_principal();
    if (!quad) continue;
    // pick the real character: chi(a)^2 = 1 on units
    bool real_char = true;
    for (int64_t a = 1; a < 5; ++a)
      if (std::abs(chi(a).imag()) > 1e-12) real_char = false;
    if (!real_char) continue;
    CHECK(cdist(gauss_sum(chi), cplx(std::sqrt(5.0), 0)) < 1e-9);
  }
}

TEST_CASE("hurwitz zeta against direct series at high Re(s)") {
  cplx s{6.0, 0.0};
  for (double a : {0.25, 0.5, 1.0}) {
    cplx direct{0, 0};
    for (int k = 0; k < 200000; ++k)
      direct += std::pow(cplx(k + a, 0.0), -s);
    CHECK(cdist(hurwitz_zeta(s, a), direct) < 1e-10);
  }
}

TEST_CASE("riemann zeta spot values") {
  CHECK(std::abs(riemann_zeta(cplx(2, 0)).real() - PI * PI / 6.0) < 1e-10);
  CHECK(std::abs(riemann_zeta(cplx(4, 0)).real() - std::pow(PI, 4) / 90.0) < 1e-10);
  // zeta(1.1+3i) stays finite and the reflection-free region is honored
  CHECK_THROWS(riemann_zeta(cplx(0.9, 0)));
}

TEST_CASE("zeta via Hurwitz split zeta(s) = 2^{-s}(zeta_H(s,1/2)+zeta_H(s,1))") {
  for (cplx s : {cplx(1.3, 0.0), cplx(2.5, 1.0), cplx(1.1, 5.0)}) {
    cplx lhs = riemann_zeta(s);
    cplx rhs = std::pow(cplx(2, 0), -s) *
               (hurwitz_zeta(s, 0.5) + hurwitz_zeta(s, 1.0));
    CHECK(cdist(lhs, rhs) < 1e-9);
  }
}

TEST_CASE("L-functions: principal character matches zeta with Euler factors") {
  for (int64_t q : {2LL, 6LL, 12LL}) {
    DirichletGroup G = character_group(q);
    auto chars = all_characters(G);
    for (cplx s : {cplx(1.5, 0.0), cplx(1.2, 2.0), cplx(2.5, -1.0)}) {
      cplx expect = riemann_zeta(s);
      for (auto [p, e] : factorize(q).factors)
        expect *= (1.0 - std::pow(cplx(static_cast<double>(p), 0), -s));
      CHECK(cdist(dirichlet_L(s, chars[0]), expect) < 1e-9);
    }
  }
}

TEST_CASE("L-functions: nonprincipal character matches slow direct series") {
  DirichletGroup G = character_group(4);
  auto chars = all_characters(G);
  const DirichletCharacter& chi = chars[1];  // the odd character mod 4
  REQUIRE(!chi.is_principal());
  cplx s{2.0, 0.0};
  // L(2, chi_{-4}) = Catalan's constant.
  CHECK(std::abs(dirichlet_L(s, chi).real() - 0.915965594177219015) < 1e-10);
  CHECK(std::abs(dirichlet_L(s, chi).imag()) < 1e-12);
}

TEST_CASE("periodic-coefficient L matches character L") {
  DirichletGroup G = character_group(8);
  auto chars = all_characters(G);
  for (const auto& chi : chars) {
    std::vector<cplx> v(8);
    for (int64_t a = 0; a < 8; ++a) v[a] = chi(a);
    for (cplx s : {cplx(1.4, 0.5), cplx(3.0, 0.0)})
      CHECK(cdist(dirichlet_L_periodic(s, v, 8), dirichlet_L(s, chi)) < 1e-9);
  }
}
