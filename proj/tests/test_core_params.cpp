#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symdes/core_params.hpp"

using namespace symdes;

TEST_CASE("check_admissible on classical parameter sets") {
  CHECK(check_admissible(7, 3, 1).pass());
  CHECK(check_admissible(16, 6, 2).pass());
  CHECK(check_admissible(45, 12, 3).pass());
  CHECK(check_admissible(121, 25, 5).pass());

  // identity failure
  CHECK_FALSE(check_admissible(8, 3, 1).identity_holds);
  // trivial: complete design
  auto r = check_admissible(7, 6, 5);
  CHECK(r.identity_holds);
  CHECK_FALSE(r.non_trivial);
  // flag condition lambda*v < k^2
  CHECK(check_admissible(45, 12, 3).flag_condition);
}

TEST_CASE("params_from_ratio round-trips over the lambda,t <= 200 grid") {
  for (int lam = 1; lam <= 200; ++lam) {
    for (int t = 2; t <= 200; ++t) {
      if (lam == 1 && t == 2) {
        CHECK_THROWS_AS(params_from_ratio(lam, t), std::domain_error);
        continue;
      }
      DesignParams p = params_from_ratio(lam, t);
      CHECK(p.v == Bigint(lam) * t * t - t + 1);
      CHECK(p.k == Bigint(lam) * t);
      auto rep = check_admissible(p.v, p.k, p.lambda);
      CHECK(rep.pass());
      CHECK(p.k % p.lambda == 0);  // lambda | k by construction
      if (t >= lam) CHECK(p.k >= p.lambda * p.lambda);
    }
  }
}

TEST_CASE("params_from_ratio rejects degenerate ratios") {
  CHECK_THROWS_AS(params_from_ratio(3, 1), std::domain_error);
  CHECK_THROWS_AS(params_from_ratio(1, 2), std::domain_error);
}

TEST_CASE("imprimitive_family values and self-consistency") {
  for (int lam = 2; lam <= 100; ++lam) {
    ImprimitiveFamily f = imprimitive_family(lam);
    Bigint L = lam;
    CHECK(f.params.v == L * L * (L + 2));
    CHECK(f.params.k == L * (L + 1));
    CHECK(f.params.lambda == L);
    CHECK(check_admissible(f.params.v, f.params.k, f.params.lambda).pass());
    CHECK(f.triples[0] == ImprimitivityTriple{L * L, L + 2, L});
    CHECK(f.triples[1] == ImprimitivityTriple{L + 2, L * L, 2});
    for (const auto& t : f.triples) CHECK(t.c * t.d == f.params.v);
  }
  CHECK_THROWS_AS(imprimitive_family(1), std::domain_error);
}

TEST_CASE("case filter: (a) and (c) never survive, (d) only at lambda = 3") {
  for (int lam = 1; lam <= 100; ++lam) {
    auto cases = praeger_zhou_filter(lam);
    REQUIRE(cases.size() == 4);
    for (const auto& c : cases) {
      if (c.which == 'a' || c.which == 'c') {
        CHECK_FALSE(c.survives);
        CHECK_FALSE(c.reason.empty());
      }
      if (c.which == 'b' && c.survives) {
        REQUIRE(c.params.has_value());
        // the family identity k(k-1) = lambda(v-1)
        CHECK(c.params->k * (c.params->k - 1) == c.params->lambda * (c.params->v - 1));
        CHECK(c.triples.size() == 2);
      }
      if (c.which == 'd') {
        if (lam == 3) {
          CHECK(c.survives);
          REQUIRE(c.params.has_value());
          CHECK(c.params->v == 45);
          CHECK(c.params->k == 12);
          CHECK(c.params->lambda == 3);
          REQUIRE(c.triples.size() == 1);
          CHECK(c.triples[0] == ImprimitivityTriple{9, 5, 3});
        } else {
          CHECK_FALSE(c.survives);
        }
      }
    }
  }
}

TEST_CASE("case (d) stays eliminated far beyond the small range") {
  for (int lam = 101; lam <= 10000; ++lam) {
    for (const auto& c : praeger_zhou_filter(lam))
      if (c.which == 'd') CHECK_FALSE(c.survives);
  }
}
