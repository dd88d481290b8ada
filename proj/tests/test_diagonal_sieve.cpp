#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "symdes/diagonal_sieve.hpp"

using namespace symdes;

TEST_CASE("m-bound from |T|^(m-4) < m^3") {
  CHECK(diagonal_m_bound(alternating(5)) == 5);
  CHECK(diagonal_m_bound(alternating(6)) == 4);
  CHECK(diagonal_m_bound(lie(Family::PSp, 4, 3, 1)) == 4);
}

TEST_CASE("m = 5: t-candidates are exactly {13, 59, 61, 277}, all non-integral") {
  DiagonalCase c = diagonal_case_m5();
  CHECK(c.m == 5);
  CHECK(to_string(c.T) == "A5");
  CHECK(c.v == ipow(Bigint(60), 4));
  std::set<Bigint> ts;
  for (const auto& r : c.rows) {
    CHECK(r.verdict == DiagVerdict::NonIntegralLambda);
    ts.insert(r.t);
  }
  CHECK(ts == std::set<Bigint>{13, 59, 61, 277});
  CHECK(c.survivors.empty());
  // the candidate t-values really are the prime divisors of 60^4 - 1
  for (const Bigint& t : ts) CHECK((c.v - 1) % t == 0);
}

TEST_CASE("m = 2 for A5 and A6: no admissible lambda") {
  for (int n : {5, 6}) {
    DiagonalCase c = diagonal_case_m2(alternating(n));
    CHECK(c.m == 2);
    CHECK(c.v == order(alternating(n)));
    CHECK_FALSE(c.rows.empty());
    CHECK(c.survivors.empty());
    for (const auto& r : c.rows) {
      CHECK((r.verdict == DiagVerdict::NonIntegralLambda ||
             r.verdict == DiagVerdict::LambdaExceedsT ||
             r.verdict == DiagVerdict::IdentityFails));
      CHECK((c.v - 1) % r.t == 0);  // t ranges over divisors of v - 1
    }
  }
}

TEST_CASE("m in {3,4}: the order bounds exclude A5 and A6 outright") {
  // m = 4: |T| < 24|Out| needed; 60 >= 48 and 360 >= 96 both fail it
  for (int n : {5, 6}) {
    DiagonalCase c = diagonal_case_m34(alternating(n), 4);
    CHECK(c.survivors.empty());
    REQUIRE(c.rows.size() == 1);
    CHECK(c.rows[0].verdict == DiagVerdict::BoundFails);
  }
  // m = 3: |T|^2 < 216|Out|^3 needed; 3600 >= 1728 fails it (A5), likewise A6
  for (int n : {5, 6}) {
    DiagonalCase c = diagonal_case_m34(alternating(n), 3);
    CHECK(c.survivors.empty());
    REQUIRE(c.rows.size() == 1);
    CHECK(c.rows[0].verdict == DiagVerdict::BoundFails);
  }
  // the arithmetic behind the pattern, directly
  Bigint a5 = order(alternating(5)), a6 = order(alternating(6));
  Bigint o5 = out_order(alternating(5)), o6 = out_order(alternating(6));
  CHECK(a5 >= 24 * o5);                    // 60 >= 48
  CHECK(a6 >= 24 * o6);                    // 360 >= 96
  CHECK(a5 * a5 >= 216 * o5 * o5 * o5);    // 3600 >= 1728
  CHECK(a6 * a6 >= 216 * o6 * o6 * o6);
}

TEST_CASE("m = 5 candidate list is stable under removing the t cap") {
  // Independent oracle: the sieve caps t at m|T| = 300 (the structural bound
  // on t = k/lambda).  Check directly that no divisor of 60^4 - 1 of any
  // size yields an integral lambda = (v + t - 1)/t^2, so the cap hides
  // nothing.
  Bigint v = ipow(Bigint(60), 4);
  std::set<Bigint> in_cap;
  for (const Bigint& t : divisors(v - 1)) {
    if (t < 2) continue;
    CHECK((v + t - 1) % (t * t) != 0);  // lambda never integral
    if (t <= 300) in_cap.insert(t);
  }
  std::set<Bigint> got;
  for (const auto& r : diagonal_case_m5().rows) got.insert(r.t);
  CHECK(got == in_cap);
}
