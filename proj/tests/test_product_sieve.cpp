#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "symdes/core_params.hpp"
#include "symdes/product_sieve.hpp"

using namespace symdes;

namespace {

std::map<Verdict, int> tally(const std::vector<ProductCandidate>& rows) {
  std::map<Verdict, int> t;
  for (const auto& r : rows) ++t[r.verdict];
  return t;
}

}  // namespace

TEST_CASE("admissible m-range per number of factors") {
  auto m4 = admissible_m_range(4);
  REQUIRE_FALSE(m4.empty());
  CHECK(m4.front() == 5);
  CHECK(m4.back() == 60);
  CHECK(m4.size() == 56);
  for (const Bigint& m : m4) CHECK(ipow(m, 4) < 64 * ipow(m - 1, 3));

  auto m5 = admissible_m_range(5);
  REQUIRE_FALSE(m5.empty());
  CHECK(m5.front() == 5);
  for (const Bigint& m : m5) CHECK(ipow(m, 5) < 125 * ipow(m - 1, 3));

  CHECK(admissible_m_range(6).empty());
  CHECK(admissible_m_range(7).empty());
  CHECK_THROWS_AS(admissible_m_range(3), std::domain_error);
  CHECK_THROWS_AS(admissible_m_range(2), std::domain_error);
}

TEST_CASE("ell = 5 sieve: the two candidates, both rejected by lambda <= t") {
  auto rows = sieve_ell45(5);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].v == 16807);
  CHECK(rows[0].k == 8404);
  CHECK(rows[0].lambda == 4202);
  CHECK(rows[0].verdict == Verdict::RejectedKGeLambdaSq);
  CHECK(rows[1].v == 16807);
  CHECK(rows[1].k == 2802);
  CHECK(rows[1].lambda == 467);
  CHECK(rows[1].verdict == Verdict::RejectedKGeLambdaSq);
}

TEST_CASE("ell = 4 sieve: the four divisibility rejections and nothing surviving") {
  auto rows = sieve_ell45(4);
  CHECK(rows.size() == 42);
  auto t = tally(rows);
  CHECK(t[Verdict::RejectedDivisibility] == 4);
  CHECK(t[Verdict::RejectedKGeLambdaSq] == 38);
  CHECK(t[Verdict::FlaggedExternal] == 0);

  // the four published tuples (m, t, v, k, lambda), rejected by k | 4*lambda*(m-1)
  struct Row { long long m, t, v, k, lam; };
  const Row expect[] = {{13, 51, 28561, 561, 11},
                        {31, 555, 923521, 1665, 3},
                        {47, 345, 4879681, 14145, 41},
                        {57, 416, 10556001, 25376, 61}};
  for (const Row& e : expect) {
    bool found = false;
    for (const auto& r : rows)
      if (r.m == e.m && r.t == e.t && r.v == e.v && r.k == e.k && r.lambda == e.lam) {
        found = true;
        CHECK(r.verdict == Verdict::RejectedDivisibility);
        CHECK((4 * r.lambda * (r.m - 1)) % r.k != 0);
        // all four satisfy the design identity, so only divisibility kills them
        CHECK(r.k * (r.k - 1) == r.lambda * (r.v - 1));
      }
    CHECK(found);
  }
}

TEST_CASE("ell = 4 sieve is deterministic across thread counts") {
  auto one = sieve_ell45(4, 1);
  auto four = sieve_ell45(4, 4);
  auto eight = sieve_ell45(4, 8);
  REQUIRE(one.size() == four.size());
  REQUIRE(one.size() == eight.size());
  for (size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].m == four[i].m);
    CHECK(one[i].t == four[i].t);
    CHECK(one[i].verdict == four[i].verdict);
    CHECK(one[i].m == eight[i].m);
    CHECK(one[i].t == eight[i].t);
    CHECK(one[i].verdict == eight[i].verdict);
  }
}

TEST_CASE("ell = 3 sieve: full (t, y) table, no survivors") {
  auto rows = sieve_ell3();
  CHECK(rows.size() == 316);
  auto t = tally(rows);
  CHECK(t[Verdict::RejectedNonIntegral] == 270);
  CHECK(t[Verdict::RejectedKGeLambdaSq] == 46);
  CHECK(t[Verdict::FlaggedExternal] == 0);
  for (const auto& r : rows) {
    CHECK(r.ell == 3);
    REQUIRE(r.y.has_value());
    CHECK(*r.y >= 1);
    CHECK(*r.y <= 31);
    CHECK(r.t >= 2);
    CHECK(r.t <= 107);
    if (r.verdict == Verdict::RejectedKGeLambdaSq) CHECK(r.lambda > r.t);
  }
}

TEST_CASE("ell = 2 sieve: exactly (121,25,5) and (441,56,7) survive arithmetically") {
  auto rows = sieve_ell2();
  CHECK(rows.size() == 156);
  auto t = tally(rows);
  CHECK(t[Verdict::RejectedNonIntegral] == 114);
  CHECK(t[Verdict::RejectedKGeLambdaSq] == 40);
  CHECK(t[Verdict::FlaggedExternal] == 2);

  std::vector<const ProductCandidate*> flagged;
  for (const auto& r : rows)
    if (r.verdict == Verdict::FlaggedExternal) flagged.push_back(&r);
  REQUIRE(flagged.size() == 2);
  CHECK(flagged[0]->v == 121);
  CHECK(flagged[0]->k == 25);
  CHECK(flagged[0]->lambda == 5);
  CHECK(flagged[0]->t == 5);
  CHECK(*flagged[0]->y == 4);
  CHECK(flagged[1]->v == 441);
  CHECK(flagged[1]->k == 56);
  CHECK(flagged[1]->lambda == 7);
  CHECK(flagged[1]->t == 8);
  CHECK(*flagged[1]->y == 3);
  // both pass the admissibility identity: the rejection is external only
  for (const auto* r : flagged)
    CHECK(check_admissible(r->v, r->k, r->lambda).pass());
}

TEST_CASE("every emitted candidate with integral lambda satisfies the identity") {
  for (int ell : {4, 5}) {
    for (const auto& r : sieve_ell45(ell)) {
      CHECK(r.v == ipow(r.m, static_cast<unsigned>(ell)));
      CHECK(r.k * (r.k - 1) == r.lambda * (r.v - 1));
      CHECK(r.k % r.lambda == 0);  // t = k/lambda integral by construction
    }
  }
}
