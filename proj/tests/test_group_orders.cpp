#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "symdes/group_orders.hpp"

using namespace symdes;

TEST_CASE("orders match the published tables (spot checks)") {
  CHECK(order(alternating(5)) == 60);
  CHECK(order(alternating(6)) == 360);
  CHECK(order(alternating(8)) == 20160);
  CHECK(order(lie(Family::PSL, 2, 7, 1)) == 168);
  CHECK(order(lie(Family::PSL, 2, 3, 2)) == 360);          // PSL(2,9)
  CHECK(order(lie(Family::PSL, 3, 2, 2)) == 20160);        // PSL(3,4)
  CHECK(order(lie(Family::PSL, 4, 2, 1)) == 20160);        // PSL(4,2)
  CHECK(order(lie(Family::PSU, 3, 3, 1)) == 6048);
  CHECK(order(lie(Family::PSU, 4, 2, 1)) == 25920);
  CHECK(order(lie(Family::PSp, 4, 3, 1)) == 25920);
  CHECK(order(lie(Family::PSp, 6, 2, 1)) == 1451520);
  CHECK(order(lie(Family::POmegaOdd, 7, 3, 1)) == 4585351680LL);
  CHECK(order(lie(Family::POmegaPlus, 8, 2, 1)) == 174182400);
  CHECK(order(lie(Family::G2, 3, 1)) == Bigint("4245696"));
  CHECK(order(lie(Family::Suzuki, 2, 3)) == 29120);        // Sz(8)
  CHECK(order(lie(Family::Ree, 3, 3)) == Bigint("10073444472"));  // Ree(27)
  CHECK(order(sporadic("M11")) == 7920);
  CHECK(order(sporadic("M24")) == 244823040);
  CHECK(order(sporadic("2F4(2)'")) == 17971200);
  CHECK(order(sporadic("M")) ==
        Bigint("808017424794512875886459904961710757005754368000000000"));
}

TEST_CASE("outer automorphism group orders (spot checks)") {
  CHECK(out_order(alternating(5)) == 2);
  CHECK(out_order(alternating(6)) == 4);
  CHECK(out_order(alternating(7)) == 2);
  CHECK(out_order(lie(Family::PSL, 2, 3, 2)) == 4);   // PSL(2,9) = A6
  CHECK(out_order(lie(Family::PSL, 2, 7, 1)) == 2);
  CHECK(out_order(lie(Family::PSL, 3, 2, 2)) == 12);  // PSL(3,4): 3 x 2 x 2
  CHECK(out_order(lie(Family::PSU, 3, 3, 1)) == 2);
  CHECK(out_order(lie(Family::PSp, 4, 3, 1)) == 2);
  CHECK(out_order(lie(Family::PSp, 4, 2, 2)) == 4);   // PSp(4,4): field x graph
  CHECK(out_order(lie(Family::POmegaPlus, 8, 3, 1)) == 24);  // triality: S4
  CHECK(out_order(lie(Family::TrialityD4, 2, 1)) == 3);
  CHECK(out_order(sporadic("M12")) == 2);
  CHECK(out_order(sporadic("M11")) == 1);
  CHECK(out_order(sporadic("2F4(2)'")) == 2);
}

TEST_CASE("simplicity ranges are enforced") {
  CHECK_THROWS_AS(validate(alternating(4)), std::invalid_argument);
  CHECK_THROWS_AS(validate(lie(Family::PSL, 2, 2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(validate(lie(Family::PSL, 2, 3, 1)), std::invalid_argument);
  CHECK_THROWS_AS(validate(lie(Family::PSU, 3, 2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(validate(lie(Family::PSp, 4, 2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(validate(lie(Family::G2, 2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(validate(lie(Family::PSL, 2, 6, 1)), std::invalid_argument);  // p not prime
  CHECK_THROWS_AS(validate(sporadic("NotAGroup")), std::invalid_argument);
  CHECK_NOTHROW(validate(lie(Family::PSL, 2, 2, 2)));   // PSL(2,4)
  CHECK_NOTHROW(validate(lie(Family::G2, 2, 2)));       // G2(4)
}

TEST_CASE("classical lower bounds hold on the full grid n <= 12, q <= 27") {
  const int qs[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27};
  auto pa = [](int q, int& p, int& a) {
    for (p = 2;; ++p)
      if (q % p == 0) break;
    a = 0;
    while (q > 1) q /= p, ++a;
  };
  int checked = 0;
  for (int q : qs) {
    int p, a;
    pa(q, p, a);
    for (int n = 2; n <= 12; ++n) {
      for (Family f : {Family::PSL, Family::PSU, Family::PSp, Family::POmegaOdd,
                       Family::POmegaPlus, Family::POmegaMinus}) {
        SimpleGroupId id = lie(f, n, p, a);
        try {
          validate(id);
        } catch (const std::invalid_argument&) {
          continue;  // outside the family's simplicity range
        }
        CHECK(check_lower_bound(id));
        ++checked;
      }
    }
  }
  CHECK(checked > 200);  // the grid is actually exercised
}

TEST_CASE("sporadic table shape") {
  const auto& tab = sporadic_table();
  CHECK(tab.size() == 27);  // 26 sporadic groups + the Tits group
  int tits = 0;
  std::set<std::string> names;
  for (const auto& row : tab) {
    CHECK(names.insert(row.name).second);
    CHECK(row.group_order > 1);
    CHECK((row.out == 1 || row.out == 2));
    if (row.tits) ++tits;
  }
  CHECK(tits == 1);
}

TEST_CASE("exceptional isomorphisms collapse to canonical representatives") {
  CHECK(canonical_alias(lie(Family::PSL, 2, 2, 2)) == alternating(5));
  CHECK(canonical_alias(lie(Family::PSL, 2, 5, 1)) == alternating(5));
  CHECK(canonical_alias(lie(Family::PSL, 2, 3, 2)) == alternating(6));
  CHECK(canonical_alias(lie(Family::PSL, 3, 2, 1)) == lie(Family::PSL, 2, 7, 1));
  CHECK(canonical_alias(lie(Family::PSL, 4, 2, 1)) == alternating(8));
  CHECK(canonical_alias(lie(Family::PSU, 4, 2, 1)) == lie(Family::PSp, 4, 3, 1));
  CHECK(canonical_alias(alternating(7)) == alternating(7));
  // aliased groups really do have equal orders
  CHECK(order(lie(Family::PSL, 2, 2, 2)) == order(alternating(5)));
  CHECK(order(lie(Family::PSU, 4, 2, 1)) == order(lie(Family::PSp, 4, 3, 1)));
}

TEST_CASE("lemma-out search: survivors and intermediate candidate lists") {
  LemmaOutResult r = lemma_out_search();

  REQUIRE(r.survivors.size() == 2);
  CHECK(to_string(r.survivors[0]) == "A5");
  CHECK(to_string(r.survivors[1]) == "A6");

  auto trace = [&](const std::string& fam) -> const FamilyTrace& {
    for (const auto& t : r.traces)
      if (t.family == fam) return t;
    REQUIRE(false);
    return r.traces.front();
  };

  const auto& psl2 = trace("PSL(2,q)");
  std::set<std::pair<int, int>> expect_pa = {{2, 1}, {2, 2}, {2, 3}, {2, 4},
                                             {2, 5}, {2, 6}, {2, 7}, {3, 1},
                                             {3, 2}, {3, 3}, {5, 1}, {7, 1}};
  CHECK(std::set<std::pair<int, int>>(psl2.pa_pairs.begin(), psl2.pa_pairs.end()) ==
        expect_pa);
  CHECK(psl2.pa_pairs.size() == 12);

  const auto& psl3 = trace("PSL(3,q)");
  CHECK(psl3.candidates == std::vector<std::string>{"PSL(3,2)", "PSL(3,4)"});
  CHECK(psl3.satisfying.empty());

  const auto& psu3 = trace("PSU(3,q)");
  CHECK(psu3.satisfying.empty());
  std::set<std::string> psu_rejected(psu3.candidates.begin(), psu3.candidates.end());
  for (const auto& s : psu3.invalid) psu_rejected.erase(s);
  CHECK(psu_rejected == std::set<std::string>{"PSU(3,3)", "PSU(3,4)"});
  CHECK(std::set<std::string>(psu3.invalid.begin(), psu3.invalid.end()) ==
        std::set<std::string>{"PSU(3,2)"});

  // every other Lie family contributes an empty candidate range
  for (const auto& t : r.traces) {
    if (t.family == "alternating" || t.family == "sporadic" ||
        t.family == "PSL(2,q)" || t.family == "PSL(3,q)" || t.family == "PSU(3,q)")
      continue;
    CHECK(t.candidates.empty());
  }

  // the survivor list with aliases contains the PSL forms of A5 and A6
  std::set<std::string> alias_names;
  for (const auto& s : r.survivors_with_aliases) alias_names.insert(to_string(s));
  CHECK(alias_names.count("PSL(2,4)") == 1);
  CHECK(alias_names.count("PSL(2,5)") == 1);
  CHECK(alias_names.count("PSL(2,9)") == 1);
}
