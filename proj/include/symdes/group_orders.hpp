#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symdes/bigint.hpp"

namespace symdes {

enum class Family {
  Alternating,
  PSL,
  PSU,
  PSp,
  POmegaOdd,    // P-Omega(2m+1, q), q odd
  POmegaPlus,   // P-Omega+(2m, q)
  POmegaMinus,  // P-Omega-(2m, q)
  G2,
  F4,
  E6,
  E7,
  E8,
  TwistedE6,    // 2E6(q)
  TrialityD4,   // 3D4(q)
  Suzuki,       // 2B2(q), q = 2^(2m+1)
  Ree,          // 2G2(q), q = 3^(2m+1)
  TwistedF4,    // 2F4(q), q = 2^(2m+1), q > 2
  Sporadic,     // includes the Tits group 2F4(2)'
};

// Identifier of a finite simple group.  For Lie type, q = p^a; n is the
// subscript of the classical family (PSL_n etc.) or the degree of A_n.
struct SimpleGroupId {
  Family family;
  int n = 0;
  int p = 0, a = 0;
  std::string name;  // sporadic only

  Bigint q() const { return ipow(p, static_cast<unsigned>(a)); }
  bool operator==(const SimpleGroupId&) const = default;
};

SimpleGroupId alternating(int n);
SimpleGroupId lie(Family f, int n, int p, int a);       // classical
SimpleGroupId lie(Family f, int p, int a);              // exceptional
SimpleGroupId sporadic(const std::string& name);

std::string to_string(const SimpleGroupId& id);

// Throws std::invalid_argument naming the violated simplicity range.
void validate(const SimpleGroupId& id);

Bigint order(const SimpleGroupId& id);
Bigint out_order(const SimpleGroupId& id);

// Lower bounds for classical groups: (a) PSL_n(q) > q^(n^2-2);
// (b) PSU_n(q) > (1-1/q) q^(n^2-2); (c) PSp_n(q) > q^(n(n+1)/2) / 2gcd(2,q-1);
// (d) POmega^eps_n(q) > q^(n(n-1)/2) / 4gcd(2,n).  Exact cross-multiplied
// comparisons only.  Throws for non-classical ids.
bool check_lower_bound(const SimpleGroupId& id);

struct SporadicRow {
  std::string name;
  Bigint group_order;
  int out;
  bool tits;  // the Tits group rides along in this table but is not
              // counted among the 26 sporadic groups
};
const std::vector<SporadicRow>& sporadic_table();

// Replays the bounded search behind "|T| < 8 |Out(T)|^3 implies T = A5 or
// A6".  Each family contributes a trace: the derived finite candidate range,
// the candidates enumerated, and which of them satisfy the inequality.
struct FamilyTrace {
  std::string family;                  // human-readable family tag
  std::string range;                   // the inequality that bounded the scan
  std::vector<std::string> candidates; // enumerated (validity not yet applied)
  std::vector<std::pair<int, int>> pa_pairs;  // (p,a) pairs behind candidates
  std::vector<std::string> invalid;    // failed simplicity ranges (e.g. PSU3(2))
  std::vector<std::string> satisfying; // pass the exact |T| < 8|Out|^3 test
};

struct LemmaOutResult {
  std::vector<SimpleGroupId> survivors;  // after alias deduplication
  std::vector<SimpleGroupId> survivors_with_aliases;
  std::vector<FamilyTrace> traces;
};

LemmaOutResult lemma_out_search();

// The classical exceptional isomorphisms relevant at these orders.
// Returns the canonical representative (alternating form when one exists).
SimpleGroupId canonical_alias(const SimpleGroupId& id);

}  // namespace symdes
