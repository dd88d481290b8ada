#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "symdes/bigint.hpp"

namespace symdes {

// Parameters (v,k,lambda) of a symmetric 2-design.
struct DesignParams {
  Bigint v, k, lambda;
  bool operator==(const DesignParams&) const = default;
};

// Outcome of the three necessary conditions a flag-transitive symmetric
// design must satisfy.  Any integer triple yields a report; nothing throws.
struct AdmissibilityReport {
  bool identity_holds;   // k(k-1) = lambda(v-1)
  bool non_trivial;      // 2 < k < v-2
  bool flag_condition;   // lambda*v < k^2
  bool pass() const { return identity_holds && non_trivial && flag_condition; }
};

AdmissibilityReport check_admissible(const Bigint& v, const Bigint& k,
                                     const Bigint& lambda);

// Solve the ratio form: given lambda and t = k/lambda, the design parameters
// are forced to v = lambda*t^2 - t + 1, k = lambda*t.  Throws
// std::domain_error when the result is a trivial structure.
DesignParams params_from_ratio(const Bigint& lambda, const Bigint& t);

// An invariant partition signature: d classes of size c, every block meeting
// a class in 0 or l points.
struct ImprimitivityTriple {
  Bigint c, d, l;
  bool operator==(const ImprimitivityTriple&) const = default;
};

struct ImprimitiveFamily {
  DesignParams params;                          // (l^2(l+2), l(l+1), l)
  std::array<ImprimitivityTriple, 2> triples;   // (l^2,l+2,l) and (l+2,l^2,2)
};

// The one-parameter family of imprimitive candidates.  lambda = 1 gives the
// trivial (3,2,1) structure and is rejected (std::domain_error).
ImprimitiveFamily imprimitive_family(const Bigint& lambda);

// The four structural cases for a flag-transitive point-imprimitive
// symmetric design, specialised to lambda | k and k >= lambda^2.
struct CaseOutcome {
  char which;               // 'a'..'d'
  bool survives;
  std::string reason;       // rejection explanation, empty when surviving
  std::optional<DesignParams> params;
  std::vector<ImprimitivityTriple> triples;
};

std::vector<CaseOutcome> praeger_zhou_filter(const Bigint& lambda);

}  // namespace symdes
