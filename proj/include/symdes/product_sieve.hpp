#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symdes/bigint.hpp"

namespace symdes {

enum class Verdict {
  RejectedKGeLambdaSq,   // lambda > t, i.e. k < lambda^2
  RejectedDivisibility,  // k does not divide lambda * ell * (m-1)
  RejectedNonIntegral,   // lambda (or an auxiliary) fails integrality
  FlaggedExternal,       // passes the arithmetic; eliminated only by citation
};

std::string to_string(Verdict v);

struct ProductCandidate {
  int ell;
  Bigint m, t;
  std::optional<Bigint> x, y;  // auxiliaries of the ell = 2, 3 parameterisations
  Bigint v, k, lambda;         // lambda meaningful only when integral
  Verdict verdict;
};

// All m >= 5 with m^ell < ell^3 (m-1)^3.  Only sensible for ell in [4,6]:
// for ell <= 3 the inequality holds for every m >= 5 (throws), for ell >= 7
// it holds for none (returns empty).
std::vector<Bigint> admissible_m_range(int ell);

// ell in {4,5}: divisor-driven sieve over t | m^ell - 1 with
// t^2 | (m^ell + t - 1).  jobs > 1 splits the m-range across threads; the
// merged output is identical regardless of schedule.
std::vector<ProductCandidate> sieve_ell45(int ell, int jobs = 1);

// ell = 3: (t, y) parameterisation, t in [2,107], y in [1,31].
std::vector<ProductCandidate> sieve_ell3();

// ell = 2: (t, y) parameterisation, t in [2,71], y in [1,5].  The two
// survivors (121,25,5) and (441,56,7) come back FlaggedExternal.
std::vector<ProductCandidate> sieve_ell2();

}  // namespace symdes
