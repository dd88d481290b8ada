#pragma once

#include <string>
#include <vector>

#include "symdes/bigint.hpp"
#include "symdes/group_orders.hpp"

namespace symdes {

enum class DiagVerdict {
  NonIntegralLambda,  // t^2 does not divide v + t - 1
  LambdaExceedsT,     // lambda > t, i.e. k < lambda^2
  IdentityFails,      // k = lambda*t >= v: no non-trivial symmetric design
  BoundFails,         // the m in {3,4} order bound excludes T outright
};

std::string to_string(DiagVerdict v);

struct DiagonalRow {
  Bigint t;  // 0 for the t-free bound cases (m = 3, 4)
  DiagVerdict verdict;
  std::string detail;
};

struct DiagonalCase {
  int m;
  SimpleGroupId T;
  Bigint v;  // |T|^(m-1)
  std::vector<DiagonalRow> rows;
  std::vector<Bigint> survivors;  // t values no rejection applies to;
                                  // non-empty means the claim is violated
};

// Largest m >= 2 with |T|^(m-4) < m^3 (exponent <= 0 counts as satisfied).
int diagonal_m_bound(const SimpleGroupId& T);

// m = 5 forces T = A5; t runs over divisors of 60^4 - 1 up to m|T| = 300.
DiagonalCase diagonal_case_m5();

// m = 2, T in {A5, A6}: v = |T|, t over divisors of v - 1.
DiagonalCase diagonal_case_m2(const SimpleGroupId& T);

// m in {3,4}: the bound |T|^(m-1) < (m!)^3 |Out(T)|^3 collapses to
// |T|^2 < 216 |Out|^3 (m=3) and |T| < 24 |Out| (m=4).
DiagonalCase diagonal_case_m34(const SimpleGroupId& T, int m);

}  // namespace symdes
