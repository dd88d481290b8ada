#include "symdes/diagonal_sieve.hpp"

#include <sstream>
#include <stdexcept>

namespace symdes {

std::string to_string(DiagVerdict v) {
  switch (v) {
    case DiagVerdict::NonIntegralLambda: return "NonIntegralLambda";
    case DiagVerdict::LambdaExceedsT: return "LambdaExceedsT";
    case DiagVerdict::IdentityFails: return "IdentityFails";
    case DiagVerdict::BoundFails: return "BoundFails";
  }
  return "?";
}

int diagonal_m_bound(const SimpleGroupId& T) {
  Bigint o = order(T);
  int m = 4;  // exponent m-4 <= 0 counts as satisfied
  while (ipow(o, static_cast<unsigned>(m - 3)) < ipow(m + 1, 3)) ++m;
  return m;  // |T|^(m-4) outgrows m^3, so the first failure is final
}

namespace {

// Shared divisor scan for the cases with a concrete v.
void scan_t(DiagonalCase& dc, const Bigint& t_cap) {
  for (const Bigint& t : divisors(dc.v - 1)) {
    if (t < 2 || (t_cap > 0 && t > t_cap)) continue;
    Bigint num = dc.v + t - 1;
    DiagonalRow row{t, DiagVerdict::NonIntegralLambda, ""};
    std::ostringstream d;
    if (num % (t * t) != 0) {
      d << "t^2 = " << t * t << " does not divide v+t-1 = " << num;
      row.detail = d.str();
      dc.rows.push_back(std::move(row));
      continue;
    }
    Bigint lam = num / (t * t);
    if (lam > t) {
      row.verdict = DiagVerdict::LambdaExceedsT;
      d << "lambda = " << lam << " > t";
      row.detail = d.str();
      dc.rows.push_back(std::move(row));
      continue;
    }
    Bigint k = lam * t;
    if (k >= dc.v) {
      row.verdict = DiagVerdict::IdentityFails;
      d << "k = " << k << " >= v";
      row.detail = d.str();
      dc.rows.push_back(std::move(row));
      continue;
    }
    dc.survivors.push_back(t);
  }
}

}  // namespace

DiagonalCase diagonal_case_m5() {
  DiagonalCase dc{5, alternating(5), ipow(60, 4), {}, {}};
  scan_t(dc, 5 * 60);  // t <= m|T|
  return dc;
}

DiagonalCase diagonal_case_m2(const SimpleGroupId& T) {
  if (!(T == alternating(5) || T == alternating(6)))
    throw std::invalid_argument(
        "diagonal_case_m2: only A5 and A6 remain after the Out-order search");
  DiagonalCase dc{2, T, order(T), {}, {}};
  scan_t(dc, 0);  // t <= v-1 already; no extra cutoff needed
  return dc;
}

DiagonalCase diagonal_case_m34(const SimpleGroupId& T, int m) {
  if (!(T == alternating(5) || T == alternating(6)))
    throw std::invalid_argument(
        "diagonal_case_m34: only A5 and A6 remain after the Out-order search");
  if (m != 3 && m != 4) throw std::invalid_argument("diagonal_case_m34: m must be 3 or 4");
  DiagonalCase dc{m, T, ipow(order(T), static_cast<unsigned>(m - 1)), {}, {}};
  Bigint o = order(T), out = out_order(T);
  bool excluded;
  std::ostringstream d;
  if (m == 3) {
    // |T|^2 < 6^3 |Out|^3 is the exact form of |T| < 6^(3/2) |Out|
    excluded = !(o * o < 216 * out * out * out);
    d << "|T|^2 = " << o * o << (excluded ? " >= " : " < ") << "216*|Out|^3 = "
      << 216 * out * out * out;
  } else {
    excluded = !(o < 24 * out);
    d << "|T| = " << o << (excluded ? " >= " : " < ") << "24*|Out| = " << 24 * out;
  }
  if (excluded)
    dc.rows.push_back(DiagonalRow{0, DiagVerdict::BoundFails, d.str()});
  else
    dc.survivors.push_back(0);  // bound does not exclude T: claim violated
  return dc;
}

}  // namespace symdes
