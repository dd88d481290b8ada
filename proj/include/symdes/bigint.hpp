#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace symdes {

// All design/group arithmetic is exact; no floating point anywhere.
using Bigint = boost::multiprecision::cpp_int;

inline Bigint ipow(Bigint base, unsigned exp) {
  Bigint r = 1;
  while (exp) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

// Sorted list of all positive divisors of n (trial division; callers only
// pass values up to ~60^4, so nothing cleverer is warranted).
std::vector<Bigint> divisors(const Bigint& n);

}  // namespace symdes
