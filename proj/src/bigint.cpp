#include "symdes/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace symdes {

std::vector<Bigint> divisors(const Bigint& n) {
  if (n <= 0) throw std::invalid_argument("divisors: n must be positive");
  std::vector<Bigint> small, large;
  for (Bigint i = 1; i * i <= n; ++i) {
    if (n % i == 0) {
      small.push_back(i);
      if (i * i != n) large.push_back(n / i);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

}  // namespace symdes
