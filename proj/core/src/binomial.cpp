#include "bettikit/binomial.hpp"

#include <algorithm>

namespace bettikit {

BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigInt result = 1;
  // Each partial product is C(a - b + i, i), so the division is exact.
  for (std::int64_t i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;
  }
  return result;
}

}  // namespace bettikit
