#include "bcd/bigint.hpp"

namespace bcd {

Int binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

Int pow2(int e) {
  Int r = 1;
  return r << e;
}

}  // namespace bcd
