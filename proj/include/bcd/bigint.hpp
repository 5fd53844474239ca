#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace bcd {

using Int = boost::multiprecision::cpp_int;

// binomial(n, k) with the usual convention of 0 outside 0 <= k <= n.
Int binomial(long n, long k);

// 2^e for e >= 0.
Int pow2(int e);

}  // namespace bcd
