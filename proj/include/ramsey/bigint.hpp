#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace ramsey {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// C(n, k) as an exact big integer; 0 when k < 0 or k > n.
BigInt binomial(long n, long k);

// 2^e for e >= 0.
BigInt pow2(unsigned long e);

}  // namespace ramsey
