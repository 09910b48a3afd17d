#include "ramsey/bigint.hpp"

namespace ramsey {

BigInt binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    BigInt r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt pow2(unsigned long e) {
    BigInt r = 1;
    return r << e;
}

}  // namespace ramsey
