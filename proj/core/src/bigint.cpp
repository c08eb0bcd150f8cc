#include "arcperm/bigint.hpp"

#include <stdexcept>

namespace arcperm {

BigInt factorial(int n) {
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

BigInt pow2(int e) {
    if (e < 0) throw std::invalid_argument("pow2: negative exponent");
    return BigInt(1) << e;
}

BigInt exact_div(const BigInt& num, const BigInt& den) {
    if (den == 0) throw std::logic_error("exact_div: zero divisor");
    BigInt q = num / den;
    if (q * den != num) throw std::logic_error("exact_div: inexact quotient");
    return q;
}

}  // namespace arcperm
