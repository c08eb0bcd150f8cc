#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace arcperm {

// Exact counts throughout the library: chain counts and tableau counts
// overflow 64 bits already for moderate degrees.
using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(int n);
BigInt binomial(int n, int k);
BigInt pow2(int e);

// Quotient that must be exact; throws std::logic_error on a remainder.
BigInt exact_div(const BigInt& num, const BigInt& den);

}  // namespace arcperm
