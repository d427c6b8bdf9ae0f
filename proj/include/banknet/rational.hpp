#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "banknet/errors.hpp"

namespace banknet {

// Exact arithmetic for the combinatorial sums. (2r)! overflows 64-bit integers
// from r = 11 on, so the sums are carried in arbitrary precision and converted
// to binary64 only at the end. cpp_rational keeps lowest terms and a positive
// denominator canonically.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt big_factorial(int k)
{
    if (k < 0) throw invalid_params("factorial: need k >= 0");
    BigInt out = 1;
    for (int i = 2; i <= k; ++i) out *= i;
    return out;
}

inline BigInt big_pow2(int e)
{
    if (e < 0) throw invalid_params("pow2: need e >= 0");
    return BigInt(1) << e;
}

inline BigInt big_binomial(int m, int k)
{
    if (k < 0 || k > m) return 0;
    // multiplicative form keeps intermediates small and exact
    BigInt out = 1;
    for (int i = 1; i <= k; ++i) {
        out *= (m - k + i);
        out /= i;
    }
    return out;
}

inline double to_double(const Rational& q)
{
    return q.convert_to<double>();
}

} // namespace banknet
