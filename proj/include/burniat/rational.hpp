#pragma once
#include <boost/multiprecision/cpp_int.hpp>

namespace burniat {

// Arbitrary precision throughout; no floating point anywhere in the library.
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt gcd(const BigInt &a, const BigInt &b)
{
    return boost::multiprecision::gcd(a, b);
}

inline BigInt abs(const BigInt &a)
{
    return boost::multiprecision::abs(a);
}

} // namespace burniat
