#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace boarding {

// All probabilities and moments are exact rationals over arbitrary-precision
// integers. Floating point appears only at the presentation boundary.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const BigRational& q) {
  return boost::multiprecision::numerator(q);
}

inline BigInt denominator(const BigRational& q) {
  return boost::multiprecision::denominator(q);
}

inline double to_double(const BigRational& q) { return q.convert_to<double>(); }

BigInt factorial(int n);

BigInt binomial(int n, int k);

/// "p/q", or just "p" when the denominator is 1.
std::string fraction_str(const BigRational& q);

/// Exact decimal rendering with `places` fractional digits, rounding
/// half away from zero. 100!-sized denominators are fine.
std::string decimal_str(const BigRational& q, int places);

}  // namespace boarding
