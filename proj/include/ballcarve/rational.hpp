#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace ballcarve {

using BigInt = boost::multiprecision::cpp_int;
/// Always held in lowest terms with a positive denominator.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt ipow(const BigInt &base, std::uint64_t exp) {
  BigInt result = 1, b = base;
  while (exp) {
    if (exp & 1)
      result *= b;
    b *= b;
    exp >>= 1;
  }
  return result;
}

inline Rational rpow(const Rational &base, std::uint64_t exp) {
  return Rational(ipow(boost::multiprecision::numerator(base), exp),
                  ipow(boost::multiprecision::denominator(base), exp));
}

BigInt floor(const Rational &x);
BigInt ceil(const Rational &x);

/// "p/q", or just "p" when q == 1.
std::string to_string(const Rational &x);
std::string to_string(const BigInt &x);
double to_double(const Rational &x);

/// Accepts "p", "p/q", or a finite decimal like "0.25" or "-1.5".
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

} // namespace ballcarve
