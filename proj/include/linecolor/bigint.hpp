#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace linecolor {

// Arbitrary-precision signed integer. All exact arithmetic in this project
// bottoms out here.
using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(a, b);
}

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::lcm(a, b);
}

// Floor division (cpp_int's operator/ truncates toward zero).
inline BigInt floor_div(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("floor_div: zero divisor");
  BigInt q = num / den;
  if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
  return q;
}

inline bool is_even(const BigInt& x) { return x % 2 == 0; }

inline std::string to_string(const BigInt& x) { return x.str(); }

// Fits-in-int64 check for JSON emission.
inline bool fits_int64(const BigInt& x) {
  return x >= std::numeric_limits<std::int64_t>::min() &&
         x <= std::numeric_limits<std::int64_t>::max();
}

inline std::int64_t to_int64(const BigInt& x) {
  if (!fits_int64(x)) throw std::overflow_error("BigInt does not fit in int64");
  return static_cast<std::int64_t>(x);
}

}  // namespace linecolor
