#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace linpoly {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt big_pow(const BigInt& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

inline BigInt big_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

inline BigInt big_lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return a / big_gcd(a, b) * b;
}

inline bool divides(const BigInt& d, const BigInt& n) { return d != 0 && n % d == 0; }

inline std::string to_string(const BigInt& v) { return v.str(); }

}  // namespace linpoly
