#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>

namespace toroidal {

// 128-bit checked integers: arithmetic either stays exact or throws.
using Integer = boost::multiprecision::checked_int128_t;
using Rational = boost::rational<Integer>;

inline Rational rat(long long n, long long d = 1) { return Rational(Integer(n), Integer(d)); }

inline bool is_integer(const Rational& r) { return r.denominator() == 1; }

inline long long to_int64(const Integer& i) {
  if (i > Integer(INT64_MAX) || i < Integer(INT64_MIN)) {
    throw std::overflow_error("integer does not fit in 64 bits");
  }
  return i.convert_to<long long>();
}

inline long long numerator64(const Rational& r) { return to_int64(r.numerator()); }
inline long long denominator64(const Rational& r) { return to_int64(r.denominator()); }

inline std::string to_string(const Rational& r) {
  std::string s = r.numerator().str();
  if (r.denominator() != 1) s += "/" + r.denominator().str();
  return s;
}

inline Rational rpow(const Rational& base, int e) {
  Rational out(1);
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

inline Integer factorial(int n) {
  Integer f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

inline Integer binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Integer b = 1;
  for (int i = 1; i <= k; ++i) b = b * (n - k + i) / i;
  return b;
}

}  // namespace toroidal

// Under C++20 rewritten comparisons, boost::rational's mixed integer == recurses
// into itself; these non-template overloads take precedence.
namespace boost {
inline bool operator==(const toroidal::Rational& a, long long b) {
  return a.denominator() == 1 && a.numerator() == b;
}
inline bool operator==(const toroidal::Rational& a, int b) { return a == static_cast<long long>(b); }
inline bool operator==(long long b, const toroidal::Rational& a) { return a == b; }
inline bool operator==(int b, const toroidal::Rational& a) { return a == static_cast<long long>(b); }
inline bool operator!=(const toroidal::Rational& a, long long b) { return !(a == b); }
inline bool operator!=(const toroidal::Rational& a, int b) { return !(a == b); }
inline bool operator!=(long long b, const toroidal::Rational& a) { return !(a == b); }
inline bool operator!=(int b, const toroidal::Rational& a) { return !(a == b); }
}  // namespace boost
