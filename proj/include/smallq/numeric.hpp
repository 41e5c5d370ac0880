#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace smallq {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }
inline Int lcm(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int numerator(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator(const Rat& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const Rat& r) { return denominator(r) == 1; }

// Floor division for exact integers (round toward -inf), needed by HNF reduction.
inline Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int mod_positive(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

// A rational taken mod 1, normalized into [0, 1).  Used as exponent of
// exp(2*pi*i*x), so equality mod 1 is equality of the root of unity.
inline Rat mod1(const Rat& x) {
  Int n = numerator(x), d = denominator(x);
  return Rat(mod_positive(n, d), d);
}

// Additive order of x in Q/Z: the least k > 0 with k*x integral.
inline Int order_mod1(const Rat& x) { return denominator(x); }

inline long to_long(const Int& v) {
  if (v > std::numeric_limits<long>::max() || v < std::numeric_limits<long>::min())
    throw std::overflow_error("Int does not fit in long: " + v.str());
  return static_cast<long>(v);
}

}  // namespace smallq
