#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>

namespace schurw {

using Int = boost::multiprecision::cpp_int;

// p-adic valuation of a nonzero integer.
inline int valuation(Int x, const Int& p) {
  if (x == 0) return -1;
  if (x < 0) x = -x;
  int e = 0;
  while (x % p == 0) { x /= p; ++e; }
  return e;
}

// x == p^e for some e >= 0?  On success stores e.
inline bool is_p_power(Int x, const Int& p, int& e) {
  if (x <= 0) return false;
  e = 0;
  while (x % p == 0) { x /= p; ++e; }
  return x == 1;
}

inline Int int_pow(const Int& b, int e) {
  Int r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace schurw
