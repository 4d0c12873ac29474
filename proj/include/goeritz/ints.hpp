#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace goeritz {

// Exact arbitrary-precision integer used throughout. Entries of star images
// grow exponentially in word length, so nothing here is fixed-width.
using Int = boost::multiprecision::cpp_int;

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void fail(const std::string& msg) { throw Error(msg); }

// gcd with gcd(0,0) = 0 and gcd(n,0) = |n|.
inline Int gcd_pair(Int a, Int b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

inline Int abs_val(const Int& a) { return a < 0 ? Int(-a) : a; }

// Sign convention used in the block form of S_p: epsilon = -1 iff p = 3.
inline int epsilon_for(long p) { return p == 3 ? -1 : 1; }

// True iff d divides n exactly (d = 0 divides only 0).
inline bool divides(const Int& d, const Int& n) {
  if (d == 0) return n == 0;
  return n % d == 0;
}

}  // namespace goeritz
