#pragma once
// Exact rational arithmetic layer. All library math runs on mpq_class;
// no floating point anywhere.

#include <gmpxx.h>
#include <string>
#include <vector>

namespace lcs {

using Q = mpq_class;
using Z = mpz_class;

// Parses "p", "-p", "p/q" (whitespace-free). Throws std::invalid_argument on
// malformed input or zero denominator. Result is canonicalized.
Q parse_rat(const std::string& s);

// Canonical form: "p" when the denominator is 1, else "p/q" with q > 0.
std::string rat_str(const Q& q);

Z floor_q(const Q& q);
Z ceil_q(const Q& q);
bool is_integer(const Q& q);

// lcm(1..n) as an exact integer (n >= 1).
Z lcm_upto(unsigned long n);

// Canonicalized fraction. The raw two-argument mpq_class constructor keeps
// num/den as given, and GMP comparisons assume canonical form — always build
// fractions through here.
inline Q qq(long num, long den) {
  Q r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace lcs
