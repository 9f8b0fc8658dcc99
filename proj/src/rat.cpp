#include "lcs/rat.hpp"

#include <stdexcept>

namespace lcs {

Q parse_rat(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  // mpq_class accepts "p/q" directly but is lenient about whitespace and
  // bases; validate the character set ourselves first.
  bool seen_digit = false;
  int slashes = 0;
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == '-') {
      if (i != 0 && s[i - 1] != '/') throw std::invalid_argument("bad rational: " + s);
    } else if (c == '/') {
      if (++slashes > 1 || !seen_digit || i + 1 == s.size())
        throw std::invalid_argument("bad rational: " + s);
    } else if (c >= '0' && c <= '9') {
      seen_digit = true;
    } else {
      throw std::invalid_argument("bad rational: " + s);
    }
  }
  if (!seen_digit) throw std::invalid_argument("bad rational: " + s);
  Q q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_str(const Q& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Z floor_q(const Q& q) {
  Z r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

Z ceil_q(const Q& q) {
  Z r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return r;
}

bool is_integer(const Q& q) { return q.get_den() == 1; }

Z lcm_upto(unsigned long n) {
  Z l = 1;
  for (unsigned long k = 2; k <= n; ++k) {
    Z kk = static_cast<long>(k);
    Z g;
    mpz_gcd(g.get_mpz_t(), l.get_mpz_t(), kk.get_mpz_t());
    l = l / g * kk;
  }
  return l;
}

}  // namespace lcs
