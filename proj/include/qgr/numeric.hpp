#pragma once

#include <gmpxx.h>
#include <string>
#include <vector>

namespace qgr {

using Int = mpz_class;
using Rat = mpq_class;

inline Int int_lcm(const Int& a, const Int& b) {
  Int r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// C(z, l) for arbitrary integer z (falling factorial over l!).
inline Rat binomial_at(const Int& z, unsigned l) {
  Rat r = 1;
  for (unsigned t = 0; t < l; ++t) {
    r *= Rat(z - static_cast<long>(t));
    r /= Rat(static_cast<long>(t) + 1);
  }
  return r;
}

inline std::string to_string(const Int& z) { return z.get_str(); }
inline std::string to_string(const Rat& q) { return q.get_str(); }

inline Rat parse_rational(const std::string& s) {
  Rat q(s);
  q.canonicalize();
  return q;
}

// Parses "1,-5,3" into exact integers.
std::vector<Int> parse_int_csv(const std::string& csv);
std::vector<Rat> parse_rat_csv(const std::string& csv);

}  // namespace qgr
