#ifndef DIRACIND_RATIONAL_HPP
#define DIRACIND_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace diracind {

// Exact scalar layer.  mpq_class keeps values canonical (lowest terms,
// positive denominator), which is exactly the invariant we need.
using Int = mpz_class;
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

inline long to_long(const Rational& q) {
  if (!is_integer(q) || !q.get_num().fits_slong_p())
    throw std::domain_error("rational is not a machine integer: " + q.get_str());
  return q.get_num().get_si();
}

// "p/q", or "p" when q = 1.
inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

inline Rational rat_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
  q.canonicalize();
  return q;
}

inline double rat_to_double(const Rational& q) { return q.get_d(); }

// floor(sqrt(n)) for n >= 0.
inline Int isqrt(const Int& n) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

inline std::size_t hash_combine(std::size_t h, std::size_t k) {
  return h ^ (k + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

}  // namespace diracind

#endif
