#ifndef DIRACIND_CYCLOTOMIC_HPP
#define DIRACIND_CYCLOTOMIC_HPP

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "diracind/rational.hpp"

namespace diracind {

// An exact element of a cyclotomic field Q(zeta_n), stored on the canonical
// basis described in cyclotomic.cpp.  Two equal values always have identical
// (conductor, coefficient-map) representations, so operator== is structural
// and cheap.  The conductor is minimal for the stored value; rationals have
// conductor 1.  Values are immutable after construction.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1) {}
  Cyclotomic(const Rational& q);
  Cyclotomic(long value) : Cyclotomic(Rational(value)) {}

  // E(n)^k, a primitive n-th root of unity to the k-th power.
  static Cyclotomic root_of_unity(long n, long k = 1);

  // The nonnegative real square root of q >= 0, as an exact cyclotomic.
  static Cyclotomic sqrt_rational(const Rational& q);

  long conductor() const { return n_; }
  bool is_zero() const { return coeff_.empty(); }
  bool is_rational() const { return n_ == 1; }
  Rational rational_part() const;            // coefficient of E(n)^0
  Rational as_rational() const;               // throws unless conductor 1

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
  bool operator==(const Cyclotomic& o) const {
    return n_ == o.n_ && coeff_ == o.coeff_;
  }
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Complex conjugation, i.e. the Galois automorphism zeta -> zeta^-1.
  Cyclotomic conj() const;
  // The Galois automorphism zeta_n -> zeta_n^t, gcd(t, n) = 1.
  Cyclotomic galois(long t) const;
  bool is_real() const { return conj() == *this; }

  // Double-precision embedding E(n)^k -> exp(2*pi*i*k/n).  Debug/sign checks
  // only; never used for mathematical decisions.
  std::complex<double> approx() const;

  // "c0 + c1*E(n)^k1 + ..." with rationals rendered as "p/q".
  std::string to_string() const;
  static Cyclotomic from_string(const std::string& s);

  const std::map<long, Rational>& coefficients() const { return coeff_; }

  std::size_t hash() const;

 private:
  long n_;                          // conductor
  std::map<long, Rational> coeff_;  // canonical-basis exponent -> coefficient

  void canonicalize();
  friend Cyclotomic make_cyclotomic_unchecked(long, std::map<long, Rational>);
};

inline Cyclotomic E(long n, long k = 1) { return Cyclotomic::root_of_unity(n, k); }

Cyclotomic operator*(const Rational& q, const Cyclotomic& c);

}  // namespace diracind

#endif
