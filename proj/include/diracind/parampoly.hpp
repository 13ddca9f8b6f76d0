#ifndef DIRACIND_PARAMPOLY_HPP
#define DIRACIND_PARAMPOLY_HPP

#include <map>
#include <string>
#include <vector>

#include "diracind/rational.hpp"

namespace diracind {

// A polynomial with rational coefficients in the Hecke parameter symbols
// (one symbol per W-orbit of roots; in practice at most two, "k" and "k'").
// Terms with zero coefficient are never stored, so equality is structural.
class ParamPolynomial {
 public:
  ParamPolynomial() = default;
  explicit ParamPolynomial(const Rational& c);
  static ParamPolynomial variable(const std::string& name);
  static ParamPolynomial monomial(const Rational& c, const std::vector<std::pair<std::string, int>>& pows);

  bool is_zero() const { return terms_.empty(); }
  int degree() const;
  const std::vector<std::string>& variables() const { return vars_; }
  const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

  ParamPolynomial operator-() const;
  ParamPolynomial operator+(const ParamPolynomial& o) const;
  ParamPolynomial operator-(const ParamPolynomial& o) const;
  ParamPolynomial operator*(const ParamPolynomial& o) const;
  ParamPolynomial& operator+=(const ParamPolynomial& o) { return *this = *this + o; }
  ParamPolynomial& operator-=(const ParamPolynomial& o) { return *this = *this - o; }
  ParamPolynomial& operator*=(const ParamPolynomial& o) { return *this = *this * o; }
  bool operator==(const ParamPolynomial& o) const;
  bool operator!=(const ParamPolynomial& o) const { return !(*this == o); }

  // Exact evaluation; every variable of the polynomial must be assigned.
  Rational eval(const std::map<std::string, Rational>& point) const;

  // Substitute each variable by a polynomial (used for k -> c*k scaling).
  ParamPolynomial substitute(const std::map<std::string, ParamPolynomial>& subst) const;

  std::string to_string() const;

 private:
  std::vector<std::string> vars_;              // sorted, deduplicated
  std::map<std::vector<int>, Rational> terms_; // exponent vector -> coefficient

  void prune();
  static std::pair<ParamPolynomial, ParamPolynomial> aligned(const ParamPolynomial& a,
                                                             const ParamPolynomial& b);
};

ParamPolynomial operator*(const Rational& c, const ParamPolynomial& p);

}  // namespace diracind

#endif
