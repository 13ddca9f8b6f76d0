#ifndef DIRACIND_ROOTSYSTEM_HPP
#define DIRACIND_ROOTSYSTEM_HPP

#include <map>
#include <string>
#include <vector>

#include "diracind/parampoly.hpp"
#include "diracind/qmatrix.hpp"

namespace diracind {

// Cartan type, e.g. "F4", "B3", "A2xA1".
struct CartanType {
  std::vector<std::pair<char, int>> factors;

  static CartanType parse(const std::string& s);
  std::string to_string() const;
  int rank() const;
};

// A semisimple root system with a fixed W-invariant inner product.  All
// coordinates are taken in the basis of simple roots, so roots have integer
// coordinates and the simple reflections act by integer matrices.
//
// Normalization: long roots have squared length 2 (hence short roots have
// squared length 1 in types B/C/F4 and 2/3 in type G2).  Simple roots are
// numbered per family in the standard Bourbaki order.
struct RootSystem {
  CartanType type;
  int rank = 0;
  QMatrix cartan;         // a_ij = (alpha_i, alpha_j^vee)
  QMatrix gram;           // <alpha_i, alpha_j>
  QMatrix gram_inv;
  std::vector<QVector> roots;       // all roots, simple-root coordinates
  std::vector<int> positive;        // indices into roots
  std::vector<int> negative_of;     // index of -alpha
  std::map<std::vector<long>, int> root_index;

  // Parameter data: W-orbits of roots and one symbol per orbit; orbits are
  // ordered long before short (so "k" is the long-root parameter).
  std::vector<int> orbit_of_root;   // per root
  std::vector<std::string> symbols; // per orbit

  int simple(int i) const { return simple_idx[i]; }
  std::vector<int> simple_idx;

  Rational inner(const QVector& a, const QVector& b) const;   // <a, b>
  Rational norm2(const QVector& a) const { return inner(a, a); }
  QVector coroot(int root) const;                     // 2a/<a,a>
  Rational pair_with_coroot(const QVector& v, int root) const;  // (v, alpha^vee)
  QMatrix reflection(int root) const;                 // s_alpha on V
  QVector reflect(int root, const QVector& v) const;
  QVector coweight(int i) const;                      // omega_i
  // v = sum c_i omega_i; exact coordinates over the fundamental coweights.
  QVector coweight_coordinates(const QVector& v) const;
  ParamPolynomial symbol_poly(int root) const;        // k_alpha as a polynomial
  bool is_simple_root(int root) const;
  int root_of(const QVector& v) const;                // index or -1

  static long expected_root_count(const CartanType& t);
  static std::vector<int> degrees(const CartanType& t);  // degrees of W
};

RootSystem build_root_system(const CartanType& t);
inline RootSystem build_root_system(const std::string& s) {
  return build_root_system(CartanType::parse(s));
}

}  // namespace diracind

#endif
