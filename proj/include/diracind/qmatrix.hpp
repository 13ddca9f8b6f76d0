#ifndef DIRACIND_QMATRIX_HPP
#define DIRACIND_QMATRIX_HPP

#include <optional>
#include <vector>

#include "diracind/rational.hpp"

namespace diracind {

using QVector = std::vector<Rational>;

// Dense matrix over Q.  Sizes in this project stay below ~100x100, so plain
// Gaussian elimination on mpq is fine everywhere.
class QMatrix {
 public:
  QMatrix() : r_(0), c_(0) {}
  QMatrix(int rows, int cols) : r_(rows), c_(cols), a_(rows * cols, Rational(0)) {}
  static QMatrix identity(int n);

  int rows() const { return r_; }
  int cols() const { return c_; }
  Rational& at(int i, int j) { return a_[i * c_ + j]; }
  const Rational& at(int i, int j) const { return a_[i * c_ + j]; }

  QMatrix operator*(const QMatrix& o) const;
  QVector operator*(const QVector& v) const;
  QMatrix operator+(const QMatrix& o) const;
  QMatrix operator-(const QMatrix& o) const;
  bool operator==(const QMatrix& o) const { return r_ == o.r_ && c_ == o.c_ && a_ == o.a_; }
  QMatrix transpose() const;

  Rational det() const;
  int rank() const;
  std::optional<QMatrix> inverse() const;
  // Solve A x = b; empty optional when inconsistent or underdetermined.
  std::optional<QVector> solve(const QVector& b) const;
  std::vector<QVector> nullspace() const;

  // Exact LDL^T of a symmetric positive-definite matrix: returns (L, D) with
  // L unit lower triangular and D the positive diagonal; nullopt when the
  // matrix is not positive definite.
  std::optional<std::pair<QMatrix, QVector>> ldlt() const;
  bool is_positive_definite() const { return ldlt().has_value(); }

  bool is_integral() const;

 private:
  int r_, c_;
  std::vector<Rational> a_;
};

Rational dot(const QVector& a, const QVector& b);
QVector operator+(const QVector& a, const QVector& b);
QVector operator-(const QVector& a, const QVector& b);
QVector operator*(const Rational& c, const QVector& v);

// Column-style Hermite normal form of an integer matrix M: finds unimodular
// U with M U = [H | 0], H in column echelon form.  Returns (H columns,
// U columns for H, U columns spanning ker_Z M).
struct HermiteResult {
  std::vector<std::vector<Int>> basis;      // columns of H (lattice basis of M Z^n)
  std::vector<std::vector<Int>> preimages;  // U columns with M u = basis column
  std::vector<std::vector<Int>> kernel;     // integral basis of ker M
};
HermiteResult hermite_column_form(const std::vector<std::vector<Int>>& columns, int dim);

}  // namespace diracind

#endif
