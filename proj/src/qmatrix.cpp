#include "diracind/qmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace diracind {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch");
  QMatrix m(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const Rational& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.c_; ++j) m.at(i, j) += v * o.at(k, j);
    }
  return m;
}

QVector QMatrix::operator*(const QVector& v) const {
  if ((int)v.size() != c_) throw std::invalid_argument("matrix/vector shape mismatch");
  QVector out(r_, Rational(0));
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j)
      if (at(i, j) != 0) out[i] += at(i, j) * v[j];
  return out;
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
  QMatrix m = *this;
  for (int i = 0; i < r_ * c_; ++i) m.a_[i] += o.a_[i];
  return m;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
  QMatrix m = *this;
  for (int i = 0; i < r_ * c_; ++i) m.a_[i] -= o.a_[i];
  return m;
}

QMatrix QMatrix::transpose() const {
  QMatrix m(c_, r_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) m.at(j, i) = at(i, j);
  return m;
}

namespace {

// Row echelon reduction in place; returns (rank, pivot columns, det sign flips).
struct Echelon {
  int rank = 0;
  std::vector<int> pivots;
  int swaps = 0;
};

Echelon echelonize(QMatrix& m, bool reduced) {
  Echelon e;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int piv = -1;
    for (int i = row; i < m.rows(); ++i)
      if (m.at(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
      ++e.swaps;
    }
    Rational inv = 1 / m.at(row, col);
    if (reduced)
      for (int j = 0; j < m.cols(); ++j) m.at(row, j) *= inv;
    int start = reduced ? 0 : row + 1;
    for (int i = start; i < m.rows(); ++i) {
      if (i == row || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col) / m.at(row, col);
      for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(row, j);
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.rank = row;
  return e;
}

}  // namespace

Rational QMatrix::det() const {
  if (r_ != c_) throw std::invalid_argument("det of non-square matrix");
  QMatrix m = *this;
  Echelon e = echelonize(m, false);
  if (e.rank < r_) return Rational(0);
  Rational d = (e.swaps % 2) ? Rational(-1) : Rational(1);
  for (int i = 0; i < r_; ++i) d *= m.at(i, e.pivots[i]);
  return d;
}

int QMatrix::rank() const {
  QMatrix m = *this;
  return echelonize(m, false).rank;
}

std::optional<QMatrix> QMatrix::inverse() const {
  if (r_ != c_) return std::nullopt;
  QMatrix aug(r_, 2 * c_);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, c_ + i) = 1;
  }
  Echelon e = echelonize(aug, true);
  if (e.rank < r_) return std::nullopt;
  QMatrix inv(r_, c_);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < c_; ++j) inv.at(i, j) = aug.at(i, c_ + j);
  return inv;
}

std::optional<QVector> QMatrix::solve(const QVector& b) const {
  QMatrix aug(r_, c_ + 1);
  for (int i = 0; i < r_; ++i) {
    for (int j = 0; j < c_; ++j) aug.at(i, j) = at(i, j);
    aug.at(i, c_) = b[i];
  }
  Echelon e = echelonize(aug, true);
  QVector x(c_, Rational(0));
  int row = 0;
  for (int col : e.pivots) {
    if (col == c_) return std::nullopt;  // inconsistent
    x[col] = aug.at(row++, c_);
  }
  if (e.rank < (int)e.pivots.size()) return std::nullopt;
  if ((int)e.pivots.size() < c_) {
    // Underdetermined: only accept when the found solution is exact.
    QVector check = (*this) * x;
    if (check != b) return std::nullopt;
  }
  return x;
}

std::vector<QVector> QMatrix::nullspace() const {
  QMatrix m = *this;
  Echelon e = echelonize(m, true);
  std::vector<bool> is_pivot(c_, false);
  for (int p : e.pivots) is_pivot[p] = true;
  std::vector<QVector> basis;
  for (int j = 0; j < c_; ++j) {
    if (is_pivot[j]) continue;
    QVector v(c_, Rational(0));
    v[j] = 1;
    for (int r = 0; r < (int)e.pivots.size(); ++r) v[e.pivots[r]] = -m.at(r, j);
    basis.push_back(v);
  }
  return basis;
}

std::optional<std::pair<QMatrix, QVector>> QMatrix::ldlt() const {
  if (r_ != c_) return std::nullopt;
  QMatrix L = QMatrix::identity(r_);
  QVector D(r_, Rational(0));
  for (int j = 0; j < r_; ++j) {
    Rational d = at(j, j);
    for (int k = 0; k < j; ++k) d -= L.at(j, k) * L.at(j, k) * D[k];
    if (d <= 0) return std::nullopt;
    D[j] = d;
    for (int i = j + 1; i < r_; ++i) {
      Rational v = at(i, j);
      for (int k = 0; k < j; ++k) v -= L.at(i, k) * L.at(j, k) * D[k];
      L.at(i, j) = v / d;
    }
  }
  return std::make_pair(L, D);
}

bool QMatrix::is_integral() const {
  return std::all_of(a_.begin(), a_.end(), [](const Rational& q) { return is_integer(q); });
}

Rational dot(const QVector& a, const QVector& b) {
  Rational s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

QVector operator+(const QVector& a, const QVector& b) {
  QVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

QVector operator-(const QVector& a, const QVector& b) {
  QVector r = a;
  for (std::size_t i = 0; i < r.size(); ++i) r[i] -= b[i];
  return r;
}

QVector operator*(const Rational& c, const QVector& v) {
  QVector r = v;
  for (auto& x : r) x *= c;
  return r;
}

HermiteResult hermite_column_form(const std::vector<std::vector<Int>>& columns, int dim) {
  // Work matrix W = input columns, transform U = identity; column operations
  // applied to both, so W = M U throughout.
  int n = (int)columns.size();
  std::vector<std::vector<Int>> W = columns, U(n, std::vector<Int>(n, 0));
  for (int j = 0; j < n; ++j) U[j][j] = 1;

  auto colswap = [&](int a, int b) { std::swap(W[a], W[b]); std::swap(U[a], U[b]); };
  auto colsub = [&](int dst, int src, const Int& f) {
    for (int i = 0; i < dim; ++i) W[dst][i] -= f * W[src][i];
    for (int i = 0; i < n; ++i) U[dst][i] -= f * U[src][i];
  };
  auto colneg = [&](int a) {
    for (auto& x : W[a]) x = -x;
    for (auto& x : U[a]) x = -x;
  };

  int lead = 0;
  for (int row = 0; row < dim && lead < n; ++row) {
    // Euclidean elimination on this row across columns lead..n-1.
    while (true) {
      int piv = -1;
      for (int j = lead; j < n; ++j)
        if (W[j][row] != 0 && (piv < 0 || abs(W[j][row]) < abs(W[piv][row]))) piv = j;
      if (piv < 0) break;
      colswap(lead, piv);
      bool clean = true;
      for (int j = lead + 1; j < n; ++j) {
        if (W[j][row] == 0) continue;
        Int f = W[j][row] / W[lead][row];
        colsub(j, lead, f);
        if (W[j][row] != 0) clean = false;
      }
      if (clean) break;
    }
    if (W[lead][row] == 0) continue;
    if (W[lead][row] < 0) colneg(lead);
    // Reduce earlier columns against this pivot for a unique echelon form.
    for (int j = 0; j < lead; ++j) {
      Int f;
      mpz_fdiv_q(f.get_mpz_t(), W[j][row].get_mpz_t(), W[lead][row].get_mpz_t());
      if (f != 0) colsub(j, lead, f);
    }
    ++lead;
  }

  HermiteResult res;
  for (int j = 0; j < n; ++j) {
    bool zero = std::all_of(W[j].begin(), W[j].end(), [](const Int& x) { return x == 0; });
    if (zero)
      res.kernel.push_back(U[j]);
    else {
      res.basis.push_back(W[j]);
      res.preimages.push_back(U[j]);
    }
  }
  return res;
}

}  // namespace diracind
