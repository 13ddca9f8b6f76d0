#include "diracind/rootsystem.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace diracind {

CartanType CartanType::parse(const std::string& s) {
  CartanType t;
  std::size_t i = 0;
  while (i < s.size()) {
    char fam = (char)std::toupper(s[i]);
    if (std::string("ABCDEFG").find(fam) == std::string::npos)
      throw std::invalid_argument("bad Cartan type: " + s);
    ++i;
    std::size_t j = i;
    while (j < s.size() && std::isdigit(s[j])) ++j;
    if (j == i) throw std::invalid_argument("bad Cartan type: " + s);
    int rank = std::stoi(s.substr(i, j - i));
    t.factors.push_back({fam, rank});
    i = j;
    if (i < s.size()) {
      if (s[i] != 'x' && s[i] != 'X') throw std::invalid_argument("bad Cartan type: " + s);
      ++i;
    }
  }
  if (t.factors.empty()) throw std::invalid_argument("empty Cartan type");
  for (auto [f, n] : t.factors) {
    bool ok = (f == 'A' && n >= 1) || ((f == 'B' || f == 'C') && n >= 2) ||
              (f == 'D' && n >= 3) || (f == 'E' && n >= 6 && n <= 8) ||
              (f == 'F' && n == 4) || (f == 'G' && n == 2);
    if (!ok)
      throw std::invalid_argument("rank out of range for family " + std::string(1, f) + ": " +
                                  std::to_string(n));
  }
  return t;
}

std::string CartanType::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (i) s += "x";
    s += factors[i].first + std::to_string(factors[i].second);
  }
  return s;
}

int CartanType::rank() const {
  int r = 0;
  for (auto [f, n] : factors) r += n;
  return r;
}

namespace {

// Cartan matrix and squared-length halves d_i = <a_i,a_i>/2 for one factor,
// in the Bourbaki numbering; long roots normalized to squared length 2.
void factor_cartan(char fam, int n, std::vector<std::vector<int>>& A, std::vector<Rational>& d) {
  A.assign(n, std::vector<int>(n, 0));
  d.assign(n, Rational(1));
  for (int i = 0; i < n; ++i) A[i][i] = 2;
  auto chain = [&](int i, int j) { A[i][j] = A[j][i] = -1; };
  switch (fam) {
    case 'A':
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      break;
    case 'B':  // alpha_n short
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      A[n - 2][n - 1] = -2;
      A[n - 1][n - 2] = -1;
      d[n - 1] = Rational(1, 2);
      break;
    case 'C':  // alpha_n long
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      A[n - 2][n - 1] = -1;
      A[n - 1][n - 2] = -2;
      for (int i = 0; i + 1 < n; ++i) d[i] = Rational(1, 2);
      break;
    case 'D':
      for (int i = 0; i + 2 < n; ++i) chain(i, i + 1);
      chain(n - 3, n - 1);
      break;
    case 'E':
      // Bourbaki: alpha_2 attaches to alpha_4 in the chain 1-3-4-5-6(-7)(-8).
      chain(0, 2);
      for (int i = 2; i + 1 < n; ++i) chain(i, i + 1);
      chain(1, 3);
      break;
    case 'F':  // alpha_1, alpha_2 long; alpha_3, alpha_4 short
      chain(0, 1);
      A[1][2] = -2;
      A[2][1] = -1;
      chain(2, 3);
      d[2] = d[3] = Rational(1, 2);
      break;
    case 'G':  // alpha_1 short, alpha_2 long
      A[0][1] = -1;
      A[1][0] = -3;
      d[0] = Rational(1, 3);
      break;
  }
}

}  // namespace

long RootSystem::expected_root_count(const CartanType& t) {
  long total = 0;
  for (auto [f, n] : t.factors) {
    switch (f) {
      case 'A': total += (long)n * (n + 1); break;
      case 'B':
      case 'C': total += 2L * n * n; break;
      case 'D': total += 2L * n * (n - 1); break;
      case 'G': total += 12; break;
      case 'F': total += 48; break;
      case 'E': total += (n == 6) ? 72 : (n == 7) ? 126 : 240; break;
    }
  }
  return total;
}

std::vector<int> RootSystem::degrees(const CartanType& t) {
  std::vector<int> deg;
  for (auto [f, n] : t.factors) {
    std::vector<int> d;
    switch (f) {
      case 'A':
        for (int i = 2; i <= n + 1; ++i) d.push_back(i);
        break;
      case 'B':
      case 'C':
        for (int i = 1; i <= n; ++i) d.push_back(2 * i);
        break;
      case 'D':
        for (int i = 1; i < n; ++i) d.push_back(2 * i);
        d.push_back(n);
        break;
      case 'G': d = {2, 6}; break;
      case 'F': d = {2, 6, 8, 12}; break;
      case 'E':
        d = (n == 6)   ? std::vector<int>{2, 5, 6, 8, 9, 12}
            : (n == 7) ? std::vector<int>{2, 6, 8, 10, 12, 14, 18}
                       : std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30};
        break;
    }
    deg.insert(deg.end(), d.begin(), d.end());
  }
  return deg;
}

Rational RootSystem::inner(const QVector& a, const QVector& b) const {
  Rational s(0);
  for (int i = 0; i < rank; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < rank; ++j)
      if (b[j] != 0) s += a[i] * gram.at(i, j) * b[j];
  }
  return s;
}

QVector RootSystem::coroot(int root) const {
  return (Rational(2) / norm2(roots[root])) * roots[root];
}

Rational RootSystem::pair_with_coroot(const QVector& v, int root) const {
  return 2 * inner(v, roots[root]) / norm2(roots[root]);
}

QMatrix RootSystem::reflection(int root) const {
  QMatrix m = QMatrix::identity(rank);
  const QVector& a = roots[root];
  for (int j = 0; j < rank; ++j) {
    QVector e(rank, Rational(0));
    e[j] = 1;
    Rational c = pair_with_coroot(e, root);
    for (int i = 0; i < rank; ++i) m.at(i, j) -= c * a[i];
  }
  return m;
}

QVector RootSystem::reflect(int root, const QVector& v) const {
  Rational c = pair_with_coroot(v, root);
  QVector out = v;
  for (int i = 0; i < rank; ++i) out[i] -= c * roots[root][i];
  return out;
}

QVector RootSystem::coweight(int i) const {
  QVector w(rank, Rational(0));
  for (int j = 0; j < rank; ++j) w[j] = gram_inv.at(j, i);
  return w;
}

QVector RootSystem::coweight_coordinates(const QVector& v) const {
  QVector c(rank, Rational(0));
  for (int i = 0; i < rank; ++i) {
    QVector e(rank, Rational(0));
    e[i] = 1;
    c[i] = inner(e, v);
  }
  return c;
}

ParamPolynomial RootSystem::symbol_poly(int root) const {
  return ParamPolynomial::variable(symbols[orbit_of_root[root]]);
}

bool RootSystem::is_simple_root(int root) const {
  return std::find(simple_idx.begin(), simple_idx.end(), root) != simple_idx.end();
}

int RootSystem::root_of(const QVector& v) const {
  std::vector<long> key(rank);
  for (int i = 0; i < rank; ++i) {
    if (!is_integer(v[i])) return -1;
    if (!v[i].get_num().fits_slong_p()) return -1;
    key[i] = v[i].get_num().get_si();
  }
  auto it = root_index.find(key);
  return it == root_index.end() ? -1 : it->second;
}

RootSystem build_root_system(const CartanType& t) {
  RootSystem rs;
  rs.type = t;
  rs.rank = t.rank();
  int n = rs.rank;
  rs.cartan = QMatrix(n, n);
  std::vector<Rational> d(n);
  int off = 0;
  for (auto [fam, fn] : t.factors) {
    std::vector<std::vector<int>> A;
    std::vector<Rational> fd;
    factor_cartan(fam, fn, A, fd);
    for (int i = 0; i < fn; ++i) {
      d[off + i] = fd[i];
      for (int j = 0; j < fn; ++j) rs.cartan.at(off + i, off + j) = A[i][j];
    }
    off += fn;
  }
  // <a_i, a_j> = a_ji * d_i (symmetrized Cartan matrix).
  rs.gram = QMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.gram.at(i, j) = rs.cartan.at(j, i) * d[i];
  auto inv = rs.gram.inverse();
  if (!inv) throw std::logic_error("gram matrix is singular");
  rs.gram_inv = *inv;

  // Close the simple roots under simple reflections.  In simple-root
  // coordinates, s_j(v) = v - (sum_i v_i a_ij) e_j with integer entries.
  std::set<std::vector<long>> seen;
  std::vector<std::vector<long>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<long> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    auto v = queue.back();
    queue.pop_back();
    for (int j = 0; j < n; ++j) {
      long c = 0;
      for (int i = 0; i < n; ++i)
        if (v[i]) c += v[i] * to_long(rs.cartan.at(i, j));
      auto w = v;
      w[j] -= c;
      if (seen.insert(w).second) queue.push_back(w);
    }
  }
  if ((long)seen.size() != RootSystem::expected_root_count(t))
    throw std::logic_error("root closure has wrong cardinality for " + t.to_string());

  // Deterministic ordering: positive roots (last nonzero coordinate sign
  // convention does not apply here; a root is positive iff its coordinates
  // are all >= 0) sorted by height then lexicographically, then negatives.
  std::vector<std::vector<long>> pos, neg;
  for (const auto& v : seen) {
    bool p = std::all_of(v.begin(), v.end(), [](long x) { return x >= 0; });
    (p ? pos : neg).push_back(v);
  }
  auto by_height = [](const std::vector<long>& a, const std::vector<long>& b) {
    long ha = 0, hb = 0;
    for (long x : a) ha += x;
    for (long x : b) hb += x;
    return ha != hb ? ha < hb : a < b;
  };
  std::sort(pos.begin(), pos.end(), by_height);
  for (const auto& v : pos) {
    QVector q(n);
    for (int i = 0; i < n; ++i) q[i] = Rational(v[i]);
    rs.root_index[v] = (int)rs.roots.size();
    rs.positive.push_back((int)rs.roots.size());
    rs.roots.push_back(q);
  }
  for (const auto& v : pos) {
    auto m = v;
    for (auto& x : m) x = -x;
    QVector q(n);
    for (int i = 0; i < n; ++i) q[i] = Rational(m[i]);
    rs.root_index[m] = (int)rs.roots.size();
    rs.roots.push_back(q);
  }
  int R = (int)rs.roots.size();
  rs.negative_of.assign(R, -1);
  for (int i = 0; i < R; ++i) {
    std::vector<long> m(n);
    for (int j = 0; j < n; ++j) m[j] = -to_long(rs.roots[i][j]);
    rs.negative_of[i] = rs.root_index.at(m);
  }
  rs.simple_idx.resize(n);
  for (int i = 0; i < n; ++i) {
    std::vector<long> e(n, 0);
    e[i] = 1;
    rs.simple_idx[i] = rs.root_index.at(e);
  }

  // W-orbits of roots by closure under simple reflections.
  rs.orbit_of_root.assign(R, -1);
  std::vector<std::pair<Rational, int>> orbit_order;  // (-length^2, first simple) per orbit
  for (int s = 0; s < n; ++s) {
    int r0 = rs.simple_idx[s];
    if (rs.orbit_of_root[r0] >= 0) continue;
    int id = (int)orbit_order.size();
    orbit_order.push_back({rs.norm2(rs.roots[r0]), s});
    std::vector<int> q = {r0};
    rs.orbit_of_root[r0] = id;
    while (!q.empty()) {
      int r = q.back();
      q.pop_back();
      for (int j = 0; j < n; ++j) {
        int r2 = rs.root_of(rs.reflect(rs.simple_idx[j], rs.roots[r]));
        if (rs.orbit_of_root[r2] < 0) {
          rs.orbit_of_root[r2] = id;
          q.push_back(r2);
        }
      }
    }
  }
  for (int r = 0; r < R; ++r)
    if (rs.orbit_of_root[r] < 0) throw std::logic_error("root not reached by orbit closure");
  // Order orbits long-first (then by first simple root), name them k, k', ...
  std::vector<int> perm(orbit_order.size());
  for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = (int)i;
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (orbit_order[a].first != orbit_order[b].first)
      return orbit_order[a].first > orbit_order[b].first;
    return orbit_order[a].second < orbit_order[b].second;
  });
  std::vector<int> rank_of(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) rank_of[perm[i]] = (int)i;
  for (int r = 0; r < R; ++r) rs.orbit_of_root[r] = rank_of[rs.orbit_of_root[r]];
  rs.symbols.resize(perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) rs.symbols[i] = "k" + std::string(i, '\'');

  return rs;
}

}  // namespace diracind
