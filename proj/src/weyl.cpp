#include "diracind/weyl.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

namespace diracind {

ConjClasses conjugacy_classes(long n, const std::vector<int>& generators,
                              const std::function<int(int, int)>& mult,
                              const std::function<int(int)>& inv, int identity) {
  ConjClasses cc;
  cc.class_of.assign(n, -1);
  for (long seed = 0; seed < n; ++seed) {
    if (cc.class_of[seed] >= 0) continue;
    int id = (int)cc.members.size();
    std::vector<int> orbit = {(int)seed};
    cc.class_of[seed] = id;
    std::deque<int> q = {(int)seed};
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int g : generators) {
        int y = mult(mult(g, x), inv(g));
        if (cc.class_of[y] < 0) {
          cc.class_of[y] = id;
          orbit.push_back(y);
          q.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    cc.members.push_back(orbit);
  }
  long r = (long)cc.members.size();
  cc.reps.resize(r);
  cc.sizes.resize(r);
  cc.rep_order.resize(r);
  cc.inverse_class.resize(r);
  for (long c = 0; c < r; ++c) {
    cc.reps[c] = cc.members[c].front();
    cc.sizes[c] = (long)cc.members[c].size();
    int x = cc.reps[c], ord = 1;
    while (x != identity) {
      x = mult(x, cc.reps[c]);
      ++ord;
    }
    cc.rep_order[c] = ord;
    cc.inverse_class[c] = cc.class_of[inv(cc.reps[c])];
  }
  return cc;
}

std::size_t WeylGroup::key_hash(const std::vector<long>& key) const {
  std::size_t h = 1469598103934665603ULL;
  for (long v : key) {
    h ^= (std::size_t)(v + 8);
    h *= 1099511628211ULL;
  }
  return h;
}

int WeylGroup::lookup(const std::vector<long>& key) const {
  auto it = index_.find(key_hash(key));
  if (it == index_.end()) return -1;
  for (int id : it->second)
    if (mats_[id] == key) return id;
  return -1;
}

std::vector<long> WeylGroup::mat_mult(const std::vector<long>& a, const std::vector<long>& b) const {
  std::vector<long> c(n_ * n_, 0);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      long v = a[i * n_ + k];
      if (!v) continue;
      for (int j = 0; j < n_; ++j) c[i * n_ + j] += v * b[k * n_ + j];
    }
  return c;
}

WeylGroup::WeylGroup(const RootSystem& rs, long bound) : rs_(&rs), n_(rs.rank) {
  long expected = 1;
  for (int d : RootSystem::degrees(rs.type)) expected *= d;
  if (expected > bound)
    throw std::domain_error("Weyl group order " + std::to_string(expected) +
                            " exceeds enumeration bound " + std::to_string(bound));

  // Generator matrices: s_j(e_i) = e_i - a_ij e_j.
  std::vector<std::vector<long>> gens;
  for (int j = 0; j < n_; ++j) {
    std::vector<long> m(n_ * n_, 0);
    for (int i = 0; i < n_; ++i) {
      m[i * n_ + i] = 1;
      m[j * n_ + i] -= to_long(rs.cartan.at(i, j));
    }
    gens.push_back(m);
  }

  std::vector<long> id(n_ * n_, 0);
  for (int i = 0; i < n_; ++i) id[i * n_ + i] = 1;
  mats_.push_back(id);
  index_[key_hash(id)].push_back(0);
  len_.push_back(0);
  std::deque<int> frontier = {0};
  // BFS by right multiplication; discovery order is by length.
  right_.assign(n_, -1);
  while (!frontier.empty()) {
    int w = frontier.front();
    frontier.pop_front();
    for (int j = 0; j < n_; ++j) {
      auto key = mat_mult(mats_[w], gens[j]);
      int idx = lookup(key);
      if (idx < 0) {
        idx = (int)mats_.size();
        mats_.push_back(key);
        index_[key_hash(key)].push_back(idx);
        len_.push_back(len_[w] + 1);
        right_.resize((std::size_t)(idx + 1) * n_, -1);
        frontier.push_back(idx);
      }
      right_[(std::size_t)w * n_ + j] = idx;
    }
  }
  if ((long)mats_.size() != expected)
    throw std::logic_error("Weyl enumeration produced " + std::to_string(mats_.size()) +
                           " elements, expected " + std::to_string(expected));

  left_.assign(mats_.size() * n_, -1);
  for (std::size_t w = 0; w < mats_.size(); ++w)
    for (int j = 0; j < n_; ++j) left_[w * n_ + j] = lookup(mat_mult(gens[j], mats_[w]));

  // w^{-1} = gram^{-1} w^T gram (w is orthogonal for the invariant form).
  inv_.assign(mats_.size(), -1);
  for (std::size_t w = 0; w < mats_.size(); ++w) {
    QMatrix m(n_, n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) m.at(i, j) = Rational(mats_[w][i * n_ + j]);
    QMatrix wi = rs_->gram_inv * m.transpose() * rs_->gram;
    std::vector<long> key(n_ * n_);
    for (int i = 0; i < n_; ++i)
      for (int j = 0; j < n_; ++j) key[i * n_ + j] = to_long(wi.at(i, j));
    inv_[w] = lookup(key);
    if (inv_[w] < 0) throw std::logic_error("inverse not found in enumeration");
  }
}

int WeylGroup::mult(int a, int b) const {
  int r = lookup(mat_mult(mats_[a], mats_[b]));
  if (r < 0) throw std::logic_error("product not found in enumeration");
  return r;
}

int WeylGroup::order_of(int a) const {
  int x = a, ord = 1;
  while (x != 0) {
    x = mult(x, a);
    ++ord;
  }
  return ord;
}

QMatrix WeylGroup::matrix(int a) const {
  QMatrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m.at(i, j) = Rational(mats_[a][i * n_ + j]);
  return m;
}

QVector WeylGroup::apply(int a, const QVector& v) const {
  QVector out(n_, Rational(0));
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (mats_[a][i * n_ + j] && v[j] != 0) out[i] += Rational(mats_[a][i * n_ + j]) * v[j];
  return out;
}

int WeylGroup::apply_to_root(int a, int root) const {
  int r = rs_->root_of(apply(a, rs_->roots[root]));
  if (r < 0) throw std::logic_error("Weyl element does not permute roots");
  return r;
}

int WeylGroup::element_of_matrix_key(const std::vector<long>& key) const { return lookup(key); }

int WeylGroup::reflection_element(int root) const {
  QMatrix m = rs_->reflection(root);
  std::vector<long> key(n_ * n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) key[i * n_ + j] = to_long(m.at(i, j));
  int r = lookup(key);
  if (r < 0) throw std::logic_error("reflection not found");
  return r;
}

Rational WeylGroup::det_one_minus(int a) const {
  QMatrix m(n_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m.at(i, j) = Rational((i == j ? 1 : 0) - mats_[a][i * n_ + j]);
  return m.det();
}

const ConjClasses& WeylGroup::classes() const {
  if (classes_done_) return classes_;
  std::vector<int> gens;
  for (int j = 0; j < n_; ++j) gens.push_back(right_[j]);  // e * s_j
  classes_ = conjugacy_classes(
      size(), gens, [this](int a, int b) { return mult(a, b); },
      [this](int a) { return inv_[a]; }, 0);
  classes_done_ = true;
  return classes_;
}

std::vector<bool> WeylGroup::elliptic_flags() const {
  const auto& cc = classes();
  std::vector<bool> f(cc.reps.size());
  for (std::size_t c = 0; c < cc.reps.size(); ++c) f[c] = is_elliptic(cc.reps[c]);
  return f;
}

long WeylGroup::count_elliptic_classes() const {
  auto f = elliptic_flags();
  return std::count(f.begin(), f.end(), true);
}

std::vector<int> WeylGroup::canonical_word(int a) const {
  std::vector<int> word;
  int w = a;
  while (w != 0) {
    for (int j = 0; j < n_; ++j) {
      int sw = left_[(std::size_t)w * n_ + j];
      if (len_[sw] < len_[w]) {
        word.push_back(j);
        w = sw;
        break;
      }
    }
  }
  return word;
}

WeylGroup::Subgroup WeylGroup::subgroup(const std::vector<int>& generator_ids) const {
  Subgroup sub;
  std::vector<int> frontier = {0};
  sub.index_of[0] = 0;
  std::vector<int> elems = {0};
  while (!frontier.empty()) {
    int x = frontier.back();
    frontier.pop_back();
    for (int g : generator_ids) {
      int y = mult(x, g);
      if (!sub.index_of.count(y)) {
        sub.index_of[y] = 1;
        elems.push_back(y);
        frontier.push_back(y);
      }
    }
  }
  std::sort(elems.begin(), elems.end());
  sub.elements = elems;
  for (std::size_t i = 0; i < elems.size(); ++i) sub.index_of[elems[i]] = (int)i;

  std::vector<int> sub_gens;
  for (int g : generator_ids) sub_gens.push_back(sub.index_of.at(g));
  auto smult = [&](int a, int b) { return sub.index_of.at(mult(sub.elements[a], sub.elements[b])); };
  auto sinv = [&](int a) { return sub.index_of.at(inv_[sub.elements[a]]); };
  sub.classes = conjugacy_classes((long)elems.size(), sub_gens, smult, sinv, 0);
  sub.fusion.resize(sub.classes.reps.size());
  for (std::size_t c = 0; c < sub.classes.reps.size(); ++c)
    sub.fusion[c] = classes().class_of[sub.elements[sub.classes.reps[c]]];
  return sub;
}

WeylGroup::Subgroup WeylGroup::parabolic(const std::vector<int>& simple_subset) const {
  std::vector<int> gens;
  for (int j : simple_subset) gens.push_back(right_[j]);
  if (gens.empty()) return subgroup({0});
  return subgroup(gens);
}

WeylGroup::Subgroup WeylGroup::rotation_subgroup() const {
  std::vector<int> gens;
  for (int j = 1; j < n_; ++j) gens.push_back(mult(right_[0], right_[j]));  // s_1 s_j
  if (gens.empty()) return subgroup({0});
  return subgroup(gens);
}

}  // namespace diracind
