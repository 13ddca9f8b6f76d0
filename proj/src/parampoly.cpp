#include "diracind/parampoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace diracind {

ParamPolynomial::ParamPolynomial(const Rational& c) {
  if (c != 0) terms_[{}] = c;
}

ParamPolynomial ParamPolynomial::variable(const std::string& name) {
  ParamPolynomial p;
  p.vars_ = {name};
  p.terms_[{1}] = Rational(1);
  return p;
}

ParamPolynomial ParamPolynomial::monomial(const Rational& c,
                                          const std::vector<std::pair<std::string, int>>& pows) {
  ParamPolynomial p(c);
  for (const auto& [v, e] : pows)
    for (int i = 0; i < e; ++i) p *= variable(v);
  return p;
}

void ParamPolynomial::prune() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = (it->second == 0) ? terms_.erase(it) : std::next(it);
  // Drop variables that no longer occur so that representation is canonical.
  std::vector<int> used(vars_.size(), 0);
  for (const auto& [ex, c] : terms_)
    for (std::size_t i = 0; i < ex.size(); ++i)
      if (ex[i]) used[i] = 1;
  if (std::all_of(used.begin(), used.end(), [](int u) { return u; })) return;
  std::vector<std::string> nv;
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) nv.push_back(vars_[i]);
  std::map<std::vector<int>, Rational> nt;
  for (const auto& [ex, c] : terms_) {
    std::vector<int> ne;
    for (std::size_t i = 0; i < ex.size(); ++i)
      if (used[i]) ne.push_back(ex[i]);
    nt[ne] = c;
  }
  vars_ = std::move(nv);
  terms_ = std::move(nt);
}

std::pair<ParamPolynomial, ParamPolynomial> ParamPolynomial::aligned(const ParamPolynomial& a,
                                                                     const ParamPolynomial& b) {
  std::vector<std::string> vars = a.vars_;
  for (const auto& v : b.vars_)
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::sort(vars.begin(), vars.end());
  auto remap = [&](const ParamPolynomial& p) {
    ParamPolynomial r;
    r.vars_ = vars;
    for (const auto& [ex, c] : p.terms_) {
      std::vector<int> ne(vars.size(), 0);
      for (std::size_t i = 0; i < p.vars_.size(); ++i) {
        auto pos = std::find(vars.begin(), vars.end(), p.vars_[i]) - vars.begin();
        ne[pos] = i < ex.size() ? ex[i] : 0;
      }
      r.terms_[ne] += c;
    }
    return r;
  };
  return {remap(a), remap(b)};
}

int ParamPolynomial::degree() const {
  int d = 0;
  for (const auto& [ex, c] : terms_) d = std::max(d, std::accumulate(ex.begin(), ex.end(), 0));
  return d;
}

ParamPolynomial ParamPolynomial::operator-() const {
  ParamPolynomial r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

ParamPolynomial ParamPolynomial::operator+(const ParamPolynomial& o) const {
  auto [a, b] = aligned(*this, o);
  for (const auto& [ex, c] : b.terms_) a.terms_[ex] += c;
  a.prune();
  return a;
}

ParamPolynomial ParamPolynomial::operator-(const ParamPolynomial& o) const { return *this + (-o); }

ParamPolynomial ParamPolynomial::operator*(const ParamPolynomial& o) const {
  auto [a, b] = aligned(*this, o);
  ParamPolynomial r;
  r.vars_ = a.vars_;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) {
      std::vector<int> ex(r.vars_.size(), 0);
      for (std::size_t i = 0; i < ex.size(); ++i) ex[i] = ea[i] + eb[i];
      r.terms_[ex] += ca * cb;
    }
  r.prune();
  return r;
}

bool ParamPolynomial::operator==(const ParamPolynomial& o) const {
  auto [a, b] = aligned(*this, o);
  return a.terms_ == b.terms_;
}

Rational ParamPolynomial::eval(const std::map<std::string, Rational>& point) const {
  Rational out(0);
  for (const auto& [ex, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (!ex[i]) continue;
      auto it = point.find(vars_[i]);
      if (it == point.end())
        throw std::invalid_argument("eval: no value for parameter " + vars_[i]);
      for (int k = 0; k < ex[i]; ++k) t *= it->second;
    }
    out += t;
  }
  return out;
}

ParamPolynomial ParamPolynomial::substitute(
    const std::map<std::string, ParamPolynomial>& subst) const {
  ParamPolynomial out;
  for (const auto& [ex, c] : terms_) {
    ParamPolynomial t(c);
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (!ex[i]) continue;
      auto it = subst.find(vars_[i]);
      ParamPolynomial v = it != subst.end() ? it->second : variable(vars_[i]);
      for (int k = 0; k < ex[i]; ++k) t *= v;
    }
    out += t;
  }
  return out;
}

std::string ParamPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  // Render highest total degree first for readability.
  std::vector<std::pair<std::vector<int>, Rational>> ts(terms_.begin(), terms_.end());
  std::stable_sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    return std::accumulate(a.first.begin(), a.first.end(), 0) >
           std::accumulate(b.first.begin(), b.first.end(), 0);
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [ex, c0] : ts) {
    Rational c = c0;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      if (c < 0) c = -c;
    }
    first = false;
    bool any_var = std::any_of(ex.begin(), ex.end(), [](int e) { return e > 0; });
    if (!any_var || c != 1) os << rat_to_string(c);
    bool star = c != 1 || !any_var;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (!ex[i]) continue;
      if (star) os << "*";
      os << vars_[i];
      if (ex[i] > 1) os << "^" << ex[i];
      star = true;
    }
  }
  return os.str();
}

ParamPolynomial operator*(const Rational& c, const ParamPolynomial& p) {
  return ParamPolynomial(c) * p;
}

}  // namespace diracind
