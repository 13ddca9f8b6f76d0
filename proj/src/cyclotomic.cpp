#include "diracind/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace diracind {

/*
  Canonical basis.

  Write n = prod p^{a_p}.  Chinese remainder theorem: every exponent
  e in Z/n decomposes uniquely into digits d_p in Z/p^{a_p} with

      e = sum_p d_p * (n / p^{a_p})   (mod n),
      d_p = e * u_p                    (mod p^{a_p}),

  where u_p = (n/p^{a_p})^{-1} mod p^{a_p}.  Since Q(zeta_n) is the tensor
  product of the fields Q(zeta_{p^{a_p}}), and the power basis
  {zeta_{p^a}^j : 0 <= j < phi(p^a)} is a basis of each factor, the set

      { e : d_p(e) < phi(p^{a_p}) for all p | n }

  indexes a basis of Q(zeta_n).  Out-of-range digits are reduced with the
  cyclotomic polynomial relation for the prime power:

      p odd : zeta^{(p-1)p^{a-1} + r} = - sum_{i=0}^{p-2} zeta^{r + i p^{a-1}}
      p = 2 : zeta^{2^{a-1} + r}      = - zeta^r

  One pass per digit suffices because the rewritten digits are in range.
  After basis reduction the conductor is lowered to its minimum: the element
  lies in Q(zeta_{n/p}) iff every stored digit d_p is divisible by p (for
  a_p >= 2) or zero (for a_p = 1); descent rewrites the digits and repeats
  until no prime can be removed.
*/

namespace {

struct PrimePower {
  long p;
  long pa;     // p^a
  long phi;    // phi(p^a)
  long cof;    // n / p^a
  long u;      // cof^{-1} mod p^a
};

long mod_inverse(long a, long m) {
  long t = 0, newt = 1, r = m, newr = a % m;
  while (newr != 0) {
    long q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  if (t < 0) t += m;
  return t;
}

std::vector<PrimePower> factor_conductor(long n) {
  std::vector<PrimePower> out;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    long pa = 1;
    while (m % p == 0) pa *= p, m /= p;
    out.push_back({p, pa, pa / p * (p - 1), 0, 0});
  }
  if (m > 1) out.push_back({m, m, m - 1, 0, 0});
  for (auto& pp : out) {
    pp.cof = n / pp.pa;
    pp.u = mod_inverse(pp.cof % pp.pa, pp.pa);
  }
  return out;
}

long mod_n(long e, long n) {
  e %= n;
  return e < 0 ? e + n : e;
}

}  // namespace

Cyclotomic make_cyclotomic_unchecked(long n, std::map<long, Rational> coeff) {
  Cyclotomic c;
  c.n_ = n;
  c.coeff_ = std::move(coeff);
  c.canonicalize();
  return c;
}

Cyclotomic::Cyclotomic(const Rational& q) : n_(1) {
  if (q != 0) coeff_[0] = q;
}

Cyclotomic Cyclotomic::root_of_unity(long n, long k) {
  if (n <= 0) throw std::invalid_argument("root_of_unity: n must be positive");
  return make_cyclotomic_unchecked(n, {{mod_n(k, n), Rational(1)}});
}

void Cyclotomic::canonicalize() {
  for (auto it = coeff_.begin(); it != coeff_.end();)
    it = (it->second == 0) ? coeff_.erase(it) : std::next(it);
  if (n_ == 1) return;
  if (coeff_.empty()) {
    n_ = 1;
    return;
  }

  auto pps = factor_conductor(n_);

  // Reduce every digit into its basis range, one prime at a time.
  for (const auto& pp : pps) {
    std::map<long, Rational> next;
    for (const auto& [e, c] : coeff_) {
      long d = (long)((__int128)e * pp.u % pp.pa);  // digit of e at p
      if (d < pp.phi) {
        next[e] += c;
        continue;
      }
      long back = pp.pa / pp.p;  // p^{a-1}
      long r = d - pp.phi;       // 0 <= r < p^{a-1}
      for (long i = 0; i + 1 < pp.p; ++i) {
        long nd = r + i * back;
        long ne = mod_n(e + (long)((__int128)(nd - d) * pp.cof % n_), n_);
        next[ne] -= c;
      }
    }
    coeff_.swap(next);
  }
  for (auto it = coeff_.begin(); it != coeff_.end();)
    it = (it->second == 0) ? coeff_.erase(it) : std::next(it);
  if (coeff_.empty()) {
    n_ = 1;
    return;
  }

  // Conductor descent to the minimal field.
  bool changed = true;
  while (changed && n_ > 1) {
    changed = false;
    pps = factor_conductor(n_);
    for (const auto& pp : pps) {
      bool can = true;
      for (const auto& [e, c] : coeff_) {
        long d = (long)((__int128)e * pp.u % pp.pa);
        if (pp.pa > pp.p ? (d % pp.p != 0) : (d != 0)) {
          can = false;
          break;
        }
      }
      if (!can) continue;
      long nn = n_ / pp.p;
      auto nqq = factor_conductor(nn);
      std::map<long, Rational> next;
      for (const auto& [e, c] : coeff_) {
        // Digits are read off with the old conductor's CRT data and
        // reassembled with the new cofactors.
        long ne = 0;
        for (const auto& qq : nqq) {
          long d = 0;
          for (const auto& old : pps)
            if (old.p == qq.p) {
              d = (long)((__int128)e * old.u % old.pa);
              if (old.p == pp.p) d /= pp.p;
            }
          ne = mod_n(ne + (long)((__int128)d * qq.cof % nn), nn);
        }
        next[ne] += c;
      }
      n_ = nn;
      coeff_.swap(next);
      changed = true;
      break;
    }
  }
}

Rational Cyclotomic::rational_part() const {
  auto it = coeff_.find(0);
  return it == coeff_.end() ? Rational(0) : it->second;
}

Rational Cyclotomic::as_rational() const {
  if (n_ != 1) throw std::domain_error("not a rational value: " + to_string());
  return rational_part();
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& [e, c] : r.coeff_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  long n = std::lcm(n_, o.n_);
  std::map<long, Rational> acc;
  for (const auto& [e, c] : coeff_) acc[e * (n / n_)] += c;
  for (const auto& [e, c] : o.coeff_) acc[e * (n / o.n_)] += c;
  return make_cyclotomic_unchecked(n, std::move(acc));
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (is_zero() || o.is_zero()) return Cyclotomic();
  if (n_ == 1) return rational_part() * o;
  if (o.n_ == 1) return o.rational_part() * *this;
  long n = std::lcm(n_, o.n_);
  long la = n / n_, lb = n / o.n_;
  std::map<long, Rational> acc;
  for (const auto& [ea, ca] : coeff_)
    for (const auto& [eb, cb] : o.coeff_) acc[mod_n(ea * la + eb * lb, n)] += ca * cb;
  return make_cyclotomic_unchecked(n, std::move(acc));
}

Cyclotomic operator*(const Rational& q, const Cyclotomic& c) {
  if (q == 0) return Cyclotomic();
  std::map<long, Rational> acc;
  for (const auto& [e, co] : c.coefficients()) acc[e] = q * co;
  return make_cyclotomic_unchecked(c.conductor(), std::move(acc));
}

Cyclotomic Cyclotomic::conj() const { return galois(n_ - 1); }

Cyclotomic Cyclotomic::galois(long t) const {
  t = mod_n(t, n_);
  if (n_ > 1 && std::gcd(t, n_) != 1)
    throw std::invalid_argument("galois: exponent not coprime to conductor");
  std::map<long, Rational> acc;
  for (const auto& [e, c] : coeff_) acc[(long)((__int128)e * t % n_)] += c;
  return make_cyclotomic_unchecked(n_, std::move(acc));
}

std::complex<double> Cyclotomic::approx() const {
  std::complex<double> z = 0;
  for (const auto& [e, c] : coeff_)
    z += rat_to_double(c) * std::polar(1.0, 2.0 * M_PI * double(e) / double(n_));
  return z;
}

Cyclotomic Cyclotomic::sqrt_rational(const Rational& q) {
  if (q < 0) throw std::domain_error("sqrt_rational: negative argument");
  if (q == 0) return Cyclotomic();
  // sqrt(a/b) = sqrt(a*b)/b; split a*b = s^2 * d with d squarefree.
  Int ab = q.get_num() * q.get_den();
  Int s = 1, d = 1, m = ab;
  for (Int p = 2; p * p <= m; ++p) {
    int k = 0;
    while (m % p == 0) ++k, m /= p;
    for (int i = 0; i + 1 < k; i += 2) s *= p;
    if (k % 2) d *= p;
  }
  d *= m;  // m is prime or 1 at this point
  Cyclotomic root(Rational(s) / Rational(q.get_den()));
  // sqrt(d) as a product of Gauss sums over the primes dividing d.
  Int dd = d;
  for (Int p = 2; dd > 1; ++p) {
    if (p * p > dd) p = dd;  // remaining cofactor is prime
    if (dd % p != 0) continue;
    dd /= p;
    if (!p.fits_slong_p()) throw std::domain_error("sqrt_rational: radicand too large");
    long pl = p.get_si();
    if (pl == 2) {
      root *= E(8) - E(8, 3);  // sqrt(2) = zeta_8 + zeta_8^{-1}
      continue;
    }
    // Quadratic Gauss sum g_p = sum legendre(a,p) zeta_p^a equals sqrt(p)
    // for p = 1 mod 4 and i*sqrt(p) for p = 3 mod 4, with the positive
    // real/imaginary determination.
    std::map<long, Rational> g;
    for (long a = 1; a < pl; ++a) {
      long leg = 1, x = a % pl, acc = 1;
      for (long k = 0; k < (pl - 1) / 2; ++k) acc = acc * x % pl;
      leg = (acc == 1) ? 1 : -1;
      g[a] = Rational(leg);
    }
    Cyclotomic gp = make_cyclotomic_unchecked(pl, std::move(g));
    if (pl % 4 == 1)
      root *= gp;
    else
      root *= -(E(4) * gp);  // -i * (i sqrt(p)) = sqrt(p)
  }
  return root;
}

std::string Cyclotomic::to_string() const {
  if (coeff_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeff_) {
    Rational a = c;
    if (!first) {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      os << rat_to_string(a);
      continue;
    }
    if (a != 1) os << rat_to_string(a) << "*";
    os << "E(" << n_ << ")";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

Cyclotomic Cyclotomic::from_string(const std::string& s) {
  // Grammar: term (('+'|'-') term)*, term = rational ['*' E '(' n ')' ['^' k]]
  //          | E '(' n ')' ['^' k]
  Cyclotomic out;
  std::size_t i = 0;
  auto skip = [&] { while (i < s.size() && s[i] == ' ') ++i; };
  int sign = 1;
  skip();
  while (i < s.size()) {
    Rational coeff(1);
    bool have_coeff = false;
    if (s[i] == '+' || s[i] == '-') {
      sign = (s[i] == '-') ? -1 : 1;
      ++i;
      skip();
    }
    std::size_t j = i;
    while (j < s.size() && (isdigit(s[j]) || s[j] == '/')) ++j;
    if (j > i) {
      coeff = rat_from_string(s.substr(i, j - i));
      have_coeff = true;
      i = j;
      skip();
      if (i < s.size() && s[i] == '*') ++i, skip();
    }
    if (i < s.size() && s[i] == 'E') {
      ++i;
      if (i >= s.size() || s[i] != '(') throw std::invalid_argument("bad cyclotomic: " + s);
      ++i;
      long n = std::stol(s.substr(i), &j);
      i += j;
      if (i >= s.size() || s[i] != ')') throw std::invalid_argument("bad cyclotomic: " + s);
      ++i;
      long k = 1;
      if (i < s.size() && s[i] == '^') {
        ++i;
        k = std::stol(s.substr(i), &j);
        i += j;
      }
      out += Rational(sign) * coeff * E(n, k);
    } else if (have_coeff) {
      out += Cyclotomic(Rational(sign) * coeff);
    } else {
      throw std::invalid_argument("bad cyclotomic: " + s);
    }
    sign = 1;
    skip();
  }
  return out;
}

std::size_t Cyclotomic::hash() const {
  std::size_t h = std::hash<long>()(n_);
  for (const auto& [e, c] : coeff_) {
    h = hash_combine(h, std::hash<long>()(e));
    h = hash_combine(h, std::hash<double>()(rat_to_double(c)));
    h = hash_combine(h, std::hash<long>()(c.get_den().fits_slong_p() ? c.get_den().get_si() : 0));
  }
  return h;
}

}  // namespace diracind
