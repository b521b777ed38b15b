#include "rigid4/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace rigid4 {

Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw DomainError("empty rational literal");
  std::string t = s;
  auto slash = t.find('/');
  try {
    Rat q;
    if (slash == std::string::npos) {
      q = Rat(Int(t));
    } else {
      Int num(t.substr(0, slash)), den(t.substr(slash + 1));
      if (den == 0) throw DomainError("zero denominator in '" + s + "'");
      q = Rat(num, den);
    }
    q.canonicalize();
    return q;
  } catch (const std::invalid_argument&) {
    throw DomainError("malformed rational '" + s + "'");
  }
}

std::string rat_to_string(const Rat& q) {
  std::ostringstream os;
  os << q.get_num();
  if (q.get_den() != 1) os << '/' << q.get_den();
  return os.str();
}

long euler_phi(long n) {
  long r = 1, m = n;
  for (long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      long pk = 1;
      while (m % d == 0) {
        m /= d;
        pk *= d;
      }
      r *= pk / d * (d - 1);
    }
  }
  if (m > 1) r *= m - 1;
  return r;
}

namespace {

// Exact division of integer polynomials, low-to-high coefficients.
std::vector<Int> polydiv_exact(std::vector<Int> a, const std::vector<Int>& b) {
  std::vector<Int> out(a.size() - b.size() + 1);
  for (long i = static_cast<long>(out.size()) - 1; i >= 0; --i) {
    Int c = a[i + b.size() - 1] / b.back();
    out[i] = c;
    for (size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  return out;
}

std::vector<Int> compute_cyclotomic(long n) {
  if (n == 1) return {Int(-1), Int(1)};
  std::vector<Int> p(n + 1);
  p[0] = -1;
  p[n] = 1;  // x^n - 1
  for (long d = 1; d < n; ++d)
    if (n % d == 0) p = polydiv_exact(std::move(p), cyclotomic_polynomial(d));
  return p;
}

std::map<long, std::vector<Int>> g_phi_cache;
std::mutex g_phi_mutex;

}  // namespace

const std::vector<Int>& cyclotomic_polynomial(long n) {
  if (n < 1) throw DomainError("conductor must be positive");
  {
    std::lock_guard<std::mutex> lock(g_phi_mutex);
    auto it = g_phi_cache.find(n);
    if (it != g_phi_cache.end()) return it->second;
  }
  // Compute outside the lock; recursion reaches divisors of n.
  auto poly = compute_cyclotomic(n);
  std::lock_guard<std::mutex> lock(g_phi_mutex);
  return g_phi_cache.emplace(n, std::move(poly)).first->second;
}

std::vector<Rat> reduce_mod_cyclotomic(long n, std::vector<Rat> raw) {
  const auto& phi_poly = cyclotomic_polynomial(n);
  const size_t deg = phi_poly.size() - 1;  // = phi(n)
  if (raw.size() < deg) raw.resize(deg, Rat(0));
  for (size_t i = raw.size(); i-- > deg;) {
    if (raw[i] != 0) {
      Rat c = raw[i];  // Phi is monic
      for (size_t j = 0; j <= deg; ++j) raw[i - deg + j] -= c * Rat(phi_poly[j]);
    }
  }
  raw.resize(deg);
  return raw;
}

CycElt::CycElt(long conductor, std::vector<Rat> raw) : n_(conductor) {
  if (conductor < 1) throw DomainError("conductor must be positive");
  c_ = reduce_mod_cyclotomic(conductor, std::move(raw));
}

CycElt CycElt::zero(long conductor) { return CycElt(conductor, {}); }

CycElt CycElt::one(long conductor) { return from_rat(Rat(1), conductor); }

CycElt CycElt::from_rat(const Rat& q, long conductor) {
  return CycElt(conductor, {q});
}

CycElt CycElt::zeta(long conductor, long power) {
  power %= conductor;
  if (power < 0) power += conductor;
  std::vector<Rat> raw(power + 1, Rat(0));
  raw[power] = 1;
  return CycElt(conductor, std::move(raw));
}

CycElt CycElt::root_of_unity(const Exponent& x) {
  return root_of_unity(x, x.den());
}

CycElt CycElt::root_of_unity(const Exponent& x, long conductor) {
  long d = x.den();
  if (conductor % d != 0) throw DomainError("conductor not divisible by exponent denominator");
  long num = mpz_class(x.value().get_num()).get_si();
  return zeta(conductor, num * (conductor / d));
}

bool CycElt::is_zero() const {
  for (const auto& q : c_)
    if (q != 0) return false;
  return true;
}

bool CycElt::is_rational() const {
  for (size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rat CycElt::rational_value() const {
  if (!is_rational()) throw DomainError("element is not rational");
  return c_[0];
}

CycElt CycElt::lifted(long conductor) const {
  if (conductor == n_) return *this;
  if (conductor % n_ != 0) throw DomainError("lift target is not a multiple of the conductor");
  long k = conductor / n_;
  std::vector<Rat> raw(c_.size() * k, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) raw[i * k] = c_[i];
  return CycElt(conductor, std::move(raw));
}

long CycElt::align(CycElt& a, CycElt& b) {
  if (a.n_ == b.n_) return a.n_;
  long m = lcm_long(a.n_, b.n_);
  a = a.lifted(m);
  b = b.lifted(m);
  return m;
}

CycElt CycElt::operator+(const CycElt& o) const {
  CycElt a = *this, b = o;
  long m = align(a, b);
  std::vector<Rat> c(a.c_.size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
  CycElt r;
  r.n_ = m;
  r.c_ = std::move(c);
  return r;
}

CycElt CycElt::operator-(const CycElt& o) const { return *this + (-o); }

CycElt CycElt::operator-() const {
  CycElt r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

CycElt CycElt::operator*(const CycElt& o) const {
  CycElt a = *this, b = o;
  long m = align(a, b);
  std::vector<Rat> raw(a.c_.size() + b.c_.size(), Rat(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (size_t j = 0; j < b.c_.size(); ++j)
      if (b.c_[j] != 0) raw[i + j] += a.c_[i] * b.c_[j];
  }
  return CycElt(m, std::move(raw));
}

CycElt CycElt::operator*(const Rat& q) const {
  CycElt r = *this;
  for (auto& x : r.c_) x *= q;
  return r;
}

namespace {

// Extended Euclid in Q[x]: returns u with u*f = gcd (mod g), assuming the gcd
// is a nonzero constant (g = Phi_N irreducible over Q).
std::vector<Rat> invert_mod(const std::vector<Rat>& f_in, const std::vector<Int>& g_in) {
  auto trim = [](std::vector<Rat>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  std::vector<Rat> r0(g_in.begin(), g_in.end());
  std::vector<Rat> r1 = f_in;
  trim(r0);
  trim(r1);
  std::vector<Rat> s0 = {}, s1 = {Rat(1)};  // track coefficient of f
  while (!r1.empty()) {
    // r0 = q*r1 + rem
    std::vector<Rat> q(std::max<size_t>(r0.size(), r1.size()), Rat(0));
    std::vector<Rat> rem = r0;
    if (rem.size() >= r1.size()) {
      for (size_t i = rem.size() - r1.size() + 1; i-- > 0;) {
        Rat c = rem[i + r1.size() - 1] / r1.back();
        if (c != 0) {
          q[i] = c;
          for (size_t j = 0; j < r1.size(); ++j) rem[i + j] -= c * r1[j];
        }
      }
    }
    trim(rem);
    trim(q);
    // s_next = s0 - q*s1
    std::vector<Rat> s2(std::max(s0.size(), q.size() + s1.size()), Rat(0));
    for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i)
      for (size_t j = 0; j < s1.size(); ++j) s2[i + j] -= q[i] * s1[j];
    trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r0 = gcd (constant), s0 * f = r0 mod g
  if (r0.size() != 1) throw DomainError("inverse does not exist");
  for (auto& c : s0) c /= r0[0];
  return s0;
}

}  // namespace

CycElt CycElt::inverse() const {
  if (is_zero()) throw DomainError("division by zero in Q(zeta)");
  if (is_rational()) return from_rat(Rat(1) / c_[0], n_);
  auto u = invert_mod(c_, cyclotomic_polynomial(n_));
  return CycElt(n_, std::move(u));
}

CycElt CycElt::operator/(const CycElt& o) const { return *this * o.inverse(); }

CycElt CycElt::galois(long t) const {
  long g = std::gcd(((t % n_) + n_) % n_, n_);
  if (n_ > 1 && g != 1) throw DomainError("galois exponent not coprime to conductor");
  std::vector<Rat> raw(n_, Rat(0));
  long tm = ((t % n_) + n_) % n_;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) raw[(i * tm) % n_] += c_[i];
  return CycElt(n_, std::move(raw));
}

bool CycElt::operator==(const CycElt& o) const {
  if (n_ == o.n_) return c_ == o.c_;
  CycElt a = *this, b = o;
  align(a, b);
  return a.c_ == b.c_;
}

}  // namespace rigid4
