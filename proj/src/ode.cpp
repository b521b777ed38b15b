#include "rigid4/ode.hpp"

#include <algorithm>

namespace rigid4 {

PowerSeries::PowerSeries(std::vector<CycElt> coeffs, long order)
    : c_(std::move(coeffs)), order_(order) {
  if (order < 0) throw DomainError("series order must be >= 0");
  c_.resize(order + 1, CycElt::zero());
}

PowerSeries PowerSeries::constant(const CycElt& c, long order) {
  return PowerSeries({c}, order);
}

CycElt PowerSeries::coeff(long i) const {
  if (i < 0 || i > order_) return CycElt::zero();
  return c_[i];
}

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
  long n = std::min(order_, o.order_);
  std::vector<CycElt> c(n + 1);
  for (long i = 0; i <= n; ++i) c[i] = c_[i] + o.c_[i];
  return PowerSeries(std::move(c), n);
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
  long n = std::min(order_, o.order_);
  std::vector<CycElt> c(n + 1);
  for (long i = 0; i <= n; ++i) c[i] = c_[i] - o.c_[i];
  return PowerSeries(std::move(c), n);
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
  long n = std::min(order_, o.order_);
  std::vector<CycElt> c(n + 1, CycElt::zero());
  for (long i = 0; i <= n; ++i) {
    if (c_[i].is_zero()) continue;
    for (long j = 0; i + j <= n; ++j)
      if (!o.c_[j].is_zero()) c[i + j] = c[i + j] + c_[i] * o.c_[j];
  }
  return PowerSeries(std::move(c), n);
}

PowerSeries PowerSeries::operator*(const CycElt& s) const {
  std::vector<CycElt> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
  return PowerSeries(std::move(c), order_);
}

PowerSeries PowerSeries::truncated(long order) const {
  std::vector<CycElt> c(c_.begin(), c_.begin() + std::min(order + 1, order_ + 1));
  return PowerSeries(std::move(c), order);
}

PowerSeries PowerSeries::derivative() const {
  if (order_ == 0) return PowerSeries({}, 0);
  std::vector<CycElt> c(order_);
  for (long i = 1; i <= order_; ++i) c[i - 1] = c_[i] * Rat(i);
  return PowerSeries(std::move(c), order_ - 1);
}

PowerSeries PowerSeries::shifted(long k) const {
  std::vector<CycElt> c(order_ + 1 + k, CycElt::zero());
  for (long i = 0; i <= order_; ++i) c[i + k] = c_[i];
  return PowerSeries(std::move(c), order_ + k);
}

PowerSeries PowerSeries::inverse() const {
  if (c_[0].is_zero()) throw DomainError("series inverse needs a unit constant term");
  std::vector<CycElt> r(order_ + 1, CycElt::zero());
  CycElt c0i = c_[0].inverse();
  r[0] = c0i;
  for (long i = 1; i <= order_; ++i) {
    CycElt s = CycElt::zero();
    for (long j = 1; j <= i; ++j)
      if (!c_[j].is_zero()) s = s + c_[j] * r[i - j];
    r[i] = -(s * c0i);
  }
  return PowerSeries(std::move(r), order_);
}

PowerSeries PowerSeries::pow_int(long k) const {
  PowerSeries r = constant(CycElt::one(), order_);
  PowerSeries base = *this;
  for (; k > 0; k >>= 1) {
    if (k & 1) r = r * base;
    if (k > 1) base = base * base;
  }
  return r;
}

bool PowerSeries::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

PowerSeries PowerSeries::log() const {
  if (!c_[0].is_one()) throw DomainError("series log needs constant term 1");
  // log f = integral of f'/f
  PowerSeries q = derivative() * inverse().truncated(order_ - 1 < 0 ? 0 : order_ - 1);
  std::vector<CycElt> c(order_ + 1, CycElt::zero());
  for (long i = 1; i <= order_; ++i) c[i] = q.coeff(i - 1) * rat(1, i);
  return PowerSeries(std::move(c), order_);
}

PowerSeries PowerSeries::exp() const {
  if (!c_[0].is_zero()) throw DomainError("series exp needs constant term 0");
  // g' = f' g, solved coefficient by coefficient
  std::vector<CycElt> g(order_ + 1, CycElt::zero());
  g[0] = CycElt::one();
  for (long i = 1; i <= order_; ++i) {
    CycElt s = CycElt::zero();
    for (long j = 1; j <= i; ++j)
      if (!c_[j].is_zero()) s = s + c_[j] * Rat(j) * g[i - j];
    g[i] = s * rat(1, i);
  }
  return PowerSeries(std::move(g), order_);
}

PowerSeries PowerSeries::pow(const Rat& r) const {
  return (log() * CycElt::from_rat(r)).exp();
}

PowerSeries apply_operator(const LinearOperator& L, const PowerSeries& y) {
  PowerSeries out = PowerSeries::constant(CycElt::zero(), y.order());
  PowerSeries d = y;
  for (size_t i = 0; i < L.p.size(); ++i) {
    if (i > 0) d = d.derivative();
    if (L.p[i].is_zero()) continue;
    PowerSeries term = PowerSeries::constant(CycElt::zero(), out.order());
    for (long k = 0; k <= L.p[i].degree(); ++k)
      if (!L.p[i].coeff(k).is_zero())
        term = term + (d.shifted(k).truncated(out.order()) * L.p[i].coeff(k));
    out = out + term;
  }
  return out;
}

namespace {

Rat e1(const std::array<Rat, 4>& v) { return v[0] + v[1] + v[2] + v[3]; }
Rat e2(const std::array<Rat, 4>& v) {
  Rat s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) s += v[i] * v[j];
  return s;
}
Rat e3(const std::array<Rat, 4>& v) {
  Rat s = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) s += v[i] * v[j] * v[k];
  return s;
}

}  // namespace

OdeCoefficients ode_coefficients(const std::array<Rat, 2>& alpha,
                                 const std::array<Rat, 4>& gamma) {
  OdeCoefficients c;
  c.alpha = alpha;
  c.gamma = gamma;
  const Rat ea1 = alpha[0] + alpha[1];
  const Rat eg1 = e1(gamma), eg2 = e2(gamma), eg3 = e3(gamma);
  c.beta = (1 + ea1 - eg1) / 2;
  c.A = 6 + eg1;
  c.B = 3 + ea1;
  c.C = 7 + 3 * eg1 + eg2;
  c.E = 1 + ea1 + alpha[0] * alpha[1];
  c.D = c.E + c.C - (c.beta - 1) * (c.beta - 2);
  c.F = 1 + eg1 + eg2 + eg3;
  c.G = c.F + 2 * (c.beta - 1) * (c.beta - 2) * (c.beta - 3) +
        (c.beta - 1) * (c.beta - 2) * (2 * c.A - c.B) + (c.beta - 1) * (2 * c.C - c.D);
  c.H = gamma[0] * gamma[1] * gamma[2] * gamma[3];
  return c;
}

LinearOperator goursat_operator(const OdeCoefficients& c) {
  auto rp = [](std::initializer_list<Rat> coeffs) {
    std::vector<CycElt> v;
    for (const Rat& q : coeffs) v.push_back(CycElt::from_rat(q));
    return CycPoly(std::move(v));
  };
  LinearOperator L;
  L.p.resize(5);
  L.p[4] = rp({0, 0, 1, -2, 1});                       // x^2 (x-1)^2
  L.p[3] = rp({0, c.B, -(c.A + c.B), c.A});            // (Ax - B) x (x-1)
  L.p[2] = rp({c.E, -c.D, c.C});
  L.p[1] = rp({-c.G, c.F});
  L.p[0] = rp({c.H});
  return L;
}

PowerSeries series_solution(const OdeCoefficients& c, const CycElt& a0,
                            const CycElt& a1, long order) {
  std::vector<CycElt> a(order + 1, CycElt::zero());
  a[0] = a0;
  if (order >= 1) a[1] = a1;
  for (long k = 2; k <= order; ++k) {
    const Rat m(k - 2);
    // coefficient of x^m in L[y] gives C0*a_{m+2} = C1*a_{m+1} + C2*a_m
    Rat c0 = (m + 1) * (m + 2) * (m * (m - 1) + c.B * m + c.E);
    Rat c1 = (m + 1) * (2 * m * (m - 1) * (m - 2) + (c.A + c.B) * m * (m - 1) + c.D * m + c.G);
    Rat c2 = -(m * (m - 1) * (m - 2) * (m - 3) + c.A * m * (m - 1) * (m - 2) +
               c.C * m * (m - 1) + c.F * m + c.H);
    if (c0 == 0) throw DomainError("resonant indicial root: recursion leading coefficient vanishes");
    a[k] = (a[k - 1] * c1 + a[k - 2] * c2) * (1 / c0);
  }
  return PowerSeries(std::move(a), order);
}

std::pair<PowerSeries, PowerSeries> series_solutions(const OdeCoefficients& c, long order) {
  return {series_solution(c, CycElt::one(), CycElt::zero(), order),
          series_solution(c, CycElt::zero(), CycElt::one(), order)};
}

namespace {

Rat rational_coeff(const CycElt& e) {
  if (!e.is_rational()) throw DomainError("operator coefficient is not rational");
  return e.rational_value();
}

// Rational roots (with multiplicity) of a polynomial with rational
// coefficients; deflates until no rational root remains.
std::pair<std::vector<Rat>, std::optional<CycPoly>> rational_roots(CycPoly p) {
  std::vector<Rat> roots;
  while (p.degree() >= 1) {
    // root 0
    if (p.coeff(0).is_zero()) {
      roots.push_back(0);
      std::vector<CycElt> c(p.coeffs().begin() + 1, p.coeffs().end());
      p = CycPoly(std::move(c));
      continue;
    }
    // clear denominators to an integer polynomial
    Int den = 1;
    for (long i = 0; i <= p.degree(); ++i) {
      Rat q = rational_coeff(p.coeff(i));
      mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
    }
    std::vector<Int> ic(p.degree() + 1);
    for (long i = 0; i <= p.degree(); ++i) {
      Rat q = rational_coeff(p.coeff(i)) * Rat(den);
      ic[i] = q.get_num();
    }
    auto divisors = [](Int n) {
      n = abs(n);
      std::vector<Int> d;
      for (Int i = 1; i * i <= n; ++i)
        if (n % i == 0) {
          d.push_back(i);
          if (i * i != n) d.push_back(n / i);
        }
      return d;
    };
    bool found = false;
    for (const Int& pn : divisors(ic[0])) {
      for (const Int& qn : divisors(ic.back())) {
        for (int s : {1, -1}) {
          Rat cand(pn * s, qn);
          cand.canonicalize();
          if (p.eval(CycElt::from_rat(cand)).is_zero()) {
            roots.push_back(cand);
            // Horner deflation by (x - cand)
            std::vector<CycElt> out(p.degree());
            CycElt acc = p.coeff(p.degree());
            for (long i = p.degree() - 1; i >= 0; --i) {
              out[i] = acc;
              acc = p.coeff(i) + acc * CycElt::from_rat(cand);
            }
            p = CycPoly(std::move(out));
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
    if (!found) break;
  }
  std::sort(roots.begin(), roots.end());
  if (p.degree() >= 1) return {roots, p};
  return {roots, std::nullopt};
}

CycPoly shift_poly(const CycPoly& p, const Rat& c) {
  // p(x + c) by Horner on the shifted variable
  CycPoly out;
  CycPoly lin({CycElt::from_rat(c), CycElt::one()});
  for (long i = p.degree(); i >= 0; --i)
    out = out * lin + CycPoly::constant(p.coeff(i));
  return out;
}

}  // namespace

IndicialResult indicial_exponents(const LinearOperator& L, SingularPoint at) {
  const int m = L.order();
  // indicial polynomial coefficients: I(rho) = sum over "extreme" terms
  // val(p_i) - i minimal at 0/1, deg(p_i) - i maximal at infinity
  std::vector<CycPoly> ps = L.p;
  if (at == SingularPoint::one)
    for (auto& p : ps) p = shift_poly(p, Rat(1));

  // build I as a rational polynomial in rho, evaluated via coefficients of
  // falling factorials; assemble through an (m+1)-point interpolation-free
  // expansion: accumulate coefficient vectors of prod (rho - j).
  auto falling_coeffs = [](int i, bool at_inf) {
    // coefficients of rho(rho-1)...(rho-i+1), or of
    // (-rho)(-rho-1)...(-rho-i+1) at infinity
    std::vector<Rat> c = {1};
    for (int j = 0; j < i; ++j) {
      std::vector<Rat> n(c.size() + 1, Rat(0));
      for (size_t k = 0; k < c.size(); ++k) {
        // multiply by (rho - j) or (-rho - j)
        n[k + 1] += at_inf ? -c[k] : c[k];
        n[k] += -Rat(j) * c[k];
      }
      c = std::move(n);
    }
    return c;
  };

  long extreme = 0;
  bool first = true;
  const bool at_inf = (at == SingularPoint::infinity);
  std::vector<long> key(ps.size(), 0);
  std::vector<bool> present(ps.size(), false);
  for (size_t i = 0; i < ps.size(); ++i) {
    if (ps[i].is_zero()) continue;
    long v;
    if (at_inf) {
      v = ps[i].degree() - static_cast<long>(i);
    } else {
      long val = 0;
      while (ps[i].coeff(val).is_zero()) ++val;
      v = val - static_cast<long>(i);
    }
    key[i] = v;
    present[i] = true;
    if (first || (at_inf ? v > extreme : v < extreme)) {
      extreme = v;
      first = false;
    }
  }
  std::vector<Rat> ind(m + 1, Rat(0));
  for (size_t i = 0; i < ps.size(); ++i) {
    if (!present[i] || key[i] != extreme) continue;
    Rat lead = rational_coeff(ps[i].coeff(extreme + static_cast<long>(i)));
    auto fc = falling_coeffs(static_cast<int>(i), at_inf);
    for (size_t k = 0; k < fc.size(); ++k) ind[k] += lead * fc[k];
  }
  std::vector<CycElt> ic;
  for (const Rat& q : ind) ic.push_back(CycElt::from_rat(q));
  CycPoly indicial(std::move(ic));
  if (indicial.degree() != m)
    throw DomainError("irregular singular point: indicial degree " +
                      std::to_string(indicial.degree()) + " < operator order");
  auto [roots, leftover] = rational_roots(indicial);
  return IndicialResult{std::move(roots), std::move(leftover)};
}

bool verify_algebraic(const std::vector<CycPoly>& poly_in_y, const PowerSeries& y, long n) {
  if (y.order() < n - 1) throw DomainError("series truncation order too small");
  PowerSeries acc = PowerSeries::constant(CycElt::zero(), n - 1);
  // Horner in y
  for (size_t k = poly_in_y.size(); k-- > 0;) {
    acc = acc * y.truncated(n - 1);
    const CycPoly& a = poly_in_y[k];
    for (long i = 0; i <= a.degree() && i < n; ++i)
      if (!a.coeff(i).is_zero()) {
        PowerSeries mono = PowerSeries::constant(a.coeff(i), n - 1).shifted(i).truncated(n - 1);
        acc = acc + mono;
      }
  }
  return acc.is_zero();
}

PowerSeries pfq_series(const std::vector<Rat>& upper, const std::vector<Rat>& lower, long n) {
  std::vector<CycElt> c(n + 1);
  Rat term = 1;
  c[0] = CycElt::one();
  for (long k = 0; k < n; ++k) {
    for (const Rat& u : upper) term *= u + k;
    for (const Rat& l : lower) {
      if (l + k == 0) throw DomainError("pfq_series: lower parameter pole at k = " + std::to_string(k));
      term /= l + k;
    }
    c[k + 1] = CycElt::from_rat(term);
  }
  return PowerSeries(std::move(c), n);
}

ExponentSchedule newton_exponents(const NewtonPolygonSides& sides, const Rat& r) {
  auto expand = [&](const std::vector<PolygonSide>& ss) {
    std::vector<Rat> out;
    for (const auto& s : ss) {
      if (s.width <= 0) throw DomainError("vertical or empty polygon side rejected");
      Int d = s.slope.get_den();
      for (long j = 0; j < s.width; ++j) {
        Rat jd(Int(j), d);
        jd.canonicalize();
        out.push_back(jd - s.slope * r);
      }
    }
    return out;
  };
  return ExponentSchedule{expand(sides.bottom), expand(sides.top)};
}

std::set<Int> denominator_support(const PowerSeries& y, long n) {
  std::set<Int> primes;
  for (long i = 0; i <= std::min(n, y.order()); ++i) {
    const CycElt e = y.coeff(i);
    for (const Rat& q : e.coeffs()) {
      Int d = q.get_den();
      for (Int p = 2; p * p <= d; ++p)
        if (d % p == 0) {
          primes.insert(p);
          while (d % p == 0) d /= p;
        }
      if (d > 1) primes.insert(d);
    }
  }
  return primes;
}

PowerSeries series_root(const std::vector<CycPoly>& poly_in_y, const CycElt& eta0, long order) {
  auto eval_P = [&](const PowerSeries& y) {
    PowerSeries acc = PowerSeries::constant(CycElt::zero(), order);
    for (size_t k = poly_in_y.size(); k-- > 0;) {
      acc = acc * y;
      const CycPoly& a = poly_in_y[k];
      for (long i = 0; i <= a.degree() && i <= order; ++i)
        if (!a.coeff(i).is_zero())
          acc = acc + PowerSeries::constant(a.coeff(i), order).shifted(i).truncated(order);
    }
    return acc;
  };
  // dP/dy
  std::vector<CycPoly> dp;
  for (size_t k = 1; k < poly_in_y.size(); ++k)
    dp.push_back(poly_in_y[k] * CycElt::from_rat(Rat(static_cast<long>(k))));
  auto eval_dP = [&](const PowerSeries& y) {
    PowerSeries acc = PowerSeries::constant(CycElt::zero(), order);
    for (size_t k = dp.size(); k-- > 0;) {
      acc = acc * y;
      const CycPoly& a = dp[k];
      for (long i = 0; i <= a.degree() && i <= order; ++i)
        if (!a.coeff(i).is_zero())
          acc = acc + PowerSeries::constant(a.coeff(i), order).shifted(i).truncated(order);
    }
    return acc;
  };
  PowerSeries y = PowerSeries::constant(eta0, order);
  {
    PowerSeries d0 = eval_dP(y);
    if (d0.coeff(0).is_zero()) throw DomainError("series_root: branch point (P_y vanishes at the seed)");
  }
  // Newton: quadratic convergence, so ~log2(order) sweeps suffice
  long steps = 1;
  while ((1L << steps) <= order + 1) ++steps;
  for (long it = 0; it < steps + 1; ++it)
    y = y - eval_P(y) * eval_dP(y).inverse();
  PowerSeries resid = eval_P(y);
  if (!resid.is_zero()) throw DomainError("series_root: Newton iteration did not converge");
  return y;
}

}  // namespace rigid4
