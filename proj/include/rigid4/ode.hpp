#ifndef RIGID4_ODE_HPP
#define RIGID4_ODE_HPP

#include <optional>
#include <set>

#include "rigid4/poly.hpp"

namespace rigid4 {

// Truncated power series at 0 over Q(zeta). coeff list a_0..a_{order}.
class PowerSeries {
 public:
  PowerSeries() : order_(-1) {}
  PowerSeries(std::vector<CycElt> coeffs, long order);
  static PowerSeries constant(const CycElt& c, long order);

  long order() const { return order_; }
  CycElt coeff(long i) const;
  const std::vector<CycElt>& coeffs() const { return c_; }

  PowerSeries operator+(const PowerSeries& o) const;
  PowerSeries operator-(const PowerSeries& o) const;
  PowerSeries operator*(const PowerSeries& o) const;  // truncates at min order
  PowerSeries operator*(const CycElt& s) const;
  PowerSeries truncated(long order) const;
  PowerSeries derivative() const;
  PowerSeries shifted(long k) const;  // multiply by x^k
  // multiplicative inverse; requires a_0 != 0
  PowerSeries inverse() const;
  PowerSeries pow_int(long k) const;
  bool is_zero() const;

  // log and exp with constant terms 1 and 0 respectively; rational power
  // f^r = exp(r*log f) for f(0) = 1.
  PowerSeries log() const;
  PowerSeries exp() const;
  PowerSeries pow(const Rat& r) const;

 private:
  std::vector<CycElt> c_;
  long order_;
};

// Linear differential operator sum_i p_i(x) (d/dx)^i with polynomial
// coefficients; p[i] is the coefficient of the i-th derivative.
struct LinearOperator {
  std::vector<CycPoly> p;
  int order() const { return static_cast<int>(p.size()) - 1; }
};

// L[y] as a truncated series (order drops by nothing; the result is exact
// through y.order() - order of L in the worst coefficient degree sense).
PowerSeries apply_operator(const LinearOperator& L, const PowerSeries& y);

struct OdeCoefficients {
  Rat A, B, C, D, E, F, G, H;
  Rat beta;
  std::array<Rat, 2> alpha;
  std::array<Rat, 4> gamma;
};

// The eight constants of the order-4 operator
//   x^2(x-1)^2 y'''' + (Ax-B)x(x-1) y''' + (Cx^2-Dx+E) y'' + (Fx-G) y' + H y
// determined by the exponent data (exponents at 0 are 0,1,1-alpha1,1-alpha2).
OdeCoefficients ode_coefficients(const std::array<Rat, 2>& alpha,
                                 const std::array<Rat, 4>& gamma);

LinearOperator goursat_operator(const OdeCoefficients& c);

// Coefficients of the holomorphic solution with given a_0, a_1, by the
// three-term recursion; validated elsewhere against apply_operator.
PowerSeries series_solution(const OdeCoefficients& c, const CycElt& a0,
                            const CycElt& a1, long order);

// Basis phi0 = 1 + O(x^2), phi1 = x + O(x^2).
std::pair<PowerSeries, PowerSeries> series_solutions(const OdeCoefficients& c, long order);

enum class SingularPoint { zero, one, infinity };

struct IndicialResult {
  std::vector<Rat> exponents;        // rational roots with multiplicity, sorted
  std::optional<CycPoly> leftover;   // nontrivial factor without rational roots
};

// Frobenius indicial exponents at a regular singular point (throws
// DomainError at an irregular one: indicial degree < operator order).
IndicialResult indicial_exponents(const LinearOperator& L, SingularPoint at);

// P(x, y(x)) = 0 mod x^n for P = sum_k a_k(x) y^k given as the list of
// x-polynomials a_0, a_1, ....
bool verify_algebraic(const std::vector<CycPoly>& poly_in_y, const PowerSeries& y, long n);

// Generalized hypergeometric series in Pochhammer-ratio form:
//   sum_k (prod (upper)_k / prod (lower)_k) x^k.
// The displayed parameter arrays are consumed verbatim: a standard pFq has
// the implicit lower entry 1 (whose Pochhammer is k!) listed explicitly.
PowerSeries pfq_series(const std::vector<Rat>& upper, const std::vector<Rat>& lower, long n);

struct PolygonSide {
  Rat slope;
  long width;  // horizontal width, must be positive
};

struct NewtonPolygonSides {
  std::vector<PolygonSide> bottom;
  std::vector<PolygonSide> top;
};

struct ExponentSchedule {
  std::vector<Rat> at_zero;
  std::vector<Rat> at_infinity;
};

// Local exponents of f^r read from the Newton polygon: each side of slope
// kappa = a/d and width e contributes j/d - kappa*r for j = 0..e-1.
ExponentSchedule newton_exponents(const NewtonPolygonSides& sides, const Rat& r);

// Primes dividing any coefficient denominator among a_0..a_n.
std::set<Int> denominator_support(const PowerSeries& y, long n);

// Series root of P(x, eta) = 0 with eta(0) = eta0 (simple root of the
// constant-term polynomial), by Newton iteration on power series.
PowerSeries series_root(const std::vector<CycPoly>& poly_in_y, const CycElt& eta0, long order);

}  // namespace rigid4

#endif
