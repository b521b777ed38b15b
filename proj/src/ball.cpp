#include "rigid4/ball.hpp"

#include <cstdlib>

namespace rigid4 {

Ball::Ball(mpfr_prec_t prec) : prec_(prec) {
  mpfr_init2(c_, prec);
  mpfr_init2(r_, 64);
  mpfr_set_zero(c_, 1);
  mpfr_set_zero(r_, 1);
}

Ball::Ball(const Ball& o) : prec_(o.prec_) {
  mpfr_init2(c_, prec_);
  mpfr_init2(r_, 64);
  mpfr_set(c_, o.c_, MPFR_RNDN);
  mpfr_set(r_, o.r_, MPFR_RNDU);
}

Ball::Ball(Ball&& o) noexcept : prec_(o.prec_) {
  c_[0] = o.c_[0];
  r_[0] = o.r_[0];
  mpfr_init2(o.c_, o.prec_);
  mpfr_init2(o.r_, 64);
}

Ball& Ball::operator=(const Ball& o) {
  if (this != &o) {
    mpfr_set_prec(c_, o.prec_);
    prec_ = o.prec_;
    mpfr_set(c_, o.c_, MPFR_RNDN);
    mpfr_set(r_, o.r_, MPFR_RNDU);
  }
  return *this;
}

Ball::~Ball() {
  mpfr_clear(c_);
  mpfr_clear(r_);
}

void Ball::bump_radius() {
  // one ulp of the midpoint bounds the rounding error of the last RNDN op
  if (mpfr_zero_p(c_)) return;
  mpfr_t ulp;
  mpfr_init2(ulp, 64);
  mpfr_abs(ulp, c_, MPFR_RNDU);
  mpfr_mul_2si(ulp, ulp, 1 - static_cast<long>(prec_), MPFR_RNDU);
  mpfr_add(r_, r_, ulp, MPFR_RNDU);
  mpfr_clear(ulp);
}

Ball Ball::exact(const Rat& q, mpfr_prec_t prec) {
  Ball b(prec);
  mpfr_set_q(b.c_, q.get_mpq_t(), MPFR_RNDN);
  b.bump_radius();
  return b;
}

Ball Ball::zero(mpfr_prec_t prec) { return Ball(prec); }

Ball Ball::cos2pi(const Rat& x, mpfr_prec_t prec) {
  // theta = 2*pi*x with rounding folded into the radius, then |cos'| <= 1.
  Ball b(prec);
  mpfr_t pi, theta;
  mpfr_init2(pi, prec);
  mpfr_init2(theta, prec);
  mpfr_const_pi(pi, MPFR_RNDN);
  mpfr_mul_q(theta, pi, x.get_mpq_t(), MPFR_RNDN);
  mpfr_mul_2si(theta, theta, 1, MPFR_RNDN);
  mpfr_cos(b.c_, theta, MPFR_RNDN);
  // error: ~3 ulp of theta propagated with slope <= 1, plus cos rounding
  mpfr_t err;
  mpfr_init2(err, 64);
  mpfr_abs(err, theta, MPFR_RNDU);
  mpfr_mul_2si(err, err, 3 - static_cast<long>(prec), MPFR_RNDU);
  mpfr_add(b.r_, b.r_, err, MPFR_RNDU);
  mpfr_clear(err);
  b.bump_radius();
  mpfr_clear(pi);
  mpfr_clear(theta);
  return b;
}

Ball Ball::sin2pi(const Rat& x, mpfr_prec_t prec) {
  return cos2pi(x - rat(1, 4), prec);
}

Ball Ball::operator+(const Ball& o) const {
  Ball b(std::min(prec_, o.prec_));
  mpfr_add(b.c_, c_, o.c_, MPFR_RNDN);
  mpfr_add(b.r_, r_, o.r_, MPFR_RNDU);
  b.bump_radius();
  return b;
}

Ball& Ball::operator+=(const Ball& o) {
  mpfr_add(c_, c_, o.c_, MPFR_RNDN);
  mpfr_add(r_, r_, o.r_, MPFR_RNDU);
  bump_radius();
  return *this;
}

Ball Ball::operator-(const Ball& o) const {
  Ball b(std::min(prec_, o.prec_));
  mpfr_sub(b.c_, c_, o.c_, MPFR_RNDN);
  mpfr_add(b.r_, r_, o.r_, MPFR_RNDU);
  b.bump_radius();
  return b;
}

Ball Ball::operator*(const Ball& o) const {
  // |xy - cc'| <= |c|r' + |c'|r + rr'
  Ball b(std::min(prec_, o.prec_));
  mpfr_mul(b.c_, c_, o.c_, MPFR_RNDN);
  mpfr_t t, u;
  mpfr_init2(t, 64);
  mpfr_init2(u, 64);
  mpfr_abs(t, c_, MPFR_RNDU);
  mpfr_mul(t, t, o.r_, MPFR_RNDU);
  mpfr_abs(u, o.c_, MPFR_RNDU);
  mpfr_mul(u, u, r_, MPFR_RNDU);
  mpfr_add(t, t, u, MPFR_RNDU);
  mpfr_mul(u, r_, o.r_, MPFR_RNDU);
  mpfr_add(b.r_, t, u, MPFR_RNDU);
  mpfr_clear(t);
  mpfr_clear(u);
  b.bump_radius();
  return b;
}

int Ball::sign() const {
  mpfr_t lo, hi;
  mpfr_init2(lo, prec_);
  mpfr_init2(hi, prec_);
  mpfr_sub(lo, c_, r_, MPFR_RNDD);
  mpfr_add(hi, c_, r_, MPFR_RNDU);
  int s = 0;
  if (mpfr_sgn(lo) > 0)
    s = 1;
  else if (mpfr_sgn(hi) < 0)
    s = -1;
  mpfr_clear(lo);
  mpfr_clear(hi);
  return s;
}

double Ball::midpoint_double() const { return mpfr_get_d(c_, MPFR_RNDN); }
double Ball::radius_double() const { return mpfr_get_d(r_, MPFR_RNDU); }

mpfr_prec_t default_start_precision() {
  static mpfr_prec_t p = [] {
    if (const char* env = std::getenv("RIGID4_PRECISION")) {
      long v = std::atol(env);
      if (v >= 16 && v <= 1 << 20) return static_cast<mpfr_prec_t>(v);
    }
    return static_cast<mpfr_prec_t>(128);
  }();
  return p;
}

ComplexBall embed(const CycElt& e, mpfr_prec_t prec) {
  ComplexBall z{Ball::zero(prec), Ball::zero(prec)};
  const long n = e.conductor();
  const auto& c = e.coeffs();
  for (size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    Ball q = Ball::exact(c[k], prec);
    Rat x = rat(static_cast<long>(k), n);
    z.re += q * Ball::cos2pi(x, prec);
    z.im += q * Ball::sin2pi(x, prec);
  }
  return z;
}

int sign_of_real(const CycElt& e) {
  if (e.is_zero()) return 0;
  if (e.is_rational()) return sgn(e.coeffs()[0]);
  if (!e.is_real()) throw DomainError("sign requested for a non-real element");
  for (mpfr_prec_t prec = default_start_precision();; prec *= 2) {
    int s = embed(e, prec).re.sign();
    if (s != 0) return s;
    if (prec > (1 << 20)) throw DomainError("sign determination did not converge");
  }
}

}  // namespace rigid4
