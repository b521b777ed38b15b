#ifndef RIGID4_BALL_HPP
#define RIGID4_BALL_HPP

#include <mpfr.h>

#include "rigid4/cyclotomic.hpp"

namespace rigid4 {

// Certified real interval as midpoint +- radius over MPFR. Every operation
// widens the radius enough to cover its own rounding error.
class Ball {
 public:
  explicit Ball(mpfr_prec_t prec);
  Ball(const Ball& o);
  Ball(Ball&& o) noexcept;
  Ball& operator=(const Ball& o);
  ~Ball();

  static Ball exact(const Rat& q, mpfr_prec_t prec);
  static Ball zero(mpfr_prec_t prec);
  // cos(2*pi*x), sin(2*pi*x) for rational x.
  static Ball cos2pi(const Rat& x, mpfr_prec_t prec);
  static Ball sin2pi(const Rat& x, mpfr_prec_t prec);

  Ball operator+(const Ball& o) const;
  Ball operator-(const Ball& o) const;
  Ball operator*(const Ball& o) const;
  Ball& operator+=(const Ball& o);

  // Sign of every point in the ball: -1, 0 (straddles), +1.
  int sign() const;
  bool contains_zero() const { return sign() == 0; }
  double midpoint_double() const;
  double radius_double() const;
  mpfr_prec_t precision() const { return prec_; }

 private:
  void bump_radius();  // absorb one ulp of midpoint rounding error
  mpfr_t c_, r_;
  mpfr_prec_t prec_;
};

struct ComplexBall {
  Ball re, im;
};

// Default starting precision for adaptive sign determination; the
// RIGID4_PRECISION environment variable overrides it.
mpfr_prec_t default_start_precision();

// Certified numeric embedding of e at zeta_N = e^{2*pi*i/N}.
ComplexBall embed(const CycElt& e, mpfr_prec_t prec);

// Exact sign of a real cyclotomic number: decides zero exactly, otherwise
// refines the interval (doubling precision) until zero is excluded.
// Throws DomainError if the element is not real.
int sign_of_real(const CycElt& e);

}  // namespace rigid4

#endif
