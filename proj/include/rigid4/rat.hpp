#ifndef RIGID4_RAT_HPP
#define RIGID4_RAT_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace rigid4 {

// Arbitrary-precision rational, always canonical (gcd 1, positive denominator).
using Rat = mpq_class;
using Int = mpz_class;

// Raised when an input violates a documented precondition of a library
// operation (as opposed to a usage/programming error).
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

inline Rat rat(long num, long den = 1) {
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Representative of q mod 1 in [0,1).
inline Rat mod1(const Rat& q) {
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return q - Rat(fl);
}

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

inline long lcm_long(long a, long b) {
  Int l;
  mpz_lcm_ui(l.get_mpz_t(), Int(a).get_mpz_t(), static_cast<unsigned long>(b));
  if (!l.fits_slong_p()) throw DomainError("conductor overflow");
  return l.get_si();
}

// Parses "p/q" or "p". Throws DomainError on malformed input.
Rat rat_from_string(const std::string& s);

// "p/q", or "p" when the denominator is 1.
std::string rat_to_string(const Rat& q);

// Rational exponent x in [0,1) standing for the unit-circle point e^{2*pi*i*x}.
class Exponent {
 public:
  Exponent() : v_(0) {}
  explicit Exponent(const Rat& q) : v_(mod1(q)) {}
  Exponent(long num, long den) : v_(mod1(rat(num, den))) {}

  const Rat& value() const { return v_; }
  long den() const {
    if (!v_.get_den().fits_slong_p()) throw DomainError("exponent denominator overflow");
    return v_.get_den().get_si();
  }
  bool is_zero() const { return v_ == 0; }

  Exponent operator+(const Exponent& o) const { return Exponent(v_ + o.v_); }
  Exponent operator-(const Exponent& o) const { return Exponent(v_ - o.v_); }
  Exponent operator-() const { return Exponent(-v_); }
  // Galois twist x -> t*x mod 1.
  Exponent times(long t) const { return Exponent(v_ * t); }

  bool operator==(const Exponent& o) const { return v_ == o.v_; }
  bool operator!=(const Exponent& o) const { return v_ != o.v_; }
  bool operator<(const Exponent& o) const { return v_ < o.v_; }

 private:
  Rat v_;
};

}  // namespace rigid4

#endif
