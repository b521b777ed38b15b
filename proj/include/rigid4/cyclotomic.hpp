#ifndef RIGID4_CYCLOTOMIC_HPP
#define RIGID4_CYCLOTOMIC_HPP

#include <vector>

#include "rigid4/rat.hpp"

namespace rigid4 {

long euler_phi(long n);

// Coefficients (low to high) of the N-th cyclotomic polynomial Phi_N, cached.
const std::vector<Int>& cyclotomic_polynomial(long n);

// Reduces a raw power-basis coefficient vector (any length) mod Phi_N and
// pads to length phi(N).
std::vector<Rat> reduce_mod_cyclotomic(long n, std::vector<Rat> raw);

// Element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^{phi(N)-1}
// mod Phi_N. Immutable after construction; values at different conductors
// compare and combine by lifting to the lcm conductor.
class CycElt {
 public:
  CycElt() : n_(1), c_(1, Rat(0)) {}
  // cyc_normalize: canonical representative of the raw coefficient vector.
  CycElt(long conductor, std::vector<Rat> raw);

  static CycElt zero(long conductor = 1);
  static CycElt one(long conductor = 1);
  static CycElt from_rat(const Rat& q, long conductor = 1);
  static CycElt zeta(long conductor, long power = 1);
  // e^{2*pi*i*x} at conductor den(x) (or a given multiple).
  static CycElt root_of_unity(const Exponent& x);
  static CycElt root_of_unity(const Exponent& x, long conductor);

  long conductor() const { return n_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const { return *this == one(n_); }
  // True iff the element lies in Q (power-basis representation is unique).
  bool is_rational() const;
  Rat rational_value() const;  // throws DomainError unless is_rational()

  CycElt lifted(long conductor) const;  // conductor must be a multiple of n_

  CycElt operator+(const CycElt& o) const;
  CycElt operator-(const CycElt& o) const;
  CycElt operator*(const CycElt& o) const;
  CycElt operator/(const CycElt& o) const;
  CycElt operator-() const;
  CycElt inverse() const;  // throws DomainError on zero

  CycElt operator+(const Rat& q) const { return *this + from_rat(q, n_); }
  CycElt operator-(const Rat& q) const { return *this - from_rat(q, n_); }
  CycElt operator*(const Rat& q) const;

  // galois_act: zeta_N -> zeta_N^t, gcd(t, N) = 1.
  CycElt galois(long t) const;
  // Complex conjugation zeta -> zeta^{-1}.
  CycElt conj() const { return galois(n_ == 1 ? 1 : n_ - 1); }
  bool is_real() const { return *this == conj(); }

  bool operator==(const CycElt& o) const;
  bool operator!=(const CycElt& o) const { return !(*this == o); }

  // Lifts a and b to their common (lcm) conductor.
  static long align(CycElt& a, CycElt& b);

 private:
  long n_;
  std::vector<Rat> c_;
};

inline CycElt operator*(const Rat& q, const CycElt& e) { return e * q; }

}  // namespace rigid4

#endif
