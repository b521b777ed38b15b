#ifndef RIGID4_POLY_HPP
#define RIGID4_POLY_HPP

#include <vector>

#include "rigid4/cyclotomic.hpp"

namespace rigid4 {

// Univariate polynomial over Q(zeta); degree = index of last nonzero
// coefficient, zero polynomial has empty coefficient list.
class CycPoly {
 public:
  CycPoly() = default;
  explicit CycPoly(std::vector<CycElt> coeffs);

  static CycPoly zero() { return CycPoly(); }
  static CycPoly constant(const CycElt& c);
  static CycPoly x(long conductor = 1);
  static CycPoly from_roots(const std::vector<CycElt>& roots);
  // Product of Phi_d factors is not needed here; Phi_N itself as CycPoly:
  static CycPoly cyclotomic(long n);

  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }  // -1 for zero
  const std::vector<CycElt>& coeffs() const { return c_; }
  CycElt coeff(long i) const;
  CycElt leading() const;
  bool is_monic() const;

  CycPoly operator+(const CycPoly& o) const;
  CycPoly operator-(const CycPoly& o) const;
  CycPoly operator*(const CycPoly& o) const;
  CycPoly operator*(const CycElt& s) const;
  CycPoly operator-() const;

  CycElt eval(const CycElt& x) const;
  CycPoly derivative() const;
  // Galois action on all coefficients.
  CycPoly galois(long t) const;

  bool operator==(const CycPoly& o) const;
  bool operator!=(const CycPoly& o) const { return !(*this == o); }

 private:
  void trim();
  std::vector<CycElt> c_;  // low to high
};

}  // namespace rigid4

#endif
