#ifndef RIGID4_MATRIX_HPP
#define RIGID4_MATRIX_HPP

#include <string>
#include <vector>

#include "rigid4/poly.hpp"

namespace rigid4 {

// Square matrix over Q(zeta) with all entries held at one common conductor.
class CycMatrix {
 public:
  CycMatrix() : n_(0), conductor_(1) {}
  CycMatrix(int n, long conductor);  // zero matrix
  explicit CycMatrix(std::vector<std::vector<CycElt>> rows);

  static CycMatrix identity(int n, long conductor = 1);
  static CycMatrix companion(const CycPoly& monic);

  int dim() const { return n_; }
  long conductor() const { return conductor_; }
  const CycElt& at(int i, int j) const { return a_[i * n_ + j]; }
  void set(int i, int j, const CycElt& v);

  CycMatrix lifted(long conductor) const;
  static long align(CycMatrix& a, CycMatrix& b);

  CycMatrix operator+(const CycMatrix& o) const;
  CycMatrix operator-(const CycMatrix& o) const;
  CycMatrix operator*(const CycMatrix& o) const;
  CycMatrix operator*(const CycElt& s) const;
  bool operator==(const CycMatrix& o) const;
  bool operator!=(const CycMatrix& o) const { return !(*this == o); }

  CycMatrix transpose() const;
  CycMatrix conj_transpose() const;
  CycMatrix galois(long t) const;  // entrywise
  CycElt trace() const;
  CycElt det() const;
  CycMatrix inverse() const;  // throws DomainError if singular
  bool is_identity() const;
  bool is_scalar() const;

  // Monic characteristic polynomial via Faddeev-LeVerrier.
  CycPoly charpoly() const;

  // Second exterior power: C(n,2) x C(n,2) matrix of 2x2 minors; its
  // characteristic polynomial has the pairwise eigenvalue products as roots.
  CycMatrix exterior_square() const;

  // Canonical byte serialization of the reduced coefficient vectors at the
  // matrix's conductor; equal matrices at one conductor give equal keys.
  std::string canonical_key() const;
  static CycMatrix from_canonical_key(const std::string& key);

 private:
  int n_;
  long conductor_;
  std::vector<CycElt> a_;
};

}  // namespace rigid4

#endif
