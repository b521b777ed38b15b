#ifndef RIGID4_CONSTRUCT_HPP
#define RIGID4_CONSTRUCT_HPP

#include <array>
#include <optional>

#include "rigid4/matrix.hpp"

namespace rigid4 {

// Defining exponent data of a G-II system: T0 has eigenvalues 1,1,a1,a2;
// T1 has b1,b1,b2,b2; Tinf has c1..c4, with a_i = e(alpha_i) etc.
struct GIISpectra {
  std::array<Exponent, 2> alpha;
  std::array<Exponent, 2> beta;
  std::array<Exponent, 4> gamma;

  long conductor() const;
  bool normalized() const { return beta[0].is_zero(); }
  // b-exponent of the normalized form (beta = (0, b)).
  Exponent b() const;
  // Galois twist: every exponent multiplied by t (t coprime to conductor),
  // alpha and gamma re-sorted.
  GIISpectra twisted(long t) const;
  // Canonical ordering alpha1 < alpha2, gamma1 < ... < gamma4.
  GIISpectra sorted() const;
  bool operator==(const GIISpectra& o) const;
};

// Checks the determinant condition (exponent sum integral) and genericity
// (alpha distinct and nonzero, beta distinct, gamma pairwise distinct).
// Throws DomainError naming the violated invariant.
GIISpectra validate_spectra(const std::array<Exponent, 2>& alpha,
                            const std::array<Exponent, 2>& beta,
                            const std::array<Exponent, 4>& gamma);

struct TwistRecord {
  Exponent t1_shift;    // applied to the T1 exponents
  Exponent tinf_shift;  // applied to the Tinf exponents (= -t1_shift mod 1)
};

// Scalar twist making beta = (0, b): shifts beta by -beta1 and gamma by
// +beta1. The record allows an exact round-trip.
std::pair<GIISpectra, TwistRecord> normalize_twist(const GIISpectra& s);
GIISpectra apply_twist(const GIISpectra& s, const TwistRecord& t);

// Scalars of the Goursat normal form. In the gauge used throughout,
// C = 1 and B = BC.
struct GoursatParams {
  CycElt A, D, BC;
  CycElt B, C;
  // E*(AD-BC) = A+D-1; E is set only when AD-BC != 0.
  std::optional<CycElt> E;
  CycElt ad_minus_bc() const { return A * D - BC; }
};

// A, D, AD-BC recovered from q_inf (divided differences handle a_i = b).
// Requires s normalized; throws DomainError if b = 1, a_i = 1 or a1 = a2
// (excluded by validity anyway).
GoursatParams goursat_params(const GIISpectra& s);

// The same three quantities from the eigenvalue product factorizations;
// independent route used as a cross-oracle.
struct DetFactors {
  CycElt ad_minus_bc, bc, ad_minus_bc_minus_a_minus_d_plus_1;
};
DetFactors detfactor_params(const GIISpectra& s);

enum class TripleFlavor { goursat_form, integral_form };

struct MonodromyTriple {
  CycMatrix T0, T1, Tinf;
  TripleFlavor flavor;
  // T0*T1*Tinf == I; verified at construction.
};

// Goursat normal form (requires s normalized and BC != 0).
MonodromyTriple goursat_triple(const GIISpectra& s);

// Integral form: Tinf is the companion matrix of q_inf and the entries lie
// in Z[s1, s2, t1..t4, 1/s2, 1/t4][a1]; works on unnormalized spectra.
MonodromyTriple integral_triple(const GIISpectra& s);

// Characteristic polynomials q0, q1, qinf of the local monodromies.
CycPoly q_poly(const GIISpectra& s, int point);  // 0, 1, or 2 for infinity

// Monic polynomial whose roots are the pairwise products of the roots of q,
// computed as the characteristic polynomial of the second exterior power of
// the companion matrix (no root extraction).
CycPoly w2_poly(const CycPoly& q);

enum class ReducibilityKind {
  none,
  qinf_at_one,      // some c_i = 1: decomposition (i)
  qinf_at_binv,     // some b*c_i = 1: decomposition (ii)
  w2_at_a1inv_binv  // some a1*b*c_i*c_j = 1: decomposition (iii)
};

struct ReducibilityWitness {
  ReducibilityKind kind = ReducibilityKind::none;
  // indices into gamma realizing the decomposition: (i)/(ii): the c_{i4};
  // (iii): the pair (i1,i2) with a1*b*c_{i1}*c_{i2} = 1.
  std::vector<int> indices;
  bool irreducible() const { return kind == ReducibilityKind::none; }
};

// Irreducibility criterion BC*(AD-BC)*(AD-BC-A-D+1) != 0, evaluated on
// exponents. Requires s normalized.
ReducibilityWitness is_irreducible(const GIISpectra& s);

}  // namespace rigid4

#endif
