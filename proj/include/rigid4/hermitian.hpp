#ifndef RIGID4_HERMITIAN_HPP
#define RIGID4_HERMITIAN_HPP

#include "rigid4/construct.hpp"

namespace rigid4 {

enum class Definiteness { positive, negative, indefinite, degenerate };

const char* to_string(Definiteness d);

// The invariant Hermitian matrix of the normal form, scaled by (AD-BC).
// Requires real A, D, BC (inversion-closed spectra); entries are then fixed
// by conjugation and H equals its conjugate transpose.
CycMatrix hermitian_matrix(const GoursatParams& p);

// Signature (n_plus, n_minus) of a real symmetric cyclotomic matrix via
// Descartes sign counting on its characteristic polynomial (all roots real).
// n_plus + n_minus < dim iff the matrix is singular.
std::pair<int, int> signature(const CycMatrix& h);

// Parameter-inequality criterion: positive iff 0 < A,D < 1, 0 < BC < AD and
// BC < (1-A)(1-D); boundary cases yield degenerate, otherwise the verdict
// comes from the signature of H.
Definiteness param_definite(const GoursatParams& p);

// Same verdict straight from normalized spectra, evaluating the parameters
// as numerator/denominator pairs (no field inversions); the bulk path for
// large samples.
Definiteness param_definite(const GIISpectra& s);

enum class ArcVerdict { definite, not_definite, degenerate };

struct ArcCertificate {
  ArcVerdict verdict = ArcVerdict::not_definite;
  // On success: gamma indices in the order c1,c2,c3,c4 of the proposition
  // and which arc between 1 and b^{-1} served as I1 (0: (0,-b), 1: (-b,1)).
  std::array<int, 4> labeling{-1, -1, -1, -1};
  int i1_arc = -1;
};

// Eigenvalue-arc criterion for definiteness of H (either sign). Exact
// rational arithmetic on exponents; an eigenvalue landing on an arc
// endpoint reports degenerate. Requires s normalized and irreducible.
ArcCertificate arcs_definite(const GIISpectra& s);

// Special case q1 = (T-1)^2 (T+1)^2, q0 exponents (0,0,alpha1,1-alpha1):
// n1 = #{gamma_i in (0,1/2)},
// n2 = #{gamma_i + gamma_j (i<j) mod 1 in (1/2-alpha1, 1/2+alpha1)};
// H is definite iff (n1,n2) = (2,4).
std::pair<int, int> special_counts(const Exponent& alpha1,
                                   const std::array<Exponent, 4>& gamma);

struct TwistReport {
  long twist;
  ArcVerdict verdict;
};

struct FiniteMonodromyReport {
  bool finite = false;
  std::vector<TwistReport> twists;
};

// Finite monodromy test: H definite in every complex embedding, i.e.
// arcs_definite holds for every Galois twist t coprime to the conductor.
// jobs > 1 distributes the twist loop over that many threads.
FiniteMonodromyReport finite_monodromy(const GIISpectra& s, int jobs = 1);

}  // namespace rigid4

#endif
