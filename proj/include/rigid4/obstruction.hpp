#ifndef RIGID4_OBSTRUCTION_HPP
#define RIGID4_OBSTRUCTION_HPP

#include <optional>
#include <set>

#include "rigid4/construct.hpp"

namespace rigid4 {

struct CocycleData {
  CycMatrix x_sigma;  // intertwiner, first nonzero coordinate normalized to 1
  CycElt mu_raw;      // X_sigma * X_sigma^sigma = mu * I
  long sigma;         // the Galois exponent used
};

// Finds a Galois element t that fixes the trace field (the coefficients of
// q0, q1, qinf) and swaps a1 <-> a2; returns nothing when a1 is already in
// the trace field (sigma trivial).
std::optional<long> find_swap_sigma(const GIISpectra& s);

// Solves T_s X = X T_s^sigma for all three local monodromies of an
// integral-form triple. Rigidity makes the solution space 1-dimensional;
// any other dimension is reported as an error.
CocycleData galois_twist_matrix(const MonodromyTriple& triple, long sigma);

// Squarefree part of num*den, sign preserved.
Int squarefree_part(const Rat& q);

// Canonical representative of mu modulo norms from Q(sqrt(D)): squarefree,
// with the prime divisors that are norms (p = -disc-split primes) removed.
// For D = -3 these are 3 and p = 1 mod 3; for D = -4, 2 and p = 1 mod 4.
Int norm_class_representative(const Int& squarefree_mu, long disc);

struct MuInvariant {
  CycElt raw;                 // -(a1 s2)^3 w2(qinf)(a1^{-1} s2^{-1})
  std::optional<Rat> rational;  // set when raw lies in Q (trace field Q)
  std::optional<Int> squarefree;
  std::optional<Int> reduced;  // norm-class representative (needs quadratic F)
};

// Closed-formula mu. Uses the unnormalized spectra (s2 = b1*b2).
MuInvariant mu_invariant(const GIISpectra& s);

// Fundamental discriminant of Q(a1) for quadratic a1; 0 when a1 is rational
// (F = K, no quadratic extension). Throws if [Q(a1):Q] > 2.
long quadratic_disc(const std::array<Exponent, 2>& alpha);

// Places of Q: 0 encodes the infinite place, otherwise a prime.
using Place = long;
inline constexpr Place kInfinitePlace = 0;

// Classical Hilbert symbol (a,b)_v over Q.
int hilbert_symbol(const Rat& a, const Rat& b, Place v);

// Even-cardinality set of places where (D, mu) ramifies.
std::set<Place> ramified_primes(const Int& d, const Int& mu);

struct QuaternionClass {
  long disc = 0;
  Int mu;
  std::set<Place> ramified;
  bool split() const { return ramified.empty(); }
};

// Full obstruction data for spectra with trace field Q.
QuaternionClass quaternion_class(const GIISpectra& s);

}  // namespace rigid4

#endif
