#ifndef RIGID4_SEARCH_HPP
#define RIGID4_SEARCH_HPP

#include <optional>

#include "rigid4/hermitian.hpp"
#include "rigid4/obstruction.hpp"

namespace rigid4 {

struct SearchBounds {
  long max_alpha_beta_den = 6;
  long max_gamma_den = 30;
  std::optional<std::vector<long>> conductor_whitelist;
};

struct FamilyPattern {
  int family = 0;  // 1 or 2 (Table 8 row)
  Rat r;
};

struct SearchHit {
  GIISpectra spectra;  // canonical orbit representative, normalized
  bool irreducible = true;
  std::pair<int, int> sig{0, 0};  // signature at the identity embedding
  bool finite = false;
  std::optional<Int> mu;  // set when the trace field is Q
  std::optional<FamilyPattern> family;
};

// Canonical representative of the orbit of s under Galois twists and the
// choice of which T1 eigenvalue is scaled to 1: lexicographically least
// (alpha1, alpha2, b, gamma1..gamma4) tuple. Input may be unnormalized.
GIISpectra canonical_spectra(const GIISpectra& s);

// Membership in the two one-parameter imprimitive families, detected up to
// the canonical symmetries; recovers the parameter r exactly.
std::optional<FamilyPattern> family_match(const GIISpectra& s);

// Exhaustive search for finite-monodromy spectra within the bounds:
// validity -> irreducibility -> definiteness at the identity embedding
// (cheap pruning) -> definiteness at every Galois twist. Hits are
// deduplicated by canonical orbit and returned in deterministic order;
// output is identical for any jobs count.
std::vector<SearchHit> search_finite(const SearchBounds& b, int jobs = 1);

struct ModuliQTables {
  std::vector<SearchHit> signature22;
  std::vector<SearchHit> signature40;
};

// All irreducible G-II spectra whose local characteristic polynomials have
// rational coefficients (products of cyclotomic polynomials of the right
// shape), partitioned by the signature of H at the identity embedding.
ModuliQTables search_moduli_q();

}  // namespace rigid4

#endif
