#include <doctest.h>

#include <random>

#include "rigid4/hermitian.hpp"

using namespace rigid4;

namespace {

GIISpectra spec(const char* a1, const char* a2, const char* b1, const char* b2,
                const char* g1, const char* g2, const char* g3, const char* g4) {
  return validate_spectra(
      {Exponent(rat_from_string(a1)), Exponent(rat_from_string(a2))},
      {Exponent(rat_from_string(b1)), Exponent(rat_from_string(b2))},
      {Exponent(rat_from_string(g1)), Exponent(rat_from_string(g2)),
       Exponent(rat_from_string(g3)), Exponent(rat_from_string(g4))});
}

GIISpectra random_spectra(std::mt19937& rng, long n, bool require_irreducible) {
  std::uniform_int_distribution<long> pick(0, n - 1);
  for (;;) {
    long a1 = pick(rng), a2 = pick(rng), b = pick(rng);
    long g1 = pick(rng), g2 = pick(rng), g3 = pick(rng);
    long g4 = (10 * n - (a1 + a2 + 2 * b + g1 + g2 + g3)) % n;
    try {
      GIISpectra s = validate_spectra(
          {Exponent(a1, n), Exponent(a2, n)}, {Exponent(0, 1), Exponent(b, n)},
          {Exponent(g1, n), Exponent(g2, n), Exponent(g3, n), Exponent(g4, n)});
      if (require_irreducible && !is_irreducible(s.sorted()).irreducible()) continue;
      return s.sorted();
    } catch (const DomainError&) {
    }
  }
}

GoursatParams rational_params(const Rat& a, const Rat& d, const Rat& bc) {
  GoursatParams p;
  p.A = CycElt::from_rat(a);
  p.D = CycElt::from_rat(d);
  p.BC = CycElt::from_rat(bc);
  p.B = p.BC;
  p.C = CycElt::one();
  return p;
}

}  // namespace

TEST_CASE("hermitian matrix invariance and determinant") {
  std::mt19937 rng(101);
  for (int trial = 0; trial < 8; ++trial) {
    GIISpectra s = random_spectra(rng, 12, true);
    GoursatParams p = goursat_params(s);
    CycMatrix H = hermitian_matrix(p);
    CHECK(H == H.conj_transpose());
    MonodromyTriple t = goursat_triple(s);
    for (const CycMatrix* m : {&t.T0, &t.T1, &t.Tinf})
      CHECK(m->conj_transpose() * H * *m == H);
    CycElt adbc = p.ad_minus_bc();
    CycElt third = adbc - p.A - p.D + CycElt::one();
    CHECK(H.det() == p.BC * p.BC * third * third * third * adbc * adbc * adbc);
  }
}

TEST_CASE("determinant identity on random rational parameters") {
  std::mt19937 rng(55);
  std::uniform_int_distribution<long> num(-5, 5), den(1, 4);
  for (int trial = 0; trial < 40; ++trial) {
    Rat a = rat(num(rng), den(rng)), d = rat(num(rng), den(rng)), bc = rat(num(rng), den(rng));
    if (a * d == bc) continue;
    GoursatParams p = rational_params(a, d, bc);
    CycMatrix H = hermitian_matrix(p);
    Rat third = a * d - bc - a - d + 1, adbc = a * d - bc;
    CHECK(H.det().rational_value() == bc * bc * third * third * third * adbc * adbc * adbc);
  }
}

TEST_CASE("param_definite") {
  CHECK(param_definite(rational_params(rat(1, 2), rat(1, 2), rat(1, 8))) ==
        Definiteness::positive);  // 0 < 1/8 < 1/4
  CHECK(param_definite(rational_params(rat(1, 2), rat(1, 2), rat(-1, 8))) !=
        Definiteness::positive);  // BC < 0
  CHECK(param_definite(rational_params(rat(1, 2), rat(1, 2), rat(1, 4))) ==
        Definiteness::degenerate);  // BC = AD
  CHECK(param_definite(rational_params(rat(1, 2), rat(1, 2), rat(3, 8))) ==
        Definiteness::indefinite);  // BC > (1-A)(1-D)
}

TEST_CASE("signature cross-checked against leading principal minors") {
  std::mt19937 rng(77);
  std::uniform_int_distribution<long> num(-4, 4), den(1, 3);
  int checked = 0;
  while (checked < 25) {
    Rat a = rat(num(rng), den(rng)), d = rat(num(rng), den(rng)), bc = rat(num(rng), den(rng));
    if (a * d == bc || bc == 0 || a * d - bc - a - d + 1 == 0) continue;
    CycMatrix H = hermitian_matrix(rational_params(a, d, bc));
    // Jacobi: when all leading principal minors are nonzero, the number of
    // sign agreements/disagreements in 1, M1, ..., M4 gives the signature
    std::vector<Rat> minors = {Rat(1)};
    bool ok = true;
    for (int k = 1; k <= 4; ++k) {
      CycMatrix sub(k, H.conductor());
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) sub.set(i, j, H.at(i, j));
      Rat mk = sub.det().rational_value();
      if (mk == 0) {
        ok = false;
        break;
      }
      minors.push_back(mk);
    }
    if (!ok) continue;
    int pos = 0, neg = 0;
    for (int k = 1; k <= 4; ++k)
      (sgn(minors[k]) == sgn(minors[k - 1]) ? pos : neg)++;
    CHECK(signature(H) == std::pair<int, int>{pos, neg});
    ++checked;
  }
}

TEST_CASE("arcs_definite fixtures") {
  // the worked definite example with alpha1 = 1/3
  GIISpectra fig = spec("1/3", "2/3", "0", "1/2", "1/28", "9/28", "3/4", "25/28");
  CHECK(arcs_definite(fig).verdict == ArcVerdict::definite);
  // Table 5 row 1: signature (2,2), not definite
  GIISpectra t5r1 = spec("1/3", "2/3", "0", "1/2", "1/4", "1/3", "2/3", "3/4");
  CHECK(arcs_definite(t5r1).verdict == ArcVerdict::not_definite);
  // Table 1 row 2: definite
  GIISpectra t1r2 = spec("1/3", "2/3", "0", "1/2", "1/5", "2/5", "3/5", "4/5");
  CHECK(arcs_definite(t1r2).verdict == ArcVerdict::definite);
  // labeling certificate: the two gammas inside I1 come first
  ArcCertificate c = arcs_definite(t1r2);
  CHECK(c.i1_arc >= 0);
  CHECK(c.labeling[0] >= 0);
}

TEST_CASE("special_counts") {
  std::array<Exponent, 4> g1{Exponent(1, 28), Exponent(9, 28), Exponent(3, 4), Exponent(25, 28)};
  CHECK(special_counts(Exponent(1, 3), g1) == std::pair<int, int>{2, 4});
  std::array<Exponent, 4> g2{Exponent(1, 4), Exponent(1, 3), Exponent(2, 3), Exponent(3, 4)};
  auto [n1, n2] = special_counts(Exponent(1, 3), g2);
  CHECK(n2 != 4);  // counted against the interval (1/6, 5/6)
  // all gammas in (0, 1/2) make n1 = 4 (not definite)
  std::array<Exponent, 4> g3{Exponent(1, 10), Exponent(1, 5), Exponent(3, 10), Exponent(2, 5)};
  CHECK(special_counts(Exponent(1, 3), g3).first == 4);
}

TEST_CASE("special counts agree with the arc criterion") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<long> pick(1, 27);
  int done = 0;
  while (done < 40) {
    // alpha = (a, 1-a) with a < 1/2, beta = (0, 1/2), random gamma summing to 1/2 mod 1
    long n = 28;
    long a = pick(rng) % 13 + 1;  // a/28 < 1/2
    long g1 = pick(rng), g2 = pick(rng), g3 = pick(rng);
    long g4 = (10 * n - (a + (n - a) + n + g1 + g2 + g3)) % n;
    try {
      GIISpectra s = validate_spectra(
          {Exponent(a, n), Exponent(n - a, n)}, {Exponent(0, 1), Exponent(1, 2)},
          {Exponent(g1, n), Exponent(g2, n), Exponent(g3, n), Exponent(g4, n)});
      s = s.sorted();
      if (!is_irreducible(s).irreducible()) continue;
      auto counts = special_counts(s.alpha[0], s.gamma);
      bool definite = arcs_definite(s).verdict == ArcVerdict::definite;
      CHECK(definite == (counts == std::pair<int, int>{2, 4}));
      ++done;
    } catch (const DomainError&) {
    }
  }
}

TEST_CASE("arcs_definite agrees with param_definite at the identity embedding") {
  std::mt19937 rng(202);
  for (long n : {12L, 15L, 24L}) {
    for (int trial = 0; trial < 15; ++trial) {
      GIISpectra s = random_spectra(rng, n, true);
      bool arcs = arcs_definite(s).verdict == ArcVerdict::definite;
      Definiteness d = param_definite(goursat_params(s));
      bool param = d == Definiteness::positive || d == Definiteness::negative;
      CHECK(arcs == param);
    }
  }
}

TEST_CASE("finite_monodromy fixtures") {
  // the first K = Q case
  GIISpectra a = spec("1/3", "2/3", "0", "1/2", "1/5", "2/5", "3/5", "4/5");
  CHECK(finite_monodromy(a).finite);
  // Table 2 row 3 (order 103680)
  GIISpectra b = spec("1/4", "3/4", "0", "1/2", "1/36", "13/36", "25/36", "11/12");
  CHECK(finite_monodromy(b).finite);
  // an indefinite-at-identity case is immediately not finite
  GIISpectra c = spec("1/3", "2/3", "0", "1/2", "1/4", "1/3", "2/3", "3/4");
  CHECK(!finite_monodromy(c).finite);
  // definite at t = 1 but not at every twist (fails at t = 5)
  GIISpectra d = spec("1/3", "2/3", "0", "1/2", "1/14", "5/14", "9/14", "13/14");
  CHECK(arcs_definite(d).verdict == ArcVerdict::definite);
  FiniteMonodromyReport rep = finite_monodromy(d);
  CHECK(!rep.finite);
  bool t5_fails = false;
  for (const auto& t : rep.twists)
    if (t.twist == 5 && t.verdict != ArcVerdict::definite) t5_fails = true;
  CHECK(t5_fails);
}

TEST_CASE("finite_monodromy is galois invariant and thread count independent") {
  GIISpectra s = spec("1/3", "2/3", "0", "1/2", "1/20", "9/20", "13/20", "17/20");
  FiniteMonodromyReport r1 = finite_monodromy(s, 1);
  FiniteMonodromyReport r4 = finite_monodromy(s, 4);
  CHECK(r1.finite == r4.finite);
  REQUIRE(r1.twists.size() == r4.twists.size());
  for (size_t i = 0; i < r1.twists.size(); ++i)
    CHECK(r1.twists[i].verdict == r4.twists[i].verdict);
  for (long t : {7L, 11L, 13L}) CHECK(finite_monodromy(s.twisted(t)).finite == r1.finite);
}

TEST_CASE("scalar twisting of the spectra leaves verdicts unchanged") {
  GIISpectra s = spec("1/3", "2/3", "1/6", "5/6", "1/5", "2/5", "3/5", "4/5");
  GIISpectra n = normalize_twist(s).first.sorted();
  // flip: normalize with the other T1 eigenvalue scaled to 1
  GIISpectra flipped = n;
  flipped.beta[1] = -n.beta[1];
  for (auto& g : flipped.gamma) g = g + n.beta[1];
  flipped = flipped.sorted();
  CHECK(finite_monodromy(n).finite == finite_monodromy(flipped).finite);
  CHECK((arcs_definite(n).verdict == ArcVerdict::definite) ==
        (arcs_definite(flipped).verdict == ArcVerdict::definite));
}
