#include <doctest.h>

#include <numeric>

#include "rigid4/search.hpp"
#include "table_data.hpp"

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

}  // namespace

TEST_CASE("canonical_spectra is idempotent and twist invariant") {
  GIISpectra s = spec("1/3", "2/3", "0", "1/2", "1/30", "11/30", "19/30", "29/30");
  GIISpectra c = canonical_spectra(s);
  CHECK(canonical_spectra(c) == c);
  long n = s.conductor();
  for (long t = 1; t <= n; ++t) {
    if (std::gcd(t, n) != 1) continue;
    CHECK(canonical_spectra(s.twisted(t)) == c);
  }
  // the two normalizations of one system share a canonical form
  GIISpectra u = spec("1/3", "2/3", "1/6", "5/6", "1/5", "2/5", "3/5", "4/5");
  GIISpectra norm = normalize_twist(u).first.sorted();
  GIISpectra flip = norm;
  flip.beta[1] = -norm.beta[1];
  for (auto& g : flip.gamma) g = g + norm.beta[1];
  CHECK(canonical_spectra(norm) == canonical_spectra(flip.sorted()));
}

TEST_CASE("rows 17 and 18 of the general table share one orbit") {
  GIISpectra r17 = spec("1/2", "5/6", "0", "1/3", "1/18", "7/18", "13/18", "5/6");
  GIISpectra r18 = spec("1/2", "1/6", "0", "1/3", "5/18", "11/18", "5/6", "17/18");
  CHECK(canonical_spectra(r17) == canonical_spectra(r18));
}

TEST_CASE("family_match") {
  // family 1 at r = 1/3: gamma = -1/12 + (0, 1/4, 1/2, 3/4)
  GIISpectra f1 = spec("1/3", "1/2", "0", "1/2", "11/12", "1/6", "5/12", "2/3");
  auto m1 = family_match(f1);
  REQUIRE(m1);
  CHECK(m1->family == 1);
  CHECK(m1->r == rat(1, 3));

  // family 2 at r = 1/5: gamma = (1/5, -1/15, 4/15, 3/5)
  GIISpectra f2b = spec("1/3", "2/3", "0", "1/2", "1/5", "14/15", "4/15", "3/5");
  auto m2 = family_match(f2b);
  REQUIRE(m2);
  CHECK(m2->family == 2);
  CHECK(m2->r == rat(1, 5));

  // a sporadic case is not a family member
  CHECK(!family_match(spec("1/3", "2/3", "0", "1/2", "1/5", "2/5", "3/5", "4/5")));
  // detection works across twists and the flip
  GIISpectra tw = f2b.twisted(7);
  auto m3 = family_match(tw);
  REQUIRE(m3);
  CHECK(m3->family == 2);
}

TEST_CASE("tiny search against a brute-force oracle") {
  // independent oracle: plain quadruple loop over all gamma with
  // denominator <= 5, alpha/beta denominator <= 4
  SearchBounds b;
  b.max_alpha_beta_den = 4;
  b.max_gamma_den = 5;
  std::vector<SearchHit> fast = search_finite(b);

  std::vector<Rat> fr, small;
  for (long d = 1; d <= 5; ++d)
    for (long n = 0; n < d; ++n)
      if (std::gcd(n, d) == 1) fr.push_back(rat(n, d));
  for (long d = 2; d <= 4; ++d)
    for (long n = 1; n < d; ++n)
      if (std::gcd(n, d) == 1) small.push_back(rat(n, d));
  std::set<std::string> brute;
  for (const Rat& a1 : small)
    for (const Rat& a2 : small)
      for (const Rat& bb : small)
        for (const Rat& g1 : fr)
          for (const Rat& g2 : fr)
            for (const Rat& g3 : fr)
              for (const Rat& g4 : fr) {
                if (!(g1 < g2 && g2 < g3 && g3 < g4) || !(a1 < a2)) continue;
                GIISpectra s;
                try {
                  s = validate_spectra({Exponent(a1), Exponent(a2)},
                                       {Exponent(), Exponent(bb)},
                                       {Exponent(g1), Exponent(g2), Exponent(g3), Exponent(g4)});
                } catch (const DomainError&) {
                  continue;
                }
                if (!is_irreducible(s).irreducible()) continue;
                if (!finite_monodromy(s).finite) continue;
                GIISpectra c = canonical_spectra(s);
                brute.insert(rat_to_string(c.alpha[0].value()) + "|" +
                             rat_to_string(c.alpha[1].value()) + "|" +
                             rat_to_string(c.beta[1].value()) + "|" +
                             rat_to_string(c.gamma[0].value()) + "|" +
                             rat_to_string(c.gamma[1].value()) + "|" +
                             rat_to_string(c.gamma[2].value()) + "|" +
                             rat_to_string(c.gamma[3].value()));
              }
  std::set<std::string> got;
  for (const auto& h : fast)
    got.insert(rat_to_string(h.spectra.alpha[0].value()) + "|" +
               rat_to_string(h.spectra.alpha[1].value()) + "|" +
               rat_to_string(h.spectra.beta[1].value()) + "|" +
               rat_to_string(h.spectra.gamma[0].value()) + "|" +
               rat_to_string(h.spectra.gamma[1].value()) + "|" +
               rat_to_string(h.spectra.gamma[2].value()) + "|" +
               rat_to_string(h.spectra.gamma[3].value()));
  CHECK(got == brute);
}

TEST_CASE("search output is independent of the worker count") {
  SearchBounds b;
  b.max_alpha_beta_den = 4;
  b.max_gamma_den = 8;
  std::vector<SearchHit> one = search_finite(b, 1);
  std::vector<SearchHit> four = search_finite(b, 4);
  REQUIRE(one.size() == four.size());
  for (size_t i = 0; i < one.size(); ++i) {
    CHECK(one[i].spectra == four[i].spectra);
    CHECK(one[i].finite == four[i].finite);
  }
}

TEST_CASE("bounds monotonicity") {
  SearchBounds small_b{3, 6, std::nullopt}, big_b{4, 8, std::nullopt};
  auto key = [](const SearchHit& h) {
    std::string k;
    for (const auto& e :
         {h.spectra.alpha[0], h.spectra.alpha[1], h.spectra.beta[1], h.spectra.gamma[0],
          h.spectra.gamma[1], h.spectra.gamma[2], h.spectra.gamma[3]})
      k += rat_to_string(e.value()) + "|";
    return k;
  };
  std::set<std::string> small_set, big_set;
  for (const auto& h : search_finite(small_b)) small_set.insert(key(h));
  for (const auto& h : search_finite(big_b)) big_set.insert(key(h));
  for (const auto& k : small_set) CHECK(big_set.count(k));
}

TEST_CASE("gamma denominators up to 4 admit no primitive hit") {
  // brute force over the tiny space turns up nothing at all: the smallest
  // family members already need gamma denominator 12
  SearchBounds b;
  b.max_alpha_beta_den = 6;
  b.max_gamma_den = 4;
  CHECK(search_finite(b).empty());
}

TEST_CASE("family members are flagged, sporadic hits are not") {
  SearchBounds b;
  b.max_alpha_beta_den = 6;
  b.max_gamma_den = 12;
  std::vector<SearchHit> hits = search_finite(b);
  bool saw_family = false, saw_sporadic = false;
  for (const auto& h : hits) {
    if (h.family)
      saw_family = true;
    else
      saw_sporadic = true;
    CHECK(h.finite);
  }
  CHECK(saw_family);
  CHECK(saw_sporadic);  // e.g. the A5 case with the fifth roots of unity
}

TEST_CASE("moduli-Q enumeration row counts and mu columns") {
  ModuliQTables t = search_moduli_q();
  CHECK(t.signature22.size() == 38);
  CHECK(t.signature40.size() == 18);
  auto find_row = [&](const std::vector<SearchHit>& rows, const tabledata::RationalRow& want) {
    auto parse = [](const std::string& s) {
      std::vector<Rat> v;
      size_t pos = 0;
      while (pos <= s.size()) {
        size_t c = s.find(',', pos);
        if (c == std::string::npos) c = s.size();
        v.push_back(rat_from_string(s.substr(pos, c - pos)));
        pos = c + 1;
      }
      return v;
    };
    std::vector<Rat> a = parse(want.alpha), be = parse(want.beta), g = parse(want.gamma);
    for (const auto& h : rows) {
      if (h.spectra.alpha[0].value() == a[0] && h.spectra.alpha[1].value() == a[1] &&
          h.spectra.beta[0].value() == be[0] && h.spectra.beta[1].value() == be[1] &&
          h.spectra.gamma[0].value() == g[0] && h.spectra.gamma[1].value() == g[1] &&
          h.spectra.gamma[2].value() == g[2] && h.spectra.gamma[3].value() == g[3])
        return &h;
    }
    return static_cast<const SearchHit*>(nullptr);
  };
  for (const auto& row : tabledata::table5) {
    const SearchHit* h = find_row(t.signature22, row);
    REQUIRE(h);
    REQUIRE(h->mu);
    CHECK(*h->mu == row.mu);
  }
  for (const auto& row : tabledata::table6) {
    const SearchHit* h = find_row(t.signature40, row);
    REQUIRE(h);
    REQUIRE(h->mu);
    CHECK(*h->mu == row.mu);
  }
}
