#include "rigid4/search.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <thread>

namespace rigid4 {

namespace {

// Small fraction mod 1 on int64, reduced, 0 <= num < den. Cross products go
// through 128-bit to stay exact.
struct Frac {
  long long num = 0, den = 1;

  static Frac make(long long n, long long d) {
    n %= d;
    if (n < 0) n += d;
    long long g = std::gcd(n, d);
    return Frac{n / g, d / g};
  }
  Frac plus(const Frac& o) const {
    long long g = std::gcd(den, o.den);
    long long d = den / g * o.den;
    __int128 n = static_cast<__int128>(num) * (o.den / g) +
                 static_cast<__int128>(o.num) * (den / g);
    n %= d;
    long long nn = static_cast<long long>(n);
    long long gg = std::gcd(nn, d);
    return Frac{nn / gg, d / gg};
  }
  Frac minus(const Frac& o) const { return plus(Frac{o.num == 0 ? 0 : o.den - o.num, o.den}); }
  Frac times(long long t) const {
    __int128 n = static_cast<__int128>(num) * (t % den);
    n %= den;
    if (n < 0) n += den;
    long long nn = static_cast<long long>(n);
    long long g = std::gcd(nn, den);
    return Frac{nn / g, den / g};
  }
  bool zero() const { return num == 0; }
  bool operator==(const Frac& o) const { return num == o.num && den == o.den; }
  bool operator<(const Frac& o) const {
    return static_cast<__int128>(num) * o.den < static_cast<__int128>(o.num) * den;
  }
  Rat to_rat() const { return rat(num, den); }
};

struct SpecF {
  Frac a1, a2, b;          // normalized: beta = (0, b)
  std::array<Frac, 4> g;   // sorted
};

long long conductor_of(const SpecF& s) {
  long long n = std::lcm(std::lcm(s.a1.den, s.a2.den), s.b.den);
  for (const auto& g : s.g) n = std::lcm<long long, long long>(n, g.den);
  return n;
}

bool irreducible_f(const SpecF& s) {
  for (const auto& g : s.g) {
    if (g.zero()) return false;
    if (g.plus(s.b).zero()) return false;
  }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (s.g[i].plus(s.g[j]).plus(s.a1).plus(s.b).zero()) return false;
  return true;
}

// open-arc membership (p,q) ccw; assumes no endpoint hits (guaranteed for
// irreducible spectra: every endpoint hit is one of the reducibility loci)
bool in_arc(const Frac& x, const Frac& p, const Frac& q) {
  return x.minus(p) < q.minus(p);
}

bool arcs_definite_f(const SpecF& s) {
  const Frac zero{0, 1};
  const Frac u = zero.minus(s.b);
  const Frac v1 = u.minus(s.a1), v2 = u.minus(s.a2);
  const bool fwd = in_arc(u, v1, v2);
  const Frac i2p = fwd ? v1 : v2, i2q = fwd ? v2 : v1;
  for (int arc = 0; arc < 2; ++arc) {
    const Frac p = arc ? u : zero, q = arc ? zero : u;
    int ins[2], outs[2], ni = 0, no = 0;
    for (int i = 0; i < 4; ++i) {
      if (in_arc(s.g[i], p, q)) {
        if (ni == 2) { ni = 3; break; }
        ins[ni++] = i;
      } else {
        if (no == 2) { no = 3; break; }
        outs[no++] = i;
      }
    }
    if (ni != 2 || no != 2) continue;
    auto pm = [&](int i, int j) { return in_arc(s.g[i].plus(s.g[j]), i2p, i2q); };
    if (!pm(ins[0], ins[1]) || !pm(outs[0], outs[1])) continue;
    for (int sw = 0; sw < 2; ++sw) {
      int c3 = outs[sw], c4 = outs[1 - sw];
      if (pm(ins[0], c3) && pm(ins[1], c4) && !pm(ins[0], c4) && !pm(ins[1], c3)) return true;
    }
  }
  return false;
}

SpecF sorted_spec(SpecF s) {
  if (s.a2 < s.a1) std::swap(s.a1, s.a2);
  std::sort(s.g.begin(), s.g.end());
  return s;
}

SpecF twist_f(const SpecF& s, long long t) {
  SpecF r;
  r.a1 = s.a1.times(t);
  r.a2 = s.a2.times(t);
  r.b = s.b.times(t);
  for (int i = 0; i < 4; ++i) r.g[i] = s.g[i].times(t);
  return sorted_spec(r);
}

SpecF flip_f(const SpecF& s) {
  // re-normalize with the other T1 eigenvalue scaled to 1
  SpecF r = s;
  r.b = Frac{0, 1}.minus(s.b);
  for (int i = 0; i < 4; ++i) r.g[i] = s.g[i].plus(s.b);
  return sorted_spec(r);
}

bool finite_f(const SpecF& s) {
  long long n = conductor_of(s);
  for (long long t = 1; t <= n; ++t) {
    if (std::gcd(t, n) != 1) continue;
    if (!arcs_definite_f(twist_f(s, t))) return false;
  }
  return true;
}

std::array<Frac, 7> spec_key(const SpecF& s) {
  return {s.a1, s.a2, s.b, s.g[0], s.g[1], s.g[2], s.g[3]};
}

bool key_less(const std::array<Frac, 7>& a, const std::array<Frac, 7>& b) {
  for (int i = 0; i < 7; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

SpecF canonical_f(const SpecF& s_in) {
  SpecF best = sorted_spec(s_in);
  auto bkey = spec_key(best);
  long long n = conductor_of(s_in);
  for (long long t = 1; t <= n; ++t) {
    if (std::gcd(t, n) != 1) continue;
    SpecF a = twist_f(s_in, t);
    for (int f = 0; f < 2; ++f) {
      if (f) a = flip_f(a);
      auto k = spec_key(a);
      if (key_less(k, bkey)) {
        best = a;
        bkey = k;
      }
    }
  }
  return best;
}

GIISpectra to_spectra(const SpecF& s) {
  GIISpectra r;
  r.alpha = {Exponent(s.a1.to_rat()), Exponent(s.a2.to_rat())};
  r.beta = {Exponent(), Exponent(s.b.to_rat())};
  r.gamma = {Exponent(s.g[0].to_rat()), Exponent(s.g[1].to_rat()),
             Exponent(s.g[2].to_rat()), Exponent(s.g[3].to_rat())};
  return r;
}

SpecF from_spectra(const GIISpectra& s_in) {
  GIISpectra s = s_in.normalized() ? s_in.sorted() : normalize_twist(s_in).first.sorted();
  auto f = [](const Exponent& e) {
    return Frac::make(mpz_class(e.value().get_num()).get_si(), e.den());
  };
  SpecF r;
  r.a1 = f(s.alpha[0]);
  r.a2 = f(s.alpha[1]);
  r.b = f(s.beta[1]);
  for (int i = 0; i < 4; ++i) r.g[i] = f(s.gamma[i]);
  return r;
}

std::optional<FamilyPattern> family_match_f(const SpecF& s0) {
  const Frac half{1, 2}, third{1, 3}, two_thirds{2, 3};
  std::optional<FamilyPattern> best;
  bool identity_rep = false;
  auto consider = [&](int fam, const Frac& r) {
    Rat rr = r.to_rat();
    if (!best || fam < best->family || (fam == best->family && rr < best->r))
      best = FamilyPattern{fam, rr};
  };
  long long n = conductor_of(s0);
  for (long long t = 1; t <= n; ++t) {
    if (std::gcd(t, n) != 1) continue;
    SpecF a = twist_f(s0, t);
    for (int f = 0; f < 2; ++f) {
      if (f) a = flip_f(a);
      identity_rep = (t == 1 && f == 0);
      if (!(a.b == half)) continue;
      // family 1: alpha = {1/2, r}, gamma = -r/4 + (0,1/4,1/2,3/4)
      for (int which = 0; which < 2; ++which) {
        const Frac& fixed = which ? a.a2 : a.a1;
        const Frac& r = which ? a.a1 : a.a2;
        if (!(fixed == half)) continue;
        std::array<Frac, 4> want;
        for (int k = 0; k < 4; ++k)
          want[k] = Frac{k, 4}.minus(Frac::make(r.num, r.den * 4));
        std::sort(want.begin(), want.end());
        if (want == a.g) consider(1, r);
      }
      // family 2: alpha = {1/3, 2/3}, gamma = (r, -r/3, 1/3-r/3, 2/3-r/3)
      if (a.a1 == third && a.a2 == two_thirds) {
        for (int pick = 0; pick < 4; ++pick) {
          const Frac& r = a.g[pick];
          Frac r3 = Frac::make(r.num, r.den * 3);
          std::array<Frac, 4> want = {r, Frac{0, 1}.minus(r3), third.minus(r3),
                                      two_thirds.minus(r3)};
          std::sort(want.begin(), want.end());
          if (want == a.g) consider(2, r);
        }
      }
      // the parameter as written wins over twisted recoveries
      if (identity_rep && best) return best;
    }
  }
  return best;
}

std::pair<int, int> identity_signature(const GIISpectra& s) {
  // H is defined up to a scalar, so report (max, min)
  auto [p, q] = signature(hermitian_matrix(goursat_params(s)));
  return {std::max(p, q), std::min(p, q)};
}

void fill_hit(SearchHit& h) {
  // verify and decorate a canonical representative
  h.irreducible = is_irreducible(h.spectra).irreducible();
  h.sig = identity_signature(h.spectra);
  h.finite = finite_monodromy(h.spectra).finite;
  MuInvariant m = mu_invariant(h.spectra);
  // report mu when the trace field of the *given* representative is Q
  bool traces_rational = true;
  for (int pt = 0; pt < 3 && traces_rational; ++pt) {
    CycPoly q = q_poly(h.spectra, pt);
    for (const auto& c : q.coeffs())
      if (!c.is_rational()) {
        traces_rational = false;
        break;
      }
  }
  if (traces_rational && m.squarefree) {
    long d = quadratic_disc(h.spectra.alpha);
    h.mu = (d == -3 || d == -4) ? *m.reduced : *m.squarefree;
  }
  h.family = family_match(h.spectra);
}

}  // namespace

GIISpectra canonical_spectra(const GIISpectra& s) {
  return to_spectra(canonical_f(from_spectra(s))).sorted();
}

std::optional<FamilyPattern> family_match(const GIISpectra& s) {
  return family_match_f(from_spectra(s));
}

std::vector<SearchHit> search_finite(const SearchBounds& b, int jobs) {
  if (b.max_alpha_beta_den < 2 || b.max_gamma_den < 2)
    throw DomainError("search bounds must be >= 2");

  // Farey fractions with denominator <= max_gamma_den, including 0
  std::vector<Frac> farey;
  for (long long d = 1; d <= b.max_gamma_den; ++d)
    for (long long n = 0; n < d; ++n)
      if (std::gcd(n, d) == 1) farey.push_back(Frac{n, d});
  std::sort(farey.begin(), farey.end());

  // (alpha, beta) combinations grouped by the forced gamma sum s0
  std::vector<Frac> small;
  for (long long d = 1; d <= b.max_alpha_beta_den; ++d)
    for (long long n = 1; n < d; ++n)
      if (std::gcd(n, d) == 1) small.push_back(Frac{n, d});
  std::sort(small.begin(), small.end());
  struct AB {
    Frac a1, a2, bb;
  };
  std::map<std::pair<long long, long long>, std::vector<AB>> by_s0;
  for (size_t i = 0; i < small.size(); ++i)
    for (size_t j = i + 1; j < small.size(); ++j)
      for (const Frac& bb : small) {
        Frac s0 = Frac{0, 1}.minus(small[i].plus(small[j]).plus(bb).plus(bb));
        by_s0[{s0.num, s0.den}].push_back(AB{small[i], small[j], bb});
      }
  std::vector<std::pair<Frac, std::vector<AB>>> groups;
  for (auto& [k, v] : by_s0) groups.push_back({Frac{k.first, k.second}, std::move(v)});

  auto conductor_allowed = [&](const SpecF& s) {
    if (!b.conductor_whitelist) return true;
    long long n = conductor_of(s);
    for (long w : *b.conductor_whitelist)
      if (w == n) return true;
    return false;
  };

  const size_t m = farey.size();
  std::vector<std::map<std::array<long long, 14>, SpecF>> found(std::max(1, jobs));
  auto worker = [&](int w, int nw) {
    auto& mine = found[w];
    for (size_t i = w; i < m; i += nw) {
      if (farey[i].zero()) continue;  // gamma_1 = 0 is reducible
      for (size_t j = i + 1; j < m; ++j) {
        Frac pij = farey[i].plus(farey[j]);
        for (size_t k = j + 1; k < m; ++k) {
          Frac part = pij.plus(farey[k]);
          for (const auto& [s0, abs_] : groups) {
            Frac g4 = s0.minus(part);
            if (g4.den > b.max_gamma_den) continue;
            if (!(farey[k] < g4)) continue;
            SpecF s;
            s.g = {farey[i], farey[j], farey[k], g4};
            for (const AB& ab : abs_) {
              s.a1 = ab.a1;
              s.a2 = ab.a2;
              s.b = ab.bb;
              if (!conductor_allowed(s)) continue;
              if (!irreducible_f(s)) continue;
              if (!arcs_definite_f(s)) continue;  // identity-embedding pruning
              if (!finite_f(s)) continue;
              SpecF c = canonical_f(s);
              auto key = spec_key(c);
              std::array<long long, 14> kk;
              for (int q = 0; q < 7; ++q) {
                kk[2 * q] = key[q].num;
                kk[2 * q + 1] = key[q].den;
              }
              mine.emplace(kk, c);
            }
          }
        }
      }
    }
  };
  int nw = std::max(1, jobs);
  if (nw == 1) {
    worker(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < nw; ++w) pool.emplace_back(worker, w, nw);
    for (auto& t : pool) t.join();
  }
  std::map<std::array<long long, 14>, SpecF> merged;
  for (auto& f : found) merged.merge(f);

  std::vector<SearchHit> hits;
  for (auto& [k, spec] : merged) {
    SearchHit h;
    h.spectra = to_spectra(spec);
    fill_hit(h);  // re-checks irreducibility and finiteness on the canonical form
    if (!h.irreducible || !h.finite)
      throw DomainError("search produced a hit failing its own re-check (bug)");
    hits.push_back(std::move(h));
  }
  return hits;
}

ModuliQTables search_moduli_q() {
  // Galois-stable eigenvalue multisets = products of cyclotomic polynomials.
  // q0 = (x-1)^2 * (quadratic with distinct roots != 1), q1 = (x-b1)^2(x-b2)^2
  // with {b1,b2} stable, qinf squarefree of degree 4.
  auto exps_of = [](long n) {  // exponents of the primitive n-th roots
    std::vector<Rat> v;
    for (long k = 0; k < n; ++k)
      if (std::gcd(k, n) == 1) v.push_back(rat(k, n));
    if (n == 1) v = {Rat(0)};
    return v;
  };
  std::vector<std::array<Exponent, 2>> alphas;
  for (long n : {3L, 4L, 6L}) {
    auto e = exps_of(n);
    alphas.push_back({Exponent(e[0]), Exponent(e[1])});
  }
  std::vector<std::array<Exponent, 2>> betas;
  betas.push_back({Exponent(), Exponent(rat(1, 2))});  // Phi_1 * Phi_2
  for (long n : {3L, 4L, 6L}) {
    auto e = exps_of(n);
    betas.push_back({Exponent(e[0]), Exponent(e[1])});
  }
  std::vector<std::array<Exponent, 4>> gammas;
  for (long n : {5L, 8L, 10L, 12L}) {
    auto e = exps_of(n);
    gammas.push_back({Exponent(e[0]), Exponent(e[1]), Exponent(e[2]), Exponent(e[3])});
  }
  for (auto [n1, n2] : {std::pair<long, long>{3, 4}, {3, 6}, {4, 6}}) {
    auto e1v = exps_of(n1), e2v = exps_of(n2);
    std::array<Exponent, 4> g{Exponent(e1v[0]), Exponent(e1v[1]), Exponent(e2v[0]),
                              Exponent(e2v[1])};
    std::sort(g.begin(), g.end());
    gammas.push_back(g);
  }
  for (auto [n1, n2] : {std::pair<long, long>{1, 3}, {1, 4}, {1, 6}}) {
    // Phi_1 * Phi_2 * (quadratic); always fails the determinant condition
    auto e2v = exps_of(n2);
    std::array<Exponent, 4> g{Exponent(), Exponent(rat(1, 2)), Exponent(e2v[0]),
                              Exponent(e2v[1])};
    std::sort(g.begin(), g.end());
    gammas.push_back(g);
    (void)n1;
  }

  ModuliQTables out;
  for (const auto& al : alphas)
    for (const auto& be : betas)
      for (const auto& ga : gammas) {
        GIISpectra s;
        try {
          s = validate_spectra(al, be, ga);
        } catch (const DomainError&) {
          continue;  // determinant condition (or genericity) fails
        }
        GIISpectra ns = normalize_twist(s).first.sorted();
        if (!is_irreducible(ns).irreducible()) continue;
        SearchHit h;
        h.spectra = s.sorted();
        h.irreducible = true;
        h.sig = identity_signature(ns);
        h.finite = finite_monodromy(ns).finite;
        MuInvariant m = mu_invariant(s);
        if (m.squarefree) {
          long d = quadratic_disc(s.alpha);
          h.mu = (d == -3 || d == -4) ? *m.reduced : *m.squarefree;
        }
        h.family = family_match(s);
        if (h.sig == std::pair<int, int>{2, 2})
          out.signature22.push_back(std::move(h));
        else if (h.sig == std::pair<int, int>{4, 0})
          out.signature40.push_back(std::move(h));
        else
          throw DomainError("unexpected signature (3,1) in the rational enumeration");
      }
  return out;
}

}  // namespace rigid4
