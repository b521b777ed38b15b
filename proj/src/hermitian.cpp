#include "rigid4/hermitian.hpp"

#include <numeric>
#include <thread>

#include "rigid4/ball.hpp"

namespace rigid4 {

const char* to_string(Definiteness d) {
  switch (d) {
    case Definiteness::positive: return "positive";
    case Definiteness::negative: return "negative";
    case Definiteness::indefinite: return "indefinite";
    default: return "degenerate";
  }
}

CycMatrix hermitian_matrix(const GoursatParams& p) {
  if (!p.A.is_real() || !p.D.is_real() || !p.BC.is_real())
    throw DomainError("hermitian_matrix requires real A, D, BC");
  const CycElt &A = p.A, &D = p.D, &B = p.B, &C = p.C, &BC = p.BC;
  CycElt adbc = p.ad_minus_bc();
  if (adbc.is_zero()) throw DomainError("hermitian_matrix: AD - BC = 0");
  CycElt E = (A + D - CycElt::one()) / adbc;
  const CycElt one = CycElt::one();
  CycMatrix H({{C * (one - D * E), BC * E, C * (one - D), BC},
               {BC * E, B * (one - A * E), BC, B * (one - A)},
               {C * (one - D), BC, C * (one - D), BC},
               {BC, B * (one - A), BC, B * (one - A)}});
  return H * adbc;
}

std::pair<int, int> signature(const CycMatrix& h) {
  CycPoly p = h.charpoly();
  const int n = h.dim();
  std::vector<int> sign_seq;
  sign_seq.reserve(n + 1);
  for (long i = 0; i <= p.degree(); ++i) sign_seq.push_back(sign_of_real(p.coeff(i)));
  auto variations = [](const std::vector<int>& seq) {
    int v = 0, prev = 0;
    for (int s : seq) {
      if (s == 0) continue;
      if (prev != 0 && s != prev) ++v;
      prev = s;
    }
    return v;
  };
  // all eigenvalues real: Descartes counts are exact
  int pos = variations(sign_seq);
  std::vector<int> neg_seq = sign_seq;
  for (size_t i = 0; i < neg_seq.size(); ++i)
    if (i % 2 == 1) neg_seq[i] = -neg_seq[i];
  int neg = variations(neg_seq);
  return {pos, neg};
}

Definiteness param_definite(const GoursatParams& p) {
  const CycElt one = CycElt::one();
  CycElt adbc = p.ad_minus_bc();
  CycElt third = adbc - p.A - p.D + one;
  // det H = BC^2 * third^3 * adbc^3; any vanishing factor is a boundary case
  if (p.BC.is_zero() || adbc.is_zero() || third.is_zero()) return Definiteness::degenerate;
  int sA = sign_of_real(p.A), sA1 = sign_of_real(one - p.A);
  int sD = sign_of_real(p.D), sD1 = sign_of_real(one - p.D);
  int sBC = sign_of_real(p.BC);
  int s_ad = sign_of_real(p.A * p.D - p.BC);
  int s_11 = sign_of_real((one - p.A) * (one - p.D) - p.BC);
  if (sA > 0 && sA1 > 0 && sD > 0 && sD1 > 0 && sBC > 0 && s_ad > 0 && s_11 > 0)
    return Definiteness::positive;
  auto [np, nm] = signature(hermitian_matrix(p));
  if (np == 4) return Definiteness::positive;
  if (nm == 4) return Definiteness::negative;
  return Definiteness::indefinite;
}

namespace {

// Open arc (p, q) counterclockwise on R/Z; 1 = inside, 0 = outside,
// -1 = on an endpoint.
int arc_membership(const Rat& x, const Rat& p, const Rat& q) {
  Rat w = mod1(q - p);
  Rat d = mod1(x - p);
  if (d == 0 || d == w) return -1;
  return d < w ? 1 : 0;
}

}  // namespace

ArcCertificate arcs_definite(const GIISpectra& s) {
  if (!s.normalized()) throw DomainError("arcs_definite requires normalized spectra");
  if (!is_irreducible(s).irreducible()) throw DomainError("arcs_definite requires an irreducible system");
  ArcCertificate cert;
  const Rat u = mod1(-s.b().value());                       // exponent of b^{-1}
  const Rat v1 = mod1(u - s.alpha[0].value());              // b^{-1} a1^{-1}
  const Rat v2 = mod1(u - s.alpha[1].value());              // b^{-1} a2^{-1}
  // I2: whichever arc between v1 and v2 contains b^{-1}
  int m = arc_membership(u, v1, v2);
  if (m < 0) {
    cert.verdict = ArcVerdict::degenerate;
    return cert;
  }
  const Rat i2p = m ? v1 : v2, i2q = m ? v2 : v1;
  std::array<Rat, 4> g;
  for (int i = 0; i < 4; ++i) g[i] = s.gamma[i].value();

  bool saw_endpoint = false;
  for (int arc = 0; arc < 2; ++arc) {
    const Rat i1p = arc == 0 ? Rat(0) : u;
    const Rat i1q = arc == 0 ? u : Rat(0);
    std::array<int, 4> mem;
    bool ep = false;
    for (int i = 0; i < 4; ++i) {
      mem[i] = arc_membership(g[i], i1p, i1q);
      if (mem[i] < 0) ep = true;
    }
    if (ep) {
      saw_endpoint = true;
      continue;
    }
    std::vector<int> ins, outs;
    for (int i = 0; i < 4; ++i) (mem[i] ? ins : outs).push_back(i);
    if (ins.size() != 2) continue;
    auto pair_mem = [&](int i, int j) { return arc_membership(mod1(g[i] + g[j]), i2p, i2q); };
    int m12 = pair_mem(ins[0], ins[1]), m34 = pair_mem(outs[0], outs[1]);
    if (m12 < 0 || m34 < 0) {
      saw_endpoint = true;
      continue;
    }
    if (!m12 || !m34) continue;
    for (int swap = 0; swap < 2; ++swap) {
      int c3 = outs[swap], c4 = outs[1 - swap];
      int m13 = pair_mem(ins[0], c3), m24 = pair_mem(ins[1], c4);
      int m14 = pair_mem(ins[0], c4), m23 = pair_mem(ins[1], c3);
      if (m13 < 0 || m24 < 0 || m14 < 0 || m23 < 0) {
        saw_endpoint = true;
        continue;
      }
      if (m13 && m24 && !m14 && !m23) {
        cert.verdict = ArcVerdict::definite;
        cert.labeling = {ins[0], ins[1], c3, c4};
        cert.i1_arc = arc;
        return cert;
      }
    }
  }
  cert.verdict = saw_endpoint ? ArcVerdict::degenerate : ArcVerdict::not_definite;
  return cert;
}

std::pair<int, int> special_counts(const Exponent& alpha1,
                                   const std::array<Exponent, 4>& gamma) {
  const Rat a = alpha1.value();
  if (!(a > 0 && a < rat(1, 2)))
    throw DomainError("special_counts requires alpha1 in (0, 1/2)");
  int n1 = 0;
  for (const auto& g : gamma) {
    const Rat x = g.value();
    if (x == 0 || x == rat(1, 2)) throw DomainError("special_counts: gamma on a boundary point");
    if (x < rat(1, 2)) ++n1;
  }
  const Rat lo = rat(1, 2) - a, hi = rat(1, 2) + a;
  int n2 = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      const Rat d = mod1(gamma[i].value() + gamma[j].value());
      if (d == lo || d == hi) throw DomainError("special_counts: delta on an interval endpoint");
      if (d > lo && d < hi) ++n2;
    }
  return {n1, n2};
}

FiniteMonodromyReport finite_monodromy(const GIISpectra& s_in, int jobs) {
  GIISpectra s = s_in.normalized() ? s_in : normalize_twist(s_in).first;
  const long n = s.conductor();
  std::vector<long> twists;
  for (long t = 1; t <= n; ++t)
    if (std::gcd(t, n) == 1) twists.push_back(t);

  FiniteMonodromyReport rep;
  rep.twists.resize(twists.size());
  auto run = [&](size_t lo, size_t hi) {
    for (size_t i = lo; i < hi; ++i) {
      GIISpectra ts = s.twisted(twists[i]);
      rep.twists[i] = {twists[i], arcs_definite(ts).verdict};
    }
  };
  if (jobs <= 1 || twists.size() < 4) {
    run(0, twists.size());
  } else {
    size_t nt = std::min<size_t>(jobs, twists.size());
    std::vector<std::thread> pool;
    size_t chunk = (twists.size() + nt - 1) / nt;
    for (size_t w = 0; w < nt; ++w) {
      size_t lo = w * chunk, hi = std::min(twists.size(), lo + chunk);
      if (lo < hi) pool.emplace_back(run, lo, hi);
    }
    for (auto& th : pool) th.join();
  }
  rep.finite = true;
  for (const auto& t : rep.twists)
    if (t.verdict != ArcVerdict::definite) rep.finite = false;
  return rep;
}

}  // namespace rigid4
