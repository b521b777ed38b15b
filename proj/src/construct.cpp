#include "rigid4/construct.hpp"

#include <algorithm>

namespace rigid4 {

long GIISpectra::conductor() const {
  long n = 1;
  for (const auto& e : alpha) n = lcm_long(n, e.den());
  for (const auto& e : beta) n = lcm_long(n, e.den());
  for (const auto& e : gamma) n = lcm_long(n, e.den());
  return n;
}

Exponent GIISpectra::b() const {
  if (!normalized()) throw DomainError("spectra not normalized");
  return beta[1];
}

GIISpectra GIISpectra::twisted(long t) const {
  GIISpectra r;
  for (int i = 0; i < 2; ++i) r.alpha[i] = alpha[i].times(t);
  for (int i = 0; i < 2; ++i) r.beta[i] = beta[i].times(t);
  for (int i = 0; i < 4; ++i) r.gamma[i] = gamma[i].times(t);
  return r.sorted();
}

GIISpectra GIISpectra::sorted() const {
  GIISpectra r = *this;
  std::sort(r.alpha.begin(), r.alpha.end());
  std::sort(r.beta.begin(), r.beta.end());
  std::sort(r.gamma.begin(), r.gamma.end());
  return r;
}

bool GIISpectra::operator==(const GIISpectra& o) const {
  return alpha == o.alpha && beta == o.beta && gamma == o.gamma;
}

GIISpectra validate_spectra(const std::array<Exponent, 2>& alpha,
                            const std::array<Exponent, 2>& beta,
                            const std::array<Exponent, 4>& gamma) {
  if (alpha[0] == alpha[1]) throw DomainError("alpha1 = alpha2 violates genericity");
  if (alpha[0].is_zero() || alpha[1].is_zero())
    throw DomainError("alpha_i = 0 collides with the double eigenvalue of T0");
  if (beta[0] == beta[1]) throw DomainError("beta1 = beta2 violates genericity");
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (gamma[i] == gamma[j]) throw DomainError("gamma_i coincide");
  Rat sum = alpha[0].value() + alpha[1].value() + 2 * beta[0].value() + 2 * beta[1].value();
  for (const auto& g : gamma) sum += g.value();
  if (!is_integer(sum))
    throw DomainError("determinant condition fails: exponent sum " + rat_to_string(sum) +
                      " is not an integer");
  GIISpectra s{alpha, beta, gamma};
  return s;
}

std::pair<GIISpectra, TwistRecord> normalize_twist(const GIISpectra& s) {
  TwistRecord rec{-s.beta[0], s.beta[0]};
  return {apply_twist(s, rec), rec};
}

GIISpectra apply_twist(const GIISpectra& s, const TwistRecord& t) {
  GIISpectra r = s;
  for (auto& e : r.beta) e = e + t.t1_shift;
  for (auto& e : r.gamma) e = e + t.tinf_shift;
  std::sort(r.beta.begin(), r.beta.end());
  std::sort(r.gamma.begin(), r.gamma.end());
  return r;
}

namespace {

struct UnitCircle {
  long n;  // conductor
  CycElt a1, a2, b1, b2;
  std::array<CycElt, 4> c;
  CycElt s1, s2;              // elementary symmetric in b1, b2
  std::array<CycElt, 4> tau;  // e_1..e_4 of the c's
};

UnitCircle units(const GIISpectra& s) {
  UnitCircle u;
  u.n = s.conductor();
  u.a1 = CycElt::root_of_unity(s.alpha[0], u.n);
  u.a2 = CycElt::root_of_unity(s.alpha[1], u.n);
  u.b1 = CycElt::root_of_unity(s.beta[0], u.n);
  u.b2 = CycElt::root_of_unity(s.beta[1], u.n);
  for (int i = 0; i < 4; ++i) u.c[i] = CycElt::root_of_unity(s.gamma[i], u.n);
  u.s1 = u.b1 + u.b2;
  u.s2 = u.b1 * u.b2;
  u.tau[0] = u.c[0] + u.c[1] + u.c[2] + u.c[3];
  u.tau[1] = CycElt::zero(u.n);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) u.tau[1] = u.tau[1] + u.c[i] * u.c[j];
  u.tau[2] = CycElt::zero(u.n);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      for (int k = j + 1; k < 4; ++k) u.tau[2] = u.tau[2] + u.c[i] * u.c[j] * u.c[k];
  u.tau[3] = u.c[0] * u.c[1] * u.c[2] * u.c[3];
  return u;
}

// Divided difference of f(z) = z^2 * q_inf(1/z) through u and v, with the
// tangent value 2u*q(1/u) - q'(1/u) on the diagonal.
CycElt qinf_divdiff(const CycPoly& qinf, const CycElt& u, const CycElt& v) {
  CycElt ui = u.inverse(), vi = v.inverse();
  if (u == v) {
    const CycPoly dq = qinf.derivative();
    return u * qinf.eval(ui) * Rat(2) - dq.eval(ui);
  }
  return (u * u * qinf.eval(ui) - v * v * qinf.eval(vi)) / (u - v);
}

}  // namespace

CycPoly q_poly(const GIISpectra& s, int point) {
  UnitCircle u = units(s);
  const CycElt one = CycElt::one(u.n);
  switch (point) {
    case 0:
      return CycPoly::from_roots({one, one, u.a1, u.a2});
    case 1:
      return CycPoly::from_roots({u.b1, u.b1, u.b2, u.b2});
    case 2:
      return CycPoly::from_roots({u.c[0], u.c[1], u.c[2], u.c[3]});
    default:
      throw DomainError("point must be 0, 1 or 2 (= infinity)");
  }
}

GoursatParams goursat_params(const GIISpectra& s) {
  if (!s.normalized()) throw DomainError("goursat_params requires normalized spectra");
  UnitCircle u = units(s);
  const CycElt one = CycElt::one(u.n);
  const CycElt b = u.b2;  // normalized: b1 = 1
  if (b.is_one() || u.a1.is_one() || u.a2.is_one() || u.a1 == u.a2)
    throw DomainError("goursat_params denominator vanishes (b = 1 or a_i = 1 or a1 = a2)");
  CycPoly qinf = q_poly(s, 2);

  CycElt A = qinf_divdiff(qinf, u.a1, b) * (b * b * u.a1 * u.a1 * u.a2) /
             ((b - one) * (u.a1 - one) * (u.a2 - u.a1));
  CycElt D = qinf_divdiff(qinf, u.a2, b) * (b * b * u.a1 * u.a2 * u.a2) /
             ((b - one) * (u.a2 - one) * (u.a1 - u.a2));
  CycElt ad_minus_bc = b * b * qinf.eval(b.inverse()) * (b * b * u.a1 * u.a2) /
                       ((b - one) * (b - one) * (u.a1 - one) * (u.a2 - one));
  GoursatParams p;
  p.A = A;
  p.D = D;
  p.BC = A * D - ad_minus_bc;
  p.B = p.BC;                // gauge: only the product BC is determined;
  p.C = CycElt::one(u.n);    // we fix C = 1, B = BC
  if (!ad_minus_bc.is_zero()) p.E = (A + D - one) / ad_minus_bc;
  return p;
}

DetFactors detfactor_params(const GIISpectra& s) {
  if (!s.normalized()) throw DomainError("detfactor_params requires normalized spectra");
  UnitCircle u = units(s);
  const CycElt one = CycElt::one(u.n);
  const CycElt b = u.b2;
  if (b.is_one() || u.a1.is_one() || u.a2.is_one() || u.a1 == u.a2)
    throw DomainError("detfactor_params denominator vanishes");
  CycElt den = (one - b) * (one - b) * (one - u.a1) * (one - u.a2);

  DetFactors f;
  CycElt prod = u.a1 * u.a2;
  for (int i = 0; i < 4; ++i) prod = prod * (one - b * u.c[i]);
  f.ad_minus_bc = prod / den;

  CycElt pairs = b * u.a2 * u.a2 * u.a2;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) pairs = pairs * (one - u.a1 * b * u.c[i] * u.c[j]);
  f.bc = pairs / ((u.a1 - u.a2) * (u.a1 - u.a2) * den);

  CycElt ones = one;
  for (int i = 0; i < 4; ++i) ones = ones * (one - u.c[i]);
  f.ad_minus_bc_minus_a_minus_d_plus_1 = ones / (u.tau[3] * den);
  return f;
}

MonodromyTriple goursat_triple(const GIISpectra& s) {
  if (!s.normalized()) throw DomainError("goursat_triple requires normalized spectra");
  GoursatParams p = goursat_params(s);
  if (p.BC.is_zero())
    throw DomainError("goursat_triple: BC = 0 (reducible); the normal-form gauge degenerates");
  UnitCircle u = units(s);
  const long n = u.n;
  const CycElt one = CycElt::one(n), zero = CycElt::zero(n);
  const CycElt b = u.b2;

  CycMatrix T0({{one, zero, p.A * (one - u.a1), p.B * (one - u.a2)},
                {zero, one, p.C * (one - u.a1), p.D * (one - u.a2)},
                {zero, zero, u.a1, zero},
                {zero, zero, zero, u.a2}});
  CycMatrix T1({{b, zero, zero, zero},
                {zero, b, zero, zero},
                {one - b, zero, one, zero},
                {zero, one - b, zero, one}});
  CycMatrix Tinf = (T0 * T1).inverse();
  MonodromyTriple t{T0, T1, Tinf, TripleFlavor::goursat_form};
  if (t.Tinf.charpoly() != q_poly(s, 2))
    throw DomainError("goursat_triple: characteristic polynomial mismatch");
  return t;
}

MonodromyTriple integral_triple(const GIISpectra& s) {
  UnitCircle u = units(s);
  const long n = u.n;
  const CycElt one = CycElt::one(n), zero = CycElt::zero(n);
  const CycElt s1 = u.s1, s2 = u.s2, a1 = u.a1, a2 = u.a2;
  const CycElt s2i = s2.inverse(), a1i = a1.inverse();
  const CycElt t1 = u.tau[0], t2 = u.tau[1], t3 = u.tau[2], t4 = u.tau[3];

  // T1 printed in the source has three sign errors in its sigma_1 terms;
  // the entries below satisfy T0*T1*Tinf = I and the charpoly contracts
  // for all spectra (and reduce to the printed zeta_12 example).
  CycMatrix T1({{s1, zero, zero, s2i * a1i},
                {-s2 * (a1 + one), s1, one, -s1 * s2i * a1i},
                {s1 * s2 * a1, -s2, zero, one + a1i},
                {-s2 * s2 * a1, zero, zero, zero}});
  CycMatrix Tinf({{zero, zero, zero, -t4},
                  {one, zero, zero, t3},
                  {zero, one, zero, -t2},
                  {zero, zero, one, t1}});
  CycMatrix T0({{a1 + one, zero, -s2i, a2 * (s1 * t4 - t3)},
                {-s1 * a1, one, s1 * s2i, a2 * (t2 - s2 * t4) - s2i},
                {s2 * a1, zero, zero, -a2 * t1 + s1 * s2i},
                {zero, zero, zero, a2}});
  MonodromyTriple t{T0, T1, Tinf, TripleFlavor::integral_form};
  if (!(T0 * T1 * Tinf).is_identity())
    throw DomainError("integral_triple: product identity violated");
  return t;
}

CycPoly w2_poly(const CycPoly& q) {
  if (!q.is_monic()) throw DomainError("w2_poly requires a monic polynomial");
  return CycMatrix::companion(q).exterior_square().charpoly();
}

ReducibilityWitness is_irreducible(const GIISpectra& s) {
  if (!s.normalized()) throw DomainError("is_irreducible requires normalized spectra");
  ReducibilityWitness w;
  const Exponent b = s.beta[1];
  for (int i = 0; i < 4; ++i)
    if (s.gamma[i].is_zero()) {
      w.kind = ReducibilityKind::qinf_at_one;
      w.indices = {i};
      return w;
    }
  for (int i = 0; i < 4; ++i)
    if ((s.gamma[i] + b).is_zero()) {
      w.kind = ReducibilityKind::qinf_at_binv;
      w.indices = {i};
      return w;
    }
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if ((s.gamma[i] + s.gamma[j] + s.alpha[0] + b).is_zero()) {
        w.kind = ReducibilityKind::w2_at_a1inv_binv;
        w.indices = {i, j};
        return w;
      }
  return w;
}

}  // namespace rigid4
