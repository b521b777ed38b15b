#include "rigid4/obstruction.hpp"

#include <numeric>

namespace rigid4 {

std::optional<long> find_swap_sigma(const GIISpectra& s) {
  const long n = s.conductor();
  CycElt a1 = CycElt::root_of_unity(s.alpha[0], n);
  CycElt a2 = CycElt::root_of_unity(s.alpha[1], n);
  std::vector<CycElt> field_gens;
  for (int pt = 0; pt < 3; ++pt) {
    CycPoly q = q_poly(s, pt);
    for (const auto& c : q.coeffs()) field_gens.push_back(c);
  }
  if (a1 == a2) return std::nullopt;
  // a1 in K iff it is fixed by every K-fixing automorphism; detect via scan
  for (long t = 2; t <= n; ++t) {
    if (std::gcd(t, n) != 1) continue;
    bool fixes_k = true;
    for (const auto& g : field_gens)
      if (g.galois(t) != g) {
        fixes_k = false;
        break;
      }
    if (fixes_k && a1.galois(t) == a2) return t;
  }
  return std::nullopt;  // a1 already in the trace field
}

CocycleData galois_twist_matrix(const MonodromyTriple& triple, long sigma) {
  if (triple.flavor != TripleFlavor::integral_form)
    throw DomainError("galois_twist_matrix expects an integral-form triple");
  CycMatrix t0 = triple.T0, t1 = triple.T1, ti = triple.Tinf;
  long cond = t0.conductor();
  t1 = t1.lifted(lcm_long(cond, t1.conductor()));
  const int n = t0.dim();
  const int unknowns = n * n;

  // rows of the homogeneous system: (T X - X T^sigma)_{ij} = 0
  std::vector<std::vector<CycElt>> rows;
  for (const CycMatrix* tp : {&t0, &t1, &ti}) {
    CycMatrix t = *tp;
    CycMatrix tg = t.galois(sigma);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::vector<CycElt> row(unknowns, CycElt::zero(cond));
        for (int k = 0; k < n; ++k) {
          row[k * n + j] = row[k * n + j] + t.at(i, k);
          row[i * n + k] = row[i * n + k] - tg.at(k, j);
        }
        rows.push_back(std::move(row));
      }
  }

  // Gaussian elimination to row echelon form.
  size_t rank = 0;
  std::vector<int> pivot_col;
  for (int col = 0; col < unknowns && rank < rows.size(); ++col) {
    size_t piv = rank;
    while (piv < rows.size() && rows[piv][col].is_zero()) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    CycElt inv = rows[rank][col].inverse();
    for (int j = col; j < unknowns; ++j) rows[rank][j] = rows[rank][j] * inv;
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || rows[i][col].is_zero()) continue;
      CycElt f = rows[i][col];
      for (int j = col; j < unknowns; ++j) rows[i][j] = rows[i][j] - f * rows[rank][j];
    }
    pivot_col.push_back(col);
    ++rank;
  }
  if (unknowns - static_cast<int>(rank) != 1)
    throw DomainError("intertwiner space has dimension " +
                      std::to_string(unknowns - static_cast<int>(rank)) +
                      ", expected 1 (input not rigid?)");

  // kernel vector: free column gets 1, pivots back-substituted
  int free_col = 0;
  {
    std::vector<bool> is_pivot(unknowns, false);
    for (int c : pivot_col) is_pivot[c] = true;
    while (is_pivot[free_col]) ++free_col;
  }
  std::vector<CycElt> x(unknowns, CycElt::zero(cond));
  x[free_col] = CycElt::one(cond);
  for (size_t r = 0; r < rank; ++r)
    x[pivot_col[r]] = -rows[r][free_col];

  // normalize: first nonzero coordinate = 1
  for (int i = 0; i < unknowns; ++i)
    if (!x[i].is_zero()) {
      CycElt inv = x[i].inverse();
      for (auto& v : x) v = v * inv;
      break;
    }

  CycMatrix X(n, cond);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) X.set(i, j, x[i * n + j]);
  CycMatrix prod = X * X.galois(sigma);
  if (!prod.is_scalar()) throw DomainError("X * X^sigma is not scalar");
  return CocycleData{X, prod.at(0, 0), sigma};
}

Int squarefree_part(const Rat& q) {
  if (q == 0) throw DomainError("squarefree part of zero");
  Int n = q.get_num() * q.get_den();
  int sign = sgn(n);
  n = abs(n);
  Int out = 1;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      if (e % 2) out *= d;
    }
  }
  out *= n;
  return sign < 0 ? -out : out;
}

Int norm_class_representative(const Int& squarefree_mu, long disc) {
  if (disc != -3 && disc != -4)
    throw DomainError("norm reduction implemented for disc -3 and -4 only");
  Int n = abs(squarefree_mu);
  Int out = 1;
  for (Int d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      bool is_norm = (disc == -3) ? (d == 3 || d % 3 == 1) : (d == 2 || d % 4 == 1);
      if (!is_norm) out *= d;
    }
  }
  if (n > 1) {
    bool is_norm = (disc == -3) ? (n == 3 || n % 3 == 1) : (n == 2 || n % 4 == 1);
    if (!is_norm) out *= n;
  }
  return squarefree_mu < 0 ? -out : out;
}

MuInvariant mu_invariant(const GIISpectra& s) {
  const long n = s.conductor();
  CycElt a1 = CycElt::root_of_unity(s.alpha[0], n);
  CycElt s2 = CycElt::root_of_unity(s.beta[0] + s.beta[1], n);
  CycPoly w2 = w2_poly(q_poly(s, 2));
  CycElt a1s2 = a1 * s2;
  MuInvariant m;
  m.raw = -(a1s2 * a1s2 * a1s2) * w2.eval(a1s2.inverse());
  if (m.raw.is_rational()) {
    m.rational = m.raw.rational_value();
    if (*m.rational != 0) {
      m.squarefree = squarefree_part(*m.rational);
      if (euler_phi(s.alpha[0].den()) == 2) {
        long d = quadratic_disc(s.alpha);
        if (d == -3 || d == -4) m.reduced = norm_class_representative(*m.squarefree, d);
      }
    }
  }
  return m;
}

long quadratic_disc(const std::array<Exponent, 2>& alpha) {
  long n = alpha[0].den();
  long deg = euler_phi(n);
  if (deg == 1) return 0;  // a1 rational: F = K, no quadratic extension
  if (deg != 2) throw DomainError("a1 generates a degree-" + std::to_string(deg) +
                                  " field; not quadratic over Q");
  // phi(n) = 2: n in {3, 4, 6}; Q(zeta_3) = Q(zeta_6) = Q(sqrt(-3)), Q(i)
  return n == 4 ? -4 : -3;
}

namespace {

int legendre(const Int& a, const Int& p) {
  return mpz_legendre(Int(a % p).get_mpz_t(), p.get_mpz_t());
}

int eps2(const Int& u) { return mpz_tstbit(Int((u - 1) / 2).get_mpz_t(), 0); }
int omega2(const Int& u) { return mpz_tstbit(Int((u * u - 1) / 8).get_mpz_t(), 0); }

}  // namespace

int hilbert_symbol(const Rat& a_in, const Rat& b_in, Place v) {
  if (a_in == 0 || b_in == 0) throw DomainError("hilbert symbol of zero");
  Int a = a_in.get_num() * a_in.get_den();
  Int b = b_in.get_num() * b_in.get_den();
  if (v == kInfinitePlace) return (a < 0 && b < 0) ? -1 : 1;
  Int p(v);
  if (v < 2) throw DomainError("invalid place");
  long alpha = 0, beta = 0;
  while (a % p == 0) {
    a /= p;
    ++alpha;
  }
  while (b % p == 0) {
    b /= p;
    ++beta;
  }
  if (v == 2) {
    // (-1)^{eps(u)eps(v) + alpha*omega(v) + beta*omega(u)} with odd parts u, v
    int e = (eps2(a) & eps2(b)) ^ ((alpha & 1) & omega2(b)) ^ ((beta & 1) & omega2(a));
    return e ? -1 : 1;
  }
  int sign = 1;
  if ((alpha & 1) && (beta & 1) && ((p - 1) / 2) % 2 == 1) sign = -sign;
  if (beta & 1) sign *= legendre(a, p);
  if (alpha & 1) sign *= legendre(b, p);
  return sign;
}

std::set<Place> ramified_primes(const Int& d, const Int& mu) {
  if (d == 0 || mu == 0) throw DomainError("ramified_primes needs nonzero arguments");
  std::set<Place> candidates = {kInfinitePlace, 2};
  auto add_primes = [&](Int n) {
    n = abs(n);
    for (Int p = 2; p * p <= n; ++p)
      if (n % p == 0) {
        candidates.insert(p.get_si());
        while (n % p == 0) n /= p;
      }
    if (n > 1) candidates.insert(n.get_si());
  };
  add_primes(d);
  add_primes(mu);
  std::set<Place> out;
  for (Place v : candidates)
    if (hilbert_symbol(Rat(d), Rat(mu), v) == -1) out.insert(v);
  if (out.size() % 2 != 0) throw DomainError("odd number of ramified places (bug)");
  return out;
}

QuaternionClass quaternion_class(const GIISpectra& s) {
  QuaternionClass q;
  q.disc = quadratic_disc(s.alpha);
  MuInvariant m = mu_invariant(s);
  if (!m.rational) throw DomainError("quaternion_class: trace field is not Q");
  if (q.disc == 0) {
    q.mu = m.squarefree ? *m.squarefree : Int(1);
    return q;  // F = K: split/degenerate, no obstruction
  }
  q.mu = m.reduced ? *m.reduced : *m.squarefree;
  if (q.mu != 1) q.ramified = ramified_primes(Int(q.disc), q.mu);
  return q;
}

}  // namespace rigid4
