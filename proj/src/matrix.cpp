#include "rigid4/matrix.hpp"

#include <cstring>

namespace rigid4 {

CycMatrix::CycMatrix(int n, long conductor)
    : n_(n), conductor_(conductor), a_(n * n, CycElt::zero(conductor)) {}

CycMatrix::CycMatrix(std::vector<std::vector<CycElt>> rows) {
  n_ = static_cast<int>(rows.size());
  conductor_ = 1;
  for (const auto& r : rows) {
    if (static_cast<int>(r.size()) != n_) throw DomainError("matrix is not square");
    for (const auto& e : r) conductor_ = lcm_long(conductor_, e.conductor());
  }
  a_.reserve(n_ * n_);
  for (auto& r : rows)
    for (auto& e : r) a_.push_back(e.lifted(conductor_));
}

CycMatrix CycMatrix::identity(int n, long conductor) {
  CycMatrix m(n, conductor);
  for (int i = 0; i < n; ++i) m.set(i, i, CycElt::one(conductor));
  return m;
}

CycMatrix CycMatrix::companion(const CycPoly& monic) {
  if (!monic.is_monic()) throw DomainError("companion matrix needs a monic polynomial");
  int n = static_cast<int>(monic.degree());
  long cond = 1;
  for (const auto& c : monic.coeffs()) cond = lcm_long(cond, c.conductor());
  CycMatrix m(n, cond);
  for (int i = 1; i < n; ++i) m.set(i, i - 1, CycElt::one(cond));
  for (int i = 0; i < n; ++i) m.set(i, n - 1, -monic.coeff(i).lifted(cond));
  return m;
}

void CycMatrix::set(int i, int j, const CycElt& v) {
  if (v.conductor() == conductor_) {
    a_[i * n_ + j] = v;
    return;
  }
  long m = lcm_long(conductor_, v.conductor());
  if (m != conductor_) {
    for (auto& e : a_) e = e.lifted(m);
    conductor_ = m;
  }
  a_[i * n_ + j] = v.lifted(m);
}

CycMatrix CycMatrix::lifted(long conductor) const {
  CycMatrix m(n_, conductor);
  for (int i = 0; i < n_ * n_; ++i) m.a_[i] = a_[i].lifted(conductor);
  return m;
}

long CycMatrix::align(CycMatrix& a, CycMatrix& b) {
  long m = lcm_long(a.conductor_, b.conductor_);
  if (a.conductor_ != m) a = a.lifted(m);
  if (b.conductor_ != m) b = b.lifted(m);
  return m;
}

CycMatrix CycMatrix::operator+(const CycMatrix& o) const {
  CycMatrix a = *this, b = o;
  align(a, b);
  for (int i = 0; i < n_ * n_; ++i) a.a_[i] = a.a_[i] + b.a_[i];
  return a;
}

CycMatrix CycMatrix::operator-(const CycMatrix& o) const {
  CycMatrix a = *this, b = o;
  align(a, b);
  for (int i = 0; i < n_ * n_; ++i) a.a_[i] = a.a_[i] - b.a_[i];
  return a;
}

CycMatrix CycMatrix::operator*(const CycMatrix& o) const {
  if (n_ != o.n_) throw DomainError("matrix dimension mismatch");
  CycMatrix a = *this, b = o;
  long m = align(a, b);
  CycMatrix r(n_, m);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      const CycElt& aik = a.a_[i * n_ + k];
      if (aik.is_zero()) continue;
      for (int j = 0; j < n_; ++j) {
        const CycElt& bkj = b.a_[k * n_ + j];
        if (!bkj.is_zero()) r.a_[i * n_ + j] = r.a_[i * n_ + j] + aik * bkj;
      }
    }
  return r;
}

CycMatrix CycMatrix::operator*(const CycElt& s) const {
  CycMatrix r = *this;
  for (auto& e : r.a_) e = e * s;
  return r;
}

bool CycMatrix::operator==(const CycMatrix& o) const {
  if (n_ != o.n_) return false;
  CycMatrix a = *this, b = o;
  align(a, b);
  return a.a_ == b.a_;
}

CycMatrix CycMatrix::transpose() const {
  CycMatrix r(n_, conductor_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r.a_[j * n_ + i] = a_[i * n_ + j];
  return r;
}

CycMatrix CycMatrix::conj_transpose() const { return transpose().galois(conductor_ - 1 + (conductor_ == 1)); }

CycMatrix CycMatrix::galois(long t) const {
  CycMatrix r(n_, conductor_);
  for (int i = 0; i < n_ * n_; ++i) r.a_[i] = a_[i].galois(t);
  return r;
}

CycElt CycMatrix::trace() const {
  CycElt t = CycElt::zero(conductor_);
  for (int i = 0; i < n_; ++i) t = t + at(i, i);
  return t;
}

CycPoly CycMatrix::charpoly() const {
  // Faddeev-LeVerrier: M_1 = A, c_1 = -tr M_1, M_{k} = A(M_{k-1}+c_{k-1}I),
  // c_k = -tr(M_k)/k.
  std::vector<CycElt> cs(n_ + 1, CycElt::zero(conductor_));
  cs[n_] = CycElt::one(conductor_);
  CycMatrix M = *this;
  CycElt c = -M.trace();
  cs[n_ - 1] = c;
  for (int k = 2; k <= n_; ++k) {
    CycMatrix Mk = M;
    for (int i = 0; i < n_; ++i) Mk.set(i, i, Mk.at(i, i) + c);
    M = *this * Mk;
    c = -(M.trace() * rat(1, k));
    cs[n_ - k] = c;
  }
  return CycPoly(std::move(cs));
}

CycElt CycMatrix::det() const {
  CycPoly p = charpoly();
  CycElt c0 = p.coeff(0);
  return (n_ % 2 == 0) ? c0 : -c0;
}

CycMatrix CycMatrix::inverse() const {
  // Gauss-Jordan with exact pivoting.
  CycMatrix a = *this;
  CycMatrix inv = identity(n_, conductor_);
  for (int col = 0; col < n_; ++col) {
    int piv = -1;
    for (int i = col; i < n_; ++i)
      if (!a.at(i, col).is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) throw DomainError("matrix is singular");
    if (piv != col) {
      for (int j = 0; j < n_; ++j) {
        std::swap(a.a_[piv * n_ + j], a.a_[col * n_ + j]);
        std::swap(inv.a_[piv * n_ + j], inv.a_[col * n_ + j]);
      }
    }
    CycElt s = a.at(col, col).inverse();
    for (int j = 0; j < n_; ++j) {
      a.a_[col * n_ + j] = a.a_[col * n_ + j] * s;
      inv.a_[col * n_ + j] = inv.a_[col * n_ + j] * s;
    }
    for (int i = 0; i < n_; ++i) {
      if (i == col || a.at(i, col).is_zero()) continue;
      CycElt f = a.at(i, col);
      for (int j = 0; j < n_; ++j) {
        a.a_[i * n_ + j] = a.a_[i * n_ + j] - f * a.a_[col * n_ + j];
        inv.a_[i * n_ + j] = inv.a_[i * n_ + j] - f * inv.a_[col * n_ + j];
      }
    }
  }
  return inv;
}

bool CycMatrix::is_identity() const { return *this == identity(n_, conductor_); }

bool CycMatrix::is_scalar() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if (i != j && !at(i, j).is_zero()) return false;
  for (int i = 1; i < n_; ++i)
    if (at(i, i) != at(0, 0)) return false;
  return true;
}

CycMatrix CycMatrix::exterior_square() const {
  std::vector<std::pair<int, int>> idx;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) idx.emplace_back(i, j);
  int m = static_cast<int>(idx.size());
  CycMatrix r(m, conductor_);
  for (int a = 0; a < m; ++a) {
    auto [i, j] = idx[a];
    for (int b = 0; b < m; ++b) {
      auto [k, l] = idx[b];
      r.a_[a * m + b] = at(i, k) * at(j, l) - at(i, l) * at(j, k);
    }
  }
  return r;
}

namespace {

void append_mpz(std::string& out, const mpz_class& z) {
  int sign = mpz_sgn(z.get_mpz_t());
  size_t count = 0;
  std::vector<unsigned char> buf;
  if (sign != 0) {
    buf.resize((mpz_sizeinbase(z.get_mpz_t(), 2) + 7) / 8);
    mpz_export(buf.data(), &count, 1, 1, 1, 0, z.get_mpz_t());
  }
  out.push_back(static_cast<char>(sign + 1));
  uint32_t len = static_cast<uint32_t>(count);
  out.append(reinterpret_cast<const char*>(&len), 4);
  out.append(reinterpret_cast<const char*>(buf.data()), count);
}

size_t read_mpz(const std::string& in, size_t pos, mpz_class& z) {
  int sign = static_cast<int>(in[pos]) - 1;
  uint32_t len;
  std::memcpy(&len, in.data() + pos + 1, 4);
  pos += 5;
  if (len == 0) {
    z = 0;
  } else {
    mpz_import(z.get_mpz_t(), len, 1, 1, 1, 0, in.data() + pos);
    if (sign < 0) z = -z;
  }
  return pos + len;
}

}  // namespace

std::string CycMatrix::canonical_key() const {
  std::string out;
  uint32_t hdr[2] = {static_cast<uint32_t>(n_), static_cast<uint32_t>(conductor_)};
  out.append(reinterpret_cast<const char*>(hdr), 8);
  for (const auto& e : a_)
    for (const auto& q : e.coeffs()) {
      append_mpz(out, q.get_num());
      append_mpz(out, q.get_den());
    }
  return out;
}

CycMatrix CycMatrix::from_canonical_key(const std::string& key) {
  uint32_t hdr[2];
  std::memcpy(hdr, key.data(), 8);
  int n = static_cast<int>(hdr[0]);
  long cond = static_cast<long>(hdr[1]);
  long phi = euler_phi(cond);
  CycMatrix m(n, cond);
  size_t pos = 8;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      std::vector<Rat> c(phi);
      for (long k = 0; k < phi; ++k) {
        mpz_class num, den;
        pos = read_mpz(key, pos, num);
        pos = read_mpz(key, pos, den);
        c[k] = Rat(num, den);
      }
      m.a_[i * n + j] = CycElt(cond, std::move(c));
    }
  return m;
}

}  // namespace rigid4
