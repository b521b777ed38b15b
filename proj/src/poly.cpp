#include "rigid4/poly.hpp"

namespace rigid4 {

CycPoly::CycPoly(std::vector<CycElt> coeffs) : c_(std::move(coeffs)) { trim(); }

void CycPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

CycPoly CycPoly::constant(const CycElt& c) { return CycPoly({c}); }

CycPoly CycPoly::x(long conductor) {
  return CycPoly({CycElt::zero(conductor), CycElt::one(conductor)});
}

CycPoly CycPoly::from_roots(const std::vector<CycElt>& roots) {
  CycPoly p = constant(CycElt::one());
  for (const auto& r : roots) p = p * CycPoly({-r, CycElt::one(r.conductor())});
  return p;
}

CycPoly CycPoly::cyclotomic(long n) {
  const auto& phi = cyclotomic_polynomial(n);
  std::vector<CycElt> c;
  c.reserve(phi.size());
  for (const auto& z : phi) c.push_back(CycElt::from_rat(Rat(z)));
  return CycPoly(std::move(c));
}

CycElt CycPoly::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(c_.size())) return CycElt::zero();
  return c_[i];
}

CycElt CycPoly::leading() const {
  if (c_.empty()) throw DomainError("zero polynomial has no leading coefficient");
  return c_.back();
}

bool CycPoly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

CycPoly CycPoly::operator+(const CycPoly& o) const {
  std::vector<CycElt> c(std::max(c_.size(), o.c_.size()));
  for (size_t i = 0; i < c.size(); ++i) {
    if (i < c_.size() && i < o.c_.size())
      c[i] = c_[i] + o.c_[i];
    else if (i < c_.size())
      c[i] = c_[i];
    else
      c[i] = o.c_[i];
  }
  return CycPoly(std::move(c));
}

CycPoly CycPoly::operator-() const {
  std::vector<CycElt> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = -c_[i];
  return CycPoly(std::move(c));
}

CycPoly CycPoly::operator-(const CycPoly& o) const { return *this + (-o); }

CycPoly CycPoly::operator*(const CycPoly& o) const {
  if (is_zero() || o.is_zero()) return CycPoly();
  std::vector<CycElt> c(c_.size() + o.c_.size() - 1, CycElt::zero());
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; j < o.c_.size(); ++j)
      if (!o.c_[j].is_zero()) c[i + j] = c[i + j] + c_[i] * o.c_[j];
  }
  return CycPoly(std::move(c));
}

CycPoly CycPoly::operator*(const CycElt& s) const {
  std::vector<CycElt> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i] * s;
  return CycPoly(std::move(c));
}

CycElt CycPoly::eval(const CycElt& x) const {
  CycElt v = CycElt::zero(x.conductor());
  for (size_t i = c_.size(); i-- > 0;) v = v * x + c_[i];
  return v;
}

CycPoly CycPoly::derivative() const {
  if (c_.size() <= 1) return CycPoly();
  std::vector<CycElt> c(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rat(static_cast<long>(i));
  return CycPoly(std::move(c));
}

CycPoly CycPoly::galois(long t) const {
  std::vector<CycElt> c(c_.size());
  for (size_t i = 0; i < c_.size(); ++i) c[i] = c_[i].galois(t);
  return CycPoly(std::move(c));
}

bool CycPoly::operator==(const CycPoly& o) const {
  if (c_.size() != o.c_.size()) return false;
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

}  // namespace rigid4
