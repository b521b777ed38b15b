#include "rigid4/json_io.hpp"

#include <sstream>

namespace rigid4 {

const char* kCsvHeader =
    "alpha1,alpha2,beta1,beta2,gamma1,gamma2,gamma3,gamma4,irreducible,signature,finite,mu,family";

Json to_json(const Rat& q) { return rat_to_string(q); }

Json to_json(const CycElt& e) {
  if (e.is_rational()) return rat_to_string(e.coeffs()[0]);
  Json j;
  j["conductor"] = e.conductor();
  Json c = Json::array();
  for (const auto& q : e.coeffs()) c.push_back(rat_to_string(q));
  j["coeffs"] = c;
  return j;
}

Json to_json(const CycPoly& p) {
  Json c = Json::array();
  for (long i = 0; i <= p.degree(); ++i) c.push_back(to_json(p.coeff(i)));
  return c;
}

Json to_json(const CycMatrix& m) {
  Json j;
  j["conductor"] = m.conductor();
  Json rows = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < m.dim(); ++k) {
      Json coeffs = Json::array();
      for (const auto& q : m.at(i, k).coeffs()) coeffs.push_back(rat_to_string(q));
      row.push_back(coeffs);
    }
    rows.push_back(row);
  }
  j["entries"] = rows;
  return j;
}

Json to_json(const GIISpectra& s) {
  Json j;
  j["alpha"] = {rat_to_string(s.alpha[0].value()), rat_to_string(s.alpha[1].value())};
  j["beta"] = {rat_to_string(s.beta[0].value()), rat_to_string(s.beta[1].value())};
  Json g = Json::array();
  for (const auto& e : s.gamma) g.push_back(rat_to_string(e.value()));
  j["gamma"] = g;
  return j;
}

Json to_json(const MonodromyTriple& t) {
  Json j;
  j["flavor"] = t.flavor == TripleFlavor::goursat_form ? "goursat" : "integral";
  j["T0"] = to_json(t.T0);
  j["T1"] = to_json(t.T1);
  j["Tinf"] = to_json(t.Tinf);
  return j;
}

Json to_json(const LinearOperator& op) {
  Json j;
  Json c = Json::array();
  for (const auto& p : op.p) c.push_back(to_json(p));
  j["coefficients"] = c;
  return j;
}

Json to_json(const PowerSeries& s) {
  Json j;
  j["order"] = s.order();
  Json c = Json::array();
  for (long i = 0; i <= s.order(); ++i) c.push_back(to_json(s.coeff(i)));
  j["coeffs"] = c;
  return j;
}

Json to_json(const SearchHit& h) {
  Json j = to_json(h.spectra);
  j["irreducible"] = h.irreducible;
  j["signature"] = {h.sig.first, h.sig.second};
  j["finite"] = h.finite;
  if (h.mu)
    j["mu"] = h.mu->get_str();
  else
    j["mu"] = nullptr;
  if (h.family) {
    j["family"] = {{"id", h.family->family}, {"r", rat_to_string(h.family->r)}};
  } else {
    j["family"] = nullptr;
  }
  return j;
}

Rat rat_from_json(const Json& j) {
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw DomainError("expected a rational ('p/q' string or integer)");
}

CycElt cycelt_from_json(const Json& j) {
  if (j.is_string() || j.is_number_integer()) return CycElt::from_rat(rat_from_json(j));
  if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
    throw DomainError("expected {conductor, coeffs} or a rational");
  long n = j["conductor"].get<long>();
  std::vector<Rat> c;
  for (const auto& q : j["coeffs"]) c.push_back(rat_from_json(q));
  return CycElt(n, std::move(c));
}

CycPoly cycpoly_from_json(const Json& j) {
  if (!j.is_array()) throw DomainError("expected a coefficient array");
  std::vector<CycElt> c;
  for (const auto& e : j) c.push_back(cycelt_from_json(e));
  return CycPoly(std::move(c));
}

CycMatrix cycmatrix_from_json(const Json& j) {
  long n = j.at("conductor").get<long>();
  const Json& rows = j.at("entries");
  std::vector<std::vector<CycElt>> m;
  for (const auto& row : rows) {
    std::vector<CycElt> r;
    for (const auto& entry : row) {
      if (entry.is_array()) {
        std::vector<Rat> c;
        for (const auto& q : entry) c.push_back(rat_from_json(q));
        r.push_back(CycElt(n, std::move(c)));
      } else {
        r.push_back(cycelt_from_json(entry).lifted(n));
      }
    }
    m.push_back(std::move(r));
  }
  return CycMatrix(std::move(m));
}

LinearOperator operator_from_json(const Json& j) {
  LinearOperator op;
  const Json& c = j.is_object() ? j.at("coefficients") : j;
  for (const auto& p : c) op.p.push_back(cycpoly_from_json(p));
  return op;
}

PowerSeries series_from_json(const Json& j) {
  const Json& c = j.is_object() ? j.at("coeffs") : j;
  std::vector<CycElt> v;
  for (const auto& e : c) v.push_back(cycelt_from_json(e));
  long order = j.is_object() && j.contains("order") ? j["order"].get<long>()
                                                    : static_cast<long>(v.size()) - 1;
  return PowerSeries(std::move(v), order);
}

std::string csv_row(const SearchHit& h) {
  std::ostringstream os;
  os << rat_to_string(h.spectra.alpha[0].value()) << ','
     << rat_to_string(h.spectra.alpha[1].value()) << ','
     << rat_to_string(h.spectra.beta[0].value()) << ','
     << rat_to_string(h.spectra.beta[1].value());
  for (const auto& g : h.spectra.gamma) os << ',' << rat_to_string(g.value());
  os << ',' << (h.irreducible ? "true" : "false");
  os << ",(" << h.sig.first << ' ' << h.sig.second << ')';
  os << ',' << (h.finite ? "true" : "false");
  os << ',' << (h.mu ? h.mu->get_str() : "");
  if (h.family)
    os << ",family" << h.family->family << ":r=" << rat_to_string(h.family->r);
  else
    os << ',';
  return os.str();
}

}  // namespace rigid4
