// Command line front end: every subcommand prints exact data (rationals as
// p/q, cyclotomic numbers as coefficient vectors) as JSON or CSV.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "rigid4/ball.hpp"
#include "rigid4/group.hpp"
#include "rigid4/json_io.hpp"
#include "rigid4/stargraph.hpp"

namespace {

using namespace rigid4;

std::array<Exponent, 2> parse_pair(const std::string& s) {
  auto comma = s.find(',');
  if (comma == std::string::npos) throw DomainError("expected two comma-separated fractions");
  Rat a = rat_from_string(s.substr(0, comma)), b = rat_from_string(s.substr(comma + 1));
  if (a < 0 || a >= 1 || b < 0 || b >= 1) throw DomainError("exponents must lie in [0,1)");
  return {Exponent(a), Exponent(b)};
}

std::array<Exponent, 4> parse_quad(const std::string& s) {
  std::array<Exponent, 4> out;
  size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    size_t comma = i < 3 ? s.find(',', pos) : s.size();
    if (comma == std::string::npos) throw DomainError("expected four comma-separated fractions");
    Rat q = rat_from_string(s.substr(pos, comma - pos));
    if (q < 0 || q >= 1) throw DomainError("exponents must lie in [0,1)");
    out[i] = Exponent(q);
    pos = comma + 1;
  }
  return out;
}

std::array<Rat, 2> parse_rat_pair(const std::string& s) {
  auto p = parse_pair(s);
  return {p[0].value(), p[1].value()};
}

// gamma entries of the differential equation may leave [0,1)
std::array<Rat, 4> parse_rat_quad(const std::string& s) {
  std::array<Rat, 4> out;
  size_t pos = 0;
  for (int i = 0; i < 4; ++i) {
    size_t comma = i < 3 ? s.find(',', pos) : s.size();
    if (comma == std::string::npos) throw DomainError("expected four comma-separated fractions");
    out[i] = rat_from_string(s.substr(pos, comma - pos));
    pos = comma + 1;
  }
  return out;
}

GIISpectra spectra_from(const std::string& a, const std::string& b, const std::string& g) {
  return validate_spectra(parse_pair(a), parse_pair(b), parse_quad(g));
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open '" + path + "'");
  Json j;
  in >> j;
  return j;
}

const char* move_name(Move m) {
  switch (m) {
    case Move::A: return "A";
    case Move::B: return "B";
    default: return "C";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact arithmetic for rank-4 Goursat G-II rigid local systems"};
  app.require_subcommand(1);

  std::string alpha, beta, gamma, diagram, form = "integral", format = "json";
  std::string op_file, poly_file, series_file, point = "0";
  long terms = 12, order = 25;
  std::uint64_t cap = kDefaultGroupCap;
  long max_abd = 6, max_gd = 30;
  int jobs = 1;

  auto add_spectra = [&](CLI::App* cmd) {
    cmd->add_option("--alpha", alpha, "a1,a2 exponents of T0 (fractions in [0,1))")->required();
    cmd->add_option("--beta", beta, "b1,b2 exponents of T1")->required();
    cmd->add_option("--gamma", gamma, "c1,c2,c3,c4 exponents of Tinf")->required();
  };

  auto* rigid = app.add_subcommand("rigid", "star-graph reduction (moves A, B, C)");
  rigid->add_option("--diagram", diagram, "G-I ... G-VII or GII etc.")->required();

  auto* construct = app.add_subcommand("construct", "build a monodromy triple");
  add_spectra(construct);
  construct->add_option("--form", form, "goursat | integral")
      ->check(CLI::IsMember({"goursat", "integral"}));

  auto* irr = app.add_subcommand("irreducible", "irreducibility criterion with witness");
  add_spectra(irr);

  auto* herm = app.add_subcommand("hermitian", "invariant Hermitian form and definiteness");
  add_spectra(herm);
  herm->add_option("--jobs", jobs, "worker threads for the twist loop");

  auto* grp = app.add_subcommand("group", "enumerate the geometric monodromy group");
  add_spectra(grp);
  grp->add_option("--cap", cap, "closure size cap");

  auto* obs = app.add_subcommand("obstruction", "quaternion field-of-definition obstruction");
  add_spectra(obs);

  auto* ode = app.add_subcommand("ode", "order-4 operator and series solutions");
  ode->add_option("--alpha", alpha, "a1,a2")->required();
  ode->add_option("--gamma", gamma, "g1,g2,g3,g4 (any rationals)")->required();
  ode->add_option("--terms", terms, "series truncation order");

  auto* ind = app.add_subcommand("indicial", "indicial exponents of an operator");
  ind->add_option("--op", op_file, "operator JSON file")->required();
  ind->add_option("--at", point, "0 | 1 | inf")->check(CLI::IsMember({"0", "1", "inf"}));

  auto* ver = app.add_subcommand("verify", "check P(x, y(x)) = 0 mod x^n");
  ver->add_option("--poly", poly_file, "JSON list of x-polynomials, one per power of y")
      ->required();
  ver->add_option("--series", series_file, "series JSON file")->required();
  ver->add_option("--order", order, "truncation order n");

  auto* search = app.add_subcommand("search", "exhaustive searches");
  auto* sf = search->add_subcommand("finite", "finite-monodromy search");
  sf->add_option("--max-abd", max_abd, "max alpha/beta denominator");
  sf->add_option("--max-gd", max_gd, "max gamma denominator");
  sf->add_option("--jobs", jobs, "worker threads");
  sf->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  auto* sq = search->add_subcommand("moduli-q", "field-of-moduli-Q enumeration");
  sq->add_option("--format", format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
  search->require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*rigid) {
      StarDiagram d = StarDiagram::named(diagram);
      std::cout << "start: dmu = " << dmu(d) << "\n" << d.render() << "\n";
      ReductionOutcome out = is_rigid(d);
      for (const auto& step : out.trace)
        std::cout << "apply " << move_name(step.move) << ":\n" << step.result.render() << "\n";
      if (out.rigid) {
        std::cout << "rigid\n";
      } else {
        std::cout << "not rigid (move C impossible on leg " << (*out.failed_leg + 1) << ")\n";
      }
    } else if (*construct) {
      GIISpectra s = spectra_from(alpha, beta, gamma);
      MonodromyTriple t = form == "integral"
                              ? integral_triple(s)
                              : goursat_triple(normalize_twist(s).first.sorted());
      std::cout << to_json(t).dump(1) << "\n";
    } else if (*irr) {
      GIISpectra s = normalize_twist(spectra_from(alpha, beta, gamma)).first.sorted();
      ReducibilityWitness w = is_irreducible(s);
      Json j;
      j["irreducible"] = w.irreducible();
      const char* kinds[] = {"none", "qinf(1)=0", "qinf(1/b)=0", "w2(qinf)(1/(a1*b))=0"};
      j["kind"] = kinds[static_cast<int>(w.kind)];
      j["indices"] = w.indices;
      std::cout << j.dump(1) << "\n";
    } else if (*herm) {
      GIISpectra s = normalize_twist(spectra_from(alpha, beta, gamma)).first.sorted();
      Json j;
      if (is_irreducible(s).irreducible()) {
        GoursatParams p = goursat_params(s);
        CycMatrix H = hermitian_matrix(p);
        auto [np, nm] = signature(H);
        j["H"] = to_json(H);
        j["signature"] = {np, nm};
        j["param_verdict"] = to_string(param_definite(p));
        ArcCertificate cert = arcs_definite(s);
        j["arcs_definite"] = cert.verdict == ArcVerdict::definite;
        FiniteMonodromyReport rep = finite_monodromy(s, jobs);
        j["finite_monodromy"] = rep.finite;
      } else {
        j["error"] = "reducible spectra: H is degenerate";
      }
      std::cout << j.dump(1) << "\n";
    } else if (*grp) {
      GIISpectra s = spectra_from(alpha, beta, gamma);
      MonodromyTriple t = integral_triple(s);
      GroupReport rep = enumerate_group({t.T0, t.T1, t.Tinf}, cap);
      Json j;
      if (rep.cap_exceeded) {
        j["cap_exceeded"] = true;
        j["cap"] = rep.cap;
      } else {
        j["order"] = rep.order;
        j["center"] = rep.center_order;
        j["scalars"] = rep.scalar_order;
      }
      std::cout << j.dump(1) << "\n";
    } else if (*obs) {
      GIISpectra s = spectra_from(alpha, beta, gamma);
      QuaternionClass q = quaternion_class(s);
      Json j;
      j["D"] = q.disc;
      j["mu"] = q.mu.get_str();
      Json r = Json::array();
      for (Place v : q.ramified)
        if (v != kInfinitePlace) r.push_back(v);
      if (q.ramified.count(kInfinitePlace)) r.push_back("inf");
      j["ramified"] = r;
      std::cout << j.dump(1) << "\n";
    } else if (*ode) {
      OdeCoefficients c = ode_coefficients(parse_rat_pair(alpha), parse_rat_quad(gamma));
      Json j;
      j["constants"] = {rat_to_string(c.A), rat_to_string(c.B), rat_to_string(c.C),
                        rat_to_string(c.D), rat_to_string(c.E), rat_to_string(c.F),
                        rat_to_string(c.G), rat_to_string(c.H)};
      j["beta"] = rat_to_string(c.beta);
      j["operator"] = to_json(goursat_operator(c));
      auto [phi0, phi1] = series_solutions(c, terms);
      j["phi0"] = to_json(phi0);
      j["phi1"] = to_json(phi1);
      std::cout << j.dump(1) << "\n";
    } else if (*ind) {
      LinearOperator L = operator_from_json(load_json(op_file));
      SingularPoint at = point == "0"   ? SingularPoint::zero
                         : point == "1" ? SingularPoint::one
                                        : SingularPoint::infinity;
      IndicialResult r = indicial_exponents(L, at);
      Json j;
      Json e = Json::array();
      for (const Rat& q : r.exponents) e.push_back(rat_to_string(q));
      j["exponents"] = e;
      if (r.leftover) j["unresolved_factor"] = to_json(*r.leftover);
      std::cout << j.dump(1) << "\n";
    } else if (*ver) {
      Json pj = load_json(poly_file);
      std::vector<CycPoly> P;
      for (const auto& a : (pj.is_object() ? pj.at("poly") : pj)) P.push_back(cycpoly_from_json(a));
      PowerSeries y = series_from_json(load_json(series_file));
      bool ok = verify_algebraic(P, y, order);
      Json j;
      j["verified"] = ok;
      j["order"] = order;
      std::cout << j.dump(1) << "\n";
      if (!ok) return 1;
    } else if (*search) {
      std::vector<SearchHit> hits;
      if (*sf) {
        SearchBounds b;
        b.max_alpha_beta_den = max_abd;
        b.max_gamma_den = max_gd;
        hits = search_finite(b, jobs);
      } else {
        ModuliQTables t = search_moduli_q();
        hits = t.signature22;
        hits.insert(hits.end(), t.signature40.begin(), t.signature40.end());
      }
      if (format == "csv") {
        std::cout << kCsvHeader << "\n";
        for (const auto& h : hits) std::cout << csv_row(h) << "\n";
      } else {
        Json j = Json::array();
        for (const auto& h : hits) j.push_back(to_json(h));
        std::cout << j.dump(1) << "\n";
      }
    }
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
