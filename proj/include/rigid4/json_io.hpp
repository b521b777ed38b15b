#ifndef RIGID4_JSON_IO_HPP
#define RIGID4_JSON_IO_HPP

#include <json.hpp>

#include "rigid4/construct.hpp"
#include "rigid4/ode.hpp"
#include "rigid4/search.hpp"

namespace rigid4 {

using Json = nlohmann::ordered_json;

// Every number is exact: rationals as "p/q" strings, cyclotomic elements as
// {"conductor": N, "coeffs": [...]}; plain strings are accepted on input as
// rational shorthand.
Json to_json(const Rat& q);
Json to_json(const CycElt& e);
Json to_json(const CycPoly& p);
Json to_json(const CycMatrix& m);
Json to_json(const GIISpectra& s);
Json to_json(const MonodromyTriple& t);
Json to_json(const LinearOperator& op);
Json to_json(const PowerSeries& s);
Json to_json(const SearchHit& h);

Rat rat_from_json(const Json& j);
CycElt cycelt_from_json(const Json& j);
CycPoly cycpoly_from_json(const Json& j);
CycMatrix cycmatrix_from_json(const Json& j);
LinearOperator operator_from_json(const Json& j);
PowerSeries series_from_json(const Json& j);

std::string csv_row(const SearchHit& h);
extern const char* kCsvHeader;

}  // namespace rigid4

#endif
