#pragma once

#include <string>

#include <json.hpp>

#include "skewrec/multipoly.hpp"
#include "skewrec/partition.hpp"
#include "skewrec/recurrence.hpp"
#include "skewrec/tableau.hpp"

namespace skewrec {

using Json = nlohmann::ordered_json;

/// {"outer":[...],"inner":[...],"n":3,"rows":[[1,1],[1,3],[2],[3]]}, rows
/// holding only the ordinary entries.
Json to_json(const Tableau& t);
/// Inverse of to_json(Tableau); throws std::invalid_argument on malformed input
/// or an invalid filling.
Tableau tableau_from_json(const Json& j);

/// {"nvars":2,"terms":[{"exp":[2,1],"coef":"1"},...]} in canonical order.
Json to_json(const MultiPoly& p);
MultiPoly poly_from_json(const Json& j);

Json to_json(const IntVector& v);
Json to_json(const Family& f);
/// Ascending coefficients of t, each as polynomial JSON.
Json to_json(const CharPoly& chi);
Json to_json(const ConjectureReport& report);

/// English-convention diagram: first row on top, skew boxes drawn as '■',
/// columns padded to the widest entry.
std::string render(const Tableau& t);

std::string to_string(const Rational& q);

}  // namespace skewrec
