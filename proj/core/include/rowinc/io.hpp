#pragma once

#include <string>
#include <string_view>

#include "rowinc/bijections.hpp"
#include "rowinc/qpoly.hpp"
#include "rowinc/schroeder.hpp"
#include "rowinc/stats.hpp"
#include "rowinc/tableau.hpp"

namespace rowinc {

// Tableau text format: two lines of n space-separated integers, top row
// first. The offset is inferred as (smallest entry - 1).
//
// Tableau JSON format: {"n":int,"k":int,"m":int,"rows":[[...],[...]]}.
// n, k and m must agree with the rows.
//
// Both parsers throw InputError naming the violated rule.

enum class TableauFormat { Text, Json };

struct ParsedTableau {
  Tableau tableau;
  TableauFormat format;
};

std::string to_text(const Tableau& t);
std::string to_json(const Tableau& t);
std::string format_tableau(const Tableau& t, TableauFormat format);

Tableau parse_tableau_text(std::string_view text);
Tableau parse_tableau_json(std::string_view text);
/// JSON when the first non-space character is '{', text otherwise.
ParsedTableau parse_tableau(std::string_view text);

/// {"coeffs":[c0,c1,...]}
std::string to_json(const QPoly& p);
QPoly parse_poly_json(std::string_view text);

/// {"descents":[...],"ascents":[...],"maj":int,"amaj":int}
std::string to_json(const StatProfile& p);

/// {"descents":[...],"ascents":[...],"d":int,"x":[...],"y":[...]}
std::string to_json(const SkewProfile& p);

/// Surrounding whitespace is ignored.
SchroederWord parse_word(std::string_view text);
SchroederPath parse_path(std::string_view text);

/// Comma-separated parts, e.g. "3,3,1,1". Empty string gives the empty
/// partition.
Partition parse_shape(std::string_view text);

}  // namespace rowinc
