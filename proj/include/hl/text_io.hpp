#pragma once

/*
 * Text and JSON serialization.
 *
 * Coordinates: a coweight coordinate is an integer or a half-integer; the
 * textual form is "3", "-1", "3/2", "-1/2".  JSON encodes integer coordinates
 * as numbers and half-integers as strings ("3/2"), since JSON has no exact
 * rational type.
 *
 * Tableaux: one row per line, entries comma-separated, a bar written as a
 * trailing apostrophe ("3'" for 3bar).  JSON: array of rows, each an array of
 * letter strings.  Both forms round-trip bit-exactly.
 *
 * Polynomials: JSON array of [exponent, coefficient] pairs, ascending
 * q-exponents (the encoded polynomial must lie in Z[q]).  Coefficients that
 * fit in int64 are numbers; larger ones are decimal strings.
 */

#include <string>

#include <json.hpp>

#include "hl/poly.hpp"
#include "hl/root_system.hpp"
#include "hl/tableaux.hpp"

namespace hl {

using Json = nlohmann::json;

// "3", "-1/2" <-> exact rational with denominator 1 or 2.
Rat parse_coord(const std::string& tok);
std::string coord_str(const Rat& c);

// Comma-separated coordinates; must have exactly d.dimension() of them.
Vec parse_coords(const RootDatum& d, const std::string& csv);
std::string coords_str(const Vec& v);

// "3" or "3'" -> letter code.
int parse_letter(const RootDatum& d, const std::string& tok);

std::string tableau_to_text(const Tableau& t);
// Parses and validates against the shape (heights, column validity,
// designated-pair constraints); throws usage_error on any mismatch.
Tableau tableau_from_text(const Shape& s, const std::string& text);

Json poly_to_json(const HalfLaurent& p);
HalfLaurent poly_from_json(const Json& j);

Json coweight_to_json(const Vec& v);
Vec coweight_from_json(const Json& j);

Json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const Shape& s, const Json& j);

}  // namespace hl
