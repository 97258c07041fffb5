#pragma once

#include <string>
#include <string_view>

#include "assoc/polygon.hpp"

namespace assoc {

// Text form:  n=<int>;interior=<a>-<b>,<a>-<b>,...  (edges sorted, a < b)
// JSON form:  {"n":N,"interior":[[a,b],...]}
// Both parsers reject anything that is not a valid triangulation.

std::string to_text(const Triangulation& t);
Triangulation parse_text(std::string_view s);

std::string to_json(const Triangulation& t);
Triangulation parse_json(std::string_view s);

/// Dispatches on the first non-blank character: '{' selects JSON.
Triangulation parse_triangulation(std::string_view s);

}  // namespace assoc
