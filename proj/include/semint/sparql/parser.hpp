#pragma once

#include "semint/sparql/ast.hpp"

#include <string_view>

namespace semint::sparql {

/// Parses the supported subset:
///
///   PREFIX*  (SELECT [DISTINCT] (?v | (COUNT([DISTINCT] ?v|*) AS ?a))+ | *
///            | DESCRIBE (?v | iri)+)
///   [WHERE] { triples with ; and , and `a`, FILTER(?v op number) }
///   [GROUP BY ?v+ | GROUP BY (?v)]
///
/// Throws QueryError with line and column on a syntax error, an unknown
/// prefix, an unsupported keyword (OPTIONAL, UNION, ORDER, LIMIT, ...) or a
/// projected, described, counted or grouped variable that no pattern uses.
Query parse_query(std::string_view text);

}  // namespace semint::sparql
