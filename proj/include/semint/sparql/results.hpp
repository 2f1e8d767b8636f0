#pragma once

#include "semint/sparql/evaluator.hpp"

#include <string>

namespace semint::sparql {

inline constexpr std::string_view json_content_type = "application/sparql-results+json";
inline constexpr std::string_view tsv_content_type = "text/tab-separated-values";
inline constexpr std::string_view ntriples_content_type = "application/n-triples";

/// SPARQL 1.1 Query Results JSON, newline-terminated. Unbound cells are
/// omitted from their binding object.
std::string to_json(const SolutionTable& table);

/// SPARQL 1.1 TSV: `?var` header, terms in N-Triples syntax, xsd:integer
/// values bare, empty cells for unbound.
std::string to_tsv(const SolutionTable& table);

}  // namespace semint::sparql
