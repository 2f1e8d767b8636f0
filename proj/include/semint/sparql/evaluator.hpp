#pragma once

#include "semint/graph.hpp"
#include "semint/sparql/ast.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace semint::sparql {

struct SolutionTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::optional<Term>>> rows;
};

/// Greedy join order: repeatedly picks the pattern with the smallest
/// estimated cardinality given the variables bound so far; ties go to the
/// earlier pattern. Returns indexes into `patterns`.
std::vector<std::size_t> plan_bgp(const std::vector<TriplePattern>& patterns, const Graph& graph);

/// Estimated matches of `pattern` once `bound` variables are fixed: the exact
/// count over its constant positions, divided by the number of distinct
/// values for every position holding an already-bound variable.
double estimate_cardinality(const TriplePattern& pattern, const std::vector<std::string>& bound,
                            const Graph& graph);

/// Lexical form of a literal parsed as a decimal/double; nullopt for IRIs,
/// blank nodes and non-numeric literals.
std::optional<double> numeric_value(const Term& term);

bool compare(double lhs, Comparator op, double rhs);

struct EvalOptions {
  /// Join order to use instead of plan_bgp (must be a permutation).
  std::optional<std::vector<std::size_t>> plan;
};

SolutionTable evaluate_select(const Graph& graph, const Query& query, const EvalOptions& options = {});

/// Union of the concise bounded descriptions of every term bound to a
/// described variable (plus described IRIs): all triples with the term as
/// subject, following blank-node objects recursively.
Graph evaluate_describe(const Graph& graph, const Query& query, const EvalOptions& options = {});

}  // namespace semint::sparql
