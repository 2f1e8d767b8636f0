#pragma once

#include "semint/graph.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace semint::reasoner {

/// first ∘ second ⊑ implied
struct ChainAxiom {
  std::string first;
  std::string second;
  std::string implied;

  bool operator==(const ChainAxiom&) const = default;
};

/// participates_in, has_function and part_of each chained with skos:broader.
std::vector<ChainAxiom> default_axioms();

/// Three tab-separated IRIs per line; blank and `#` lines skipped. Throws
/// DataError for a row that is not three absolute IRIs.
std::vector<ChainAxiom> parse_axioms(std::string_view text);

struct MaterializeReport {
  std::size_t derived = 0;
  /// Join rounds run, counting the last one that found nothing new.
  std::size_t rounds = 0;
};

/// Adds every chain consequence to `graph` until nothing new follows.
/// Semi-naive: each round joins only the previous round's new triples
/// against the full graph.
MaterializeReport materialize(Graph& graph, const std::vector<ChainAxiom>& axioms);

}  // namespace semint::reasoner
