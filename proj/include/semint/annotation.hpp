#pragma once

#include "semint/graph.hpp"
#include "semint/vocab.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace semint::annotation {

/// GO aspect code (GAF column 9).
enum class Aspect : char { process = 'P', function = 'F', component = 'C' };

struct AnnotationRecord {
  std::string symbol;  // HUGO gene symbol
  std::string go_id;
  Aspect aspect = Aspect::process;
  std::optional<std::string> qualifier;
};

struct GafWarning {
  std::size_t line = 0;
  std::string message;
};

struct GafParseResult {
  std::vector<AnnotationRecord> records;
  std::vector<GafWarning> warnings;
  /// Lines dropped because the qualifier contains NOT.
  std::size_t negated = 0;
  /// Lines dropped for a wrong column count or bad aspect.
  std::size_t malformed = 0;
};

/// Parses GAF 1.0 / 2.x (15 to 17 tab-separated columns). `!` lines are
/// comments. Negated (NOT) and malformed lines are skipped with a warning
/// rather than failing the whole file.
GafParseResult parse_gaf(std::string_view text);

/// Strips a ".N" version and checks the `[A-Z]{2}_\d+` shape.
std::optional<std::string> normalize_refseq(std::string_view accession);

/// http://bio2rdf.org/refseq:<ACCESSION>
std::string refseq_iri(std::string_view accession);

/// Gene symbol -> RefSeq accessions (versionless, first-seen order).
class SymbolMap {
 public:
  /// Adds `accession` (normalized) unless already listed for `symbol`.
  void add(const std::string& symbol, std::string_view accession);
  const std::vector<std::string>* find(std::string_view symbol) const;
  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const std::map<std::string, std::vector<std::string>, std::less<>>& entries() const {
    return entries_;
  }

 private:
  std::map<std::string, std::vector<std::string>, std::less<>> entries_;
};

/// Two-column TSV: symbol, comma-separated RefSeq accessions. Duplicate
/// symbol rows are unioned. Throws DataError (with line) for a row without
/// two columns or an accession that is not RefSeq-shaped.
SymbolMap parse_symbol_map(std::string_view text);

/// RO predicate for an aspect: P -> participates_in, F -> has_function,
/// C -> part_of.
std::string_view aspect_predicate(Aspect aspect);

struct AnnotationGraph {
  Graph graph;
  /// Symbols with no symbol-map entry, distinct, in first-seen order.
  std::vector<std::string> unmapped_symbols;
};

/// Each mapped accession becomes an so:transcript instance linked to the
/// concept IRI of every GO term annotated to its symbol.
AnnotationGraph annotations_to_rdf(std::span<const AnnotationRecord> records,
                                   const SymbolMap& symbols,
                                   std::string_view concept_base = vocab::ns::obo_owl);

}  // namespace semint::annotation
