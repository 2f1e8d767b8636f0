#pragma once

#include "semint/graph.hpp"
#include "semint/vocab.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semint::obo {

struct OboTerm {
  std::string id;  // IDSPACE:LOCALID
  std::string name;
  std::optional<std::string> ns;
  std::vector<std::string> parents;  // is_a targets, no duplicates
  bool obsolete = false;
};

struct OboOntology {
  std::string format_version;
  std::map<std::string, OboTerm> terms;
};

struct OboWarnings {
  /// Tag lines inside [Term] stanzas other than id/name/namespace/is_a/is_obsolete.
  std::size_t ignored_tag_lines = 0;
  /// "CHILD -> PARENT" for is_a targets that are not defined in the file.
  std::vector<std::string> dangling_references;
};

struct OboParseResult {
  OboOntology ontology;
  OboWarnings warnings;
};

/// Parses an OBO 1.2 flat file. Only [Term] stanzas are read; [Typedef] and
/// other stanzas are skipped.
///
/// Throws DataError for a stanza without `id:` (reporting the stanza's first
/// line), a malformed id, a duplicate id, or an is_a cycle among non-obsolete
/// terms (the message lists one cycle).
OboParseResult parse_obo(std::string_view text);

/// GO:0006915 -> http://purl.org/obo/owl/GO#0006915 for the default base.
std::string concept_iri(std::string_view curie, std::string_view base = vocab::ns::obo_owl);

/// SKOS rendering of the hierarchy: for each non-obsolete term a
/// skos:Concept typing, one skos:prefLabel and one skos:broader per is_a
/// parent. No closure and no skos:narrower.
Graph to_skos(const OboOntology& ontology, std::string_view base = vocab::ns::obo_owl);

}  // namespace semint::obo
