#pragma once

#include "semint/graph.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace semint {

/// Parses N-Triples. LF and CRLF line endings are accepted; `#` comment lines
/// and blank lines are skipped. Throws DataError naming the 1-based line and
/// column of the first syntax error.
Graph parse_ntriples(std::string_view text);

/// Same, inserting into an existing graph.
void parse_ntriples_into(Graph& graph, std::string_view text);

/// Canonical N-Triples: one statement per line, lines sorted by the
/// (subject, predicate, object) serialized forms, LF endings. Equal graphs
/// give byte-identical output regardless of insertion order.
std::string serialize_ntriples(const Graph& graph);

/// The same statements in the same order as Turtle: `@prefix` lines for the
/// graph's prefix map followed by one statement per line, with IRIs written as
/// prefixed names where the local part allows it.
std::string serialize_turtle(const Graph& graph);

/// Whole-file read; throws IoError naming the path.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view content);

}  // namespace semint
