#pragma once

#include "semint/graph.hpp"

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semint {

struct PipelineConfig {
  std::filesystem::path obo;
  std::filesystem::path gaf;
  std::filesystem::path symbol_map;
  std::vector<std::filesystem::path> observations;
  std::optional<std::filesystem::path> axioms;  // default chain axioms when unset
  std::filesystem::path output;
  std::string base_iri = "http://example.org/omics/";
  std::string listen = "127.0.0.1";
  int port = 2020;
};

/// Flat `key = value` file; `#` starts a comment line. Keys: obo, gaf,
/// symbol_map, observations (comma-separated, or repeated), axioms, output,
/// base_iri, listen, port. Relative paths resolve against the file's
/// directory. Throws IoError if unreadable, DataError for an unknown key or
/// malformed line.
PipelineConfig load_config(const std::filesystem::path& file);

/// Throws IoError naming the first input path that does not exist, or
/// DataError for a missing key or a port outside [1, 65535].
void validate_config(const PipelineConfig& config);

struct StageReport {
  std::string stage;
  std::size_t triples = 0;
  std::string detail;
};

struct BuildReport {
  std::vector<StageReport> stages;
  std::size_t merged_triples = 0;
  std::size_t derived = 0;
  std::size_t rounds = 0;
  std::size_t total_triples = 0;

  std::string to_text() const;
};

/// obo -> SKOS, GAF -> RDF, observations -> RDF, merge, materialize.
/// Stage failures are rethrown with the stage name prefixed and the
/// original error kind kept.
Graph build_graph(const PipelineConfig& config, BuildReport& report);

/// build_graph, then writes canonical N-Triples to config.output.
BuildReport run_build(const PipelineConfig& config);

Graph load_graph(const std::filesystem::path& path);

enum class ResultFormat { json, tsv, ntriples };

/// Throws QueryError-kind Error for anything but json, tsv or ntriples.
ResultFormat parse_result_format(std::string_view name);

struct QueryResponse {
  std::string body;
  std::string content_type;
};

/// Parses and evaluates `text`. SELECT defaults to JSON, DESCRIBE is always
/// N-Triples; asking for N-Triples from a SELECT or a table format from a
/// DESCRIBE is a query error. Shared by the CLI and the HTTP endpoint so
/// both produce identical bytes.
QueryResponse execute_query(const Graph& graph, std::string_view text,
                            std::optional<ResultFormat> format = std::nullopt);

}  // namespace semint
