#include "semint/pipeline.hpp"

#include "semint/annotation.hpp"
#include "semint/error.hpp"
#include "semint/ntriples.hpp"
#include "semint/obo.hpp"
#include "semint/observation.hpp"
#include "semint/reasoner.hpp"
#include "semint/sparql/evaluator.hpp"
#include "semint/sparql/parser.hpp"
#include "semint/sparql/results.hpp"

#include <charconv>
#include <sstream>

namespace semint {
namespace {

namespace fs = std::filesystem;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

template <class Fn>
auto stage(std::string_view name, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.kind(), "stage " + std::string(name) + ": " + e.what());
  }
}

}  // namespace

PipelineConfig load_config(const fs::path& file) {
  const std::string text = read_text_file(file);
  const fs::path dir = file.parent_path();
  auto resolve = [&](std::string_view value) {
    fs::path p{std::string(value)};
    return p.is_absolute() || dir.empty() ? p : dir / p;
  };

  PipelineConfig config;
  std::istringstream in(text);
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw DataError("expected 'key = value'", line_no);
    const auto key = trim(line.substr(0, eq));
    const auto value = trim(line.substr(eq + 1));
    if (key == "obo") {
      config.obo = resolve(value);
    } else if (key == "gaf") {
      config.gaf = resolve(value);
    } else if (key == "symbol_map") {
      config.symbol_map = resolve(value);
    } else if (key == "observations") {
      std::size_t from = 0;
      while (from <= value.size()) {
        auto comma = value.find(',', from);
        if (comma == std::string_view::npos) comma = value.size();
        if (auto part = trim(value.substr(from, comma - from)); !part.empty()) {
          config.observations.push_back(resolve(part));
        }
        from = comma + 1;
      }
    } else if (key == "axioms") {
      config.axioms = resolve(value);
    } else if (key == "output") {
      config.output = resolve(value);
    } else if (key == "base_iri") {
      config.base_iri = std::string(value);
    } else if (key == "listen") {
      config.listen = std::string(value);
    } else if (key == "port") {
      int port = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), port);
      if (ec != std::errc() || ptr != value.data() + value.size()) {
        throw DataError("port must be an integer", line_no);
      }
      config.port = port;
    } else {
      throw DataError("unknown key '" + std::string(key) + "'", line_no);
    }
  }
  return config;
}

void validate_config(const PipelineConfig& config) {
  auto require = [](const fs::path& p, std::string_view key) {
    if (p.empty()) throw DataError("config: missing '" + std::string(key) + "'");
    if (!fs::exists(p)) throw IoError("config: " + std::string(key) + " path does not exist: " + p.string());
  };
  require(config.obo, "obo");
  require(config.gaf, "gaf");
  require(config.symbol_map, "symbol_map");
  for (const auto& p : config.observations) require(p, "observations");
  if (config.axioms) require(*config.axioms, "axioms");
  if (config.output.empty()) throw DataError("config: missing 'output'");
  if (config.port < 1 || config.port > 65535) {
    throw DataError("config: port " + std::to_string(config.port) + " outside [1, 65535]");
  }
}

std::string BuildReport::to_text() const {
  std::string out;
  for (const auto& s : stages) {
    out += s.stage + ": " + std::to_string(s.triples) + " triples";
    if (!s.detail.empty()) out += " (" + s.detail + ")";
    out += '\n';
  }
  out += "merged: " + std::to_string(merged_triples) + " triples\n";
  out += "materialize: " + std::to_string(derived) + " derived in " + std::to_string(rounds) +
         " rounds\n";
  out += "total: " + std::to_string(total_triples) + " triples\n";
  return out;
}

Graph build_graph(const PipelineConfig& config, BuildReport& report) {
  validate_config(config);
  report = {};

  Graph observations = stage("observations", [&] {
    const observation::IriPolicy policy(config.base_iri);
    std::vector<observation::ObservationRow> rows;
    for (const auto& path : config.observations) {
      auto part = observation::parse_observations(read_text_file(path));
      rows.insert(rows.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    Graph g = observation::rows_to_rdf(rows, policy);
    report.stages.push_back({"observations", g.size(), std::to_string(rows.size()) + " rows"});
    return g;
  });

  Graph skos = stage("obo", [&] {
    const auto parsed = obo::parse_obo(read_text_file(config.obo));
    Graph g = obo::to_skos(parsed.ontology);
    report.stages.push_back(
        {"obo", g.size(),
         std::to_string(parsed.ontology.terms.size()) + " terms, " +
             std::to_string(parsed.warnings.ignored_tag_lines) + " ignored tag lines, " +
             std::to_string(parsed.warnings.dangling_references.size()) + " dangling is_a"});
    return g;
  });

  Graph annotations = stage("annotations", [&] {
    const auto gaf = annotation::parse_gaf(read_text_file(config.gaf));
    const auto symbols = annotation::parse_symbol_map(read_text_file(config.symbol_map));
    auto mapped = annotation::annotations_to_rdf(gaf.records, symbols);
    std::string detail = std::to_string(gaf.records.size()) + " records, " +
                         std::to_string(gaf.negated) + " negated, " + std::to_string(gaf.malformed) +
                         " malformed, " + std::to_string(mapped.unmapped_symbols.size()) +
                         " unmapped symbols";
    report.stages.push_back({"annotations", mapped.graph.size(), std::move(detail)});
    return std::move(mapped.graph);
  });

  Graph merged = std::move(observations);
  stage("merge", [&] {
    for (const Graph* g : {&skos, &annotations}) merge(merged, *g);
    report.merged_triples = merged.size();
    return 0;
  });

  stage("materialize", [&] {
    const auto axioms =
        config.axioms ? reasoner::parse_axioms(read_text_file(*config.axioms)) : reasoner::default_axioms();
    const auto r = reasoner::materialize(merged, axioms);
    report.derived = r.derived;
    report.rounds = r.rounds;
    return 0;
  });
  report.total_triples = merged.size();
  return merged;
}

BuildReport run_build(const PipelineConfig& config) {
  BuildReport report;
  const Graph g = build_graph(config, report);
  stage("output", [&] {
    write_text_file(config.output, serialize_ntriples(g));
    return 0;
  });
  return report;
}

Graph load_graph(const fs::path& path) { return parse_ntriples(read_text_file(path)); }

ResultFormat parse_result_format(std::string_view name) {
  if (name == "json") return ResultFormat::json;
  if (name == "tsv") return ResultFormat::tsv;
  if (name == "ntriples") return ResultFormat::ntriples;
  throw Error(Error::Kind::query, "unknown result format '" + std::string(name) + "'");
}

QueryResponse execute_query(const Graph& graph, std::string_view text,
                            std::optional<ResultFormat> format) {
  const sparql::Query query = sparql::parse_query(text);
  if (query.is_select()) {
    if (format == ResultFormat::ntriples) {
      throw Error(Error::Kind::query, "SELECT results cannot be written as N-Triples");
    }
    const auto table = sparql::evaluate_select(graph, query);
    if (format == ResultFormat::tsv) return {sparql::to_tsv(table), std::string(sparql::tsv_content_type)};
    return {sparql::to_json(table), std::string(sparql::json_content_type)};
  }
  if (format && format != ResultFormat::ntriples) {
    throw Error(Error::Kind::query, "DESCRIBE results are only available as N-Triples");
  }
  return {serialize_ntriples(sparql::evaluate_describe(graph, query)),
          std::string(sparql::ntriples_content_type)};
}

}  // namespace semint
