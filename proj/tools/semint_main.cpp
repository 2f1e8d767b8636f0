// semint: build the integrated graph, query it, or serve it over HTTP.

#include "semint/endpoint.hpp"
#include "semint/error.hpp"
#include "semint/ntriples.hpp"
#include "semint/pipeline.hpp"

#include <CLI11.hpp>

#include <csignal>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <iterator>

namespace {

semint::SparqlEndpoint* running_endpoint = nullptr;

void on_signal(int) {
  if (running_endpoint) running_endpoint->stop();
}

std::string read_query(const std::string& arg) {
  if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return semint::read_text_file(arg);
  return arg;  // inline query text
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Integrate OBO, GAF and observation data as RDF; query it with SPARQL"};
  app.require_subcommand(1);

  std::string config_path, graph_path, query_arg, format_name, listen, base_iri;
  int port = 0;

  auto* build = app.add_subcommand("build", "Convert, merge and materialize into an N-Triples graph");
  build->add_option("--config", config_path, "Pipeline config file")->required()->check(CLI::ExistingFile);
  build->add_option("--graph", graph_path, "Output graph path (overrides config 'output')");
  build->add_option("--base-iri", base_iri, "Base IRI for minted resources (overrides config)");

  auto* query = app.add_subcommand("query", "Run a SPARQL query against a built graph");
  query->add_option("--graph", graph_path, "N-Triples graph")->required();
  query->add_option("--query", query_arg, "Query file, inline query text, or - for stdin")->required();
  query->add_option("--format", format_name, "json or tsv for SELECT, ntriples for DESCRIBE")
      ->check(CLI::IsMember({"json", "tsv", "ntriples"}));

  auto* serve = app.add_subcommand("serve", "Serve a built graph at /sparql");
  serve->add_option("--graph", graph_path, "N-Triples graph (defaults to the config's output)");
  serve->add_option("--config", config_path, "Pipeline config file")->check(CLI::ExistingFile);
  serve->add_option("--listen", listen, "Listen address (default 127.0.0.1)");
  serve->add_option("--port", port, "Port (default 2020)")->check(CLI::Range(1, 65535));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*build) {
      auto config = semint::load_config(config_path);
      if (!graph_path.empty()) config.output = graph_path;
      if (!base_iri.empty()) config.base_iri = base_iri;
      const auto report = semint::run_build(config);
      std::cout << report.to_text() << "wrote " << config.output.string() << '\n';
    } else if (*query) {
      const semint::Graph graph = semint::load_graph(graph_path);
      std::optional<semint::ResultFormat> format;
      if (!format_name.empty()) format = semint::parse_result_format(format_name);
      const auto response = semint::execute_query(graph, read_query(query_arg), format);
      std::cout << response.body << std::flush;
    } else if (*serve) {
      semint::PipelineConfig config;
      if (!config_path.empty()) config = semint::load_config(config_path);
      if (!graph_path.empty()) config.output = graph_path;
      if (!listen.empty()) config.listen = listen;
      if (port != 0) config.port = port;
      if (config.output.empty()) throw semint::DataError("serve needs --graph or a config with 'output'");

      const semint::Graph graph = semint::load_graph(config.output);
      semint::SparqlEndpoint endpoint(graph);
      const int bound = endpoint.bind(config.listen, config.port);
      running_endpoint = &endpoint;
      std::signal(SIGINT, on_signal);
      std::signal(SIGTERM, on_signal);
      std::cerr << "serving " << graph.size() << " triples at http://" << config.listen << ':' << bound
                << "/sparql\n";
      endpoint.serve();
      running_endpoint = nullptr;
    }
  } catch (const semint::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.exit_code();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
