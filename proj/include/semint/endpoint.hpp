#pragma once

#include "semint/graph.hpp"

#include <memory>
#include <string>

namespace semint {

/// SPARQL protocol endpoint at /sparql over a graph that is no longer
/// written. GET takes `query` as a URL parameter; POST takes an
/// application/sparql-query body or a `query` form field.
class SparqlEndpoint {
 public:
  explicit SparqlEndpoint(const Graph& graph);
  ~SparqlEndpoint();
  SparqlEndpoint(const SparqlEndpoint&) = delete;
  SparqlEndpoint& operator=(const SparqlEndpoint&) = delete;

  /// Binds the socket; port 0 picks a free port. Returns the bound port.
  /// Throws IoError if the address cannot be bound.
  int bind(const std::string& host, int port);

  /// Serves until stop(); call after bind().
  void serve();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace semint
