#include "semint/endpoint.hpp"

#include "semint/error.hpp"
#include "semint/pipeline.hpp"

#include <httplib.h>

#include <cctype>

namespace semint {
namespace {

constexpr const char* kPath = "/sparql";

std::string media_type(const std::string& content_type) {
  std::string type = content_type.substr(0, content_type.find(';'));
  while (!type.empty() && type.back() == ' ') type.pop_back();
  for (auto& c : type) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return type;
}

}  // namespace

struct SparqlEndpoint::Impl {
  const Graph& graph;
  httplib::Server server;

  explicit Impl(const Graph& g) : graph(g) {
    server.Get(kPath, [this](const httplib::Request& req, httplib::Response& res) {
      if (!req.has_param("query")) return bad_request(res, "missing 'query' parameter");
      answer(req.get_param_value("query"), res);
    });
    server.Post(kPath, [this](const httplib::Request& req, httplib::Response& res) {
      const std::string type = media_type(req.get_header_value("Content-Type"));
      if (type == "application/sparql-query") return answer(req.body, res);
      if (type == "application/x-www-form-urlencoded") {
        if (!req.has_param("query")) return bad_request(res, "missing 'query' form field");
        return answer(req.get_param_value("query"), res);
      }
      bad_request(res, "POST body must be application/sparql-query or a 'query' form field");
    });
    auto not_allowed = [](const httplib::Request&, httplib::Response& res) {
      res.status = 405;
      res.set_header("Allow", "GET, POST");
      res.set_content("method not allowed\n", "text/plain");
    };
    server.Put(kPath, not_allowed);
    server.Delete(kPath, not_allowed);
    server.Patch(kPath, not_allowed);
    server.Options(kPath, not_allowed);
  }

  static void bad_request(httplib::Response& res, const std::string& message) {
    res.status = 400;
    res.set_content(message + "\n", "text/plain");
  }

  void answer(const std::string& query, httplib::Response& res) const {
    try {
      auto response = execute_query(graph, query);
      res.status = 200;
      res.set_content(std::move(response.body), response.content_type);
    } catch (const Error& e) {
      if (e.kind() == Error::Kind::query) return bad_request(res, e.what());
      res.status = 500;
      res.set_content(std::string(e.what()) + "\n", "text/plain");
    }
  }
};

SparqlEndpoint::SparqlEndpoint(const Graph& graph) : impl_(std::make_unique<Impl>(graph)) {}

SparqlEndpoint::~SparqlEndpoint() { stop(); }

int SparqlEndpoint::bind(const std::string& host, int port) {
  const int bound = port == 0 ? impl_->server.bind_to_any_port(host)
                              : (impl_->server.bind_to_port(host, port) ? port : -1);
  if (bound <= 0) throw IoError("cannot listen on " + host + ":" + std::to_string(port));
  return bound;
}

void SparqlEndpoint::serve() { impl_->server.listen_after_bind(); }

void SparqlEndpoint::stop() {
  if (impl_) impl_->server.stop();
}

}  // namespace semint
