#include "semint/endpoint.hpp"
#include "semint/error.hpp"
#include "semint/ntriples.hpp"
#include "semint/pipeline.hpp"

#include "support/random_graph.hpp"

#include <gtest/gtest.h>
#include <httplib.h>

#include <future>
#include <thread>
#include <vector>

namespace semint {
namespace {

using test_support::ex;

const std::string select_query = "SELECT ?s ?o WHERE { ?s <http://example.org/p> ?o }";

class EndpointTest : public ::testing::Test {
 protected:
  void SetUp() override {
    for (int i = 0; i < 20; ++i) {
      graph_.insert(ex("s" + std::to_string(i)), ex("p"), Term::literal("v" + std::to_string(i % 7)));
    }
    graph_.insert(ex("s0"), ex("q"), Term::blank("b0"));
    graph_.insert(Term::blank("b0"), ex("r"), Term::literal("inner"));
    before_ = serialize_ntriples(graph_);
    endpoint_ = std::make_unique<SparqlEndpoint>(graph_);
    port_ = endpoint_->bind("127.0.0.1", 0);
    server_ = std::thread([this] { endpoint_->serve(); });
  }

  void TearDown() override {
    endpoint_->stop();
    server_.join();
    EXPECT_EQ(serialize_ntriples(graph_), before_);
  }

  httplib::Client client() const {
    httplib::Client c("127.0.0.1", port_);
    c.set_read_timeout(10, 0);
    return c;
  }

  Graph graph_;
  std::string before_;
  std::unique_ptr<SparqlEndpoint> endpoint_;
  std::thread server_;
  int port_ = 0;
};

TEST_F(EndpointTest, GetReturnsSameBytesAsExecuteQuery) {
  auto c = client();
  auto res = c.Get("/sparql", httplib::Params{{"query", select_query}}, httplib::Headers{});
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  const auto direct = execute_query(graph_, select_query);
  EXPECT_EQ(res->body, direct.body);
  EXPECT_EQ(res->get_header_value("Content-Type"), direct.content_type);
}

TEST_F(EndpointTest, PostBodyAndForm) {
  auto c = client();
  const auto direct = execute_query(graph_, select_query).body;
  auto raw = c.Post("/sparql", select_query, "application/sparql-query");
  ASSERT_TRUE(raw);
  EXPECT_EQ(raw->status, 200);
  EXPECT_EQ(raw->body, direct);
  auto form = c.Post("/sparql", httplib::Params{{"query", select_query}});
  ASSERT_TRUE(form);
  EXPECT_EQ(form->status, 200);
  EXPECT_EQ(form->body, direct);
}

TEST_F(EndpointTest, DescribeIsNTriples) {
  auto c = client();
  const std::string q = "DESCRIBE <http://example.org/s0>";
  auto res = c.Get("/sparql", httplib::Params{{"query", q}}, httplib::Headers{});
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  EXPECT_EQ(res->get_header_value("Content-Type"), "application/n-triples");
  EXPECT_EQ(parse_ntriples(res->body).size(), 3u);
}

TEST_F(EndpointTest, BadRequests) {
  auto c = client();
  auto missing = c.Get("/sparql");
  ASSERT_TRUE(missing);
  EXPECT_EQ(missing->status, 400);
  auto syntax = c.Get("/sparql", httplib::Params{{"query", "SELECT ?x WHERE { ?x"}}, httplib::Headers{});
  ASSERT_TRUE(syntax);
  EXPECT_EQ(syntax->status, 400);
  EXPECT_NE(syntax->body.find("query line 1"), std::string::npos);
  auto wrong_type = c.Post("/sparql", select_query, "text/plain");
  ASSERT_TRUE(wrong_type);
  EXPECT_EQ(wrong_type->status, 400);
}

TEST_F(EndpointTest, OtherMethodsAreNotAllowed) {
  auto c = client();
  auto put = c.Put("/sparql", "INSERT DATA {}", "application/sparql-update");
  ASSERT_TRUE(put);
  EXPECT_EQ(put->status, 405);
  EXPECT_EQ(put->get_header_value("Allow"), "GET, POST");
  auto del = c.Delete("/sparql");
  ASSERT_TRUE(del);
  EXPECT_EQ(del->status, 405);
  auto unknown = c.Get("/other");
  ASSERT_TRUE(unknown);
  EXPECT_EQ(unknown->status, 404);
}

TEST_F(EndpointTest, ConcurrentIdenticalQueriesGetIdenticalBodies) {
  const auto expected = execute_query(graph_, select_query).body;
  std::vector<std::future<std::string>> futures;
  for (int i = 0; i < 16; ++i) {
    futures.push_back(std::async(std::launch::async, [this] {
      auto c = client();
      auto res = c.Get("/sparql", httplib::Params{{"query", select_query}}, httplib::Headers{});
      return res && res->status == 200 ? res->body : std::string("request failed");
    }));
  }
  for (auto& f : futures) EXPECT_EQ(f.get(), expected);
}

TEST(EndpointBindTest, UnbindableAddressIsIoError) {
  Graph g;
  SparqlEndpoint endpoint(g);
  EXPECT_THROW(endpoint.bind("256.0.0.1", 0), IoError);
}

}  // namespace
}  // namespace semint
