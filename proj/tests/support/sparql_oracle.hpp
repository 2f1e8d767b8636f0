#pragma once

// Brute-force SPARQL reference: tries every assignment of graph terms to the
// query's variables. Shares nothing with the engine beyond the Graph and the
// parsed AST.

#include "semint/graph.hpp"
#include "semint/sparql/ast.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <regex>
#include <set>
#include <string>
#include <vector>

namespace semint::test_support {

inline std::optional<double> oracle_number(const Term& t) {
  static const std::regex decimal(R"([+-]?(\d+(\.\d*)?|\.\d+)([eE][+-]?\d+)?)");
  if (!t.is_literal() || !std::regex_match(t.value(), decimal)) return std::nullopt;
  return std::strtod(t.value().c_str(), nullptr);
}

inline bool oracle_filter(const sparql::FilterExpr& f, const Term& t) {
  const auto v = oracle_number(t);
  if (!v) return false;
  switch (f.op) {
    case sparql::Comparator::lt: return *v < f.constant;
    case sparql::Comparator::le: return *v <= f.constant;
    case sparql::Comparator::gt: return *v > f.constant;
    case sparql::Comparator::ge: return *v >= f.constant;
    case sparql::Comparator::eq: return *v == f.constant;
    case sparql::Comparator::ne: return *v != f.constant;
  }
  return false;
}

using OracleRow = std::vector<Term>;

/// Every assignment satisfying all patterns and filters, projected onto
/// `projection` (names without '?').
inline std::vector<std::map<std::string, Term>> brute_force_solutions(const Graph& g,
                                                                     const sparql::Query& q) {
  std::vector<std::string> vars;
  auto note = [&](const sparql::PatternNode& n) {
    if (const auto* v = std::get_if<sparql::Variable>(&n);
        v && std::find(vars.begin(), vars.end(), v->name) == vars.end()) {
      vars.push_back(v->name);
    }
  };
  for (const auto& p : q.where) {
    note(p.subject);
    note(p.predicate);
    note(p.object);
  }
  std::set<Term> domain_set;
  for (const auto& t : g.triples()) {
    domain_set.insert(t.subject);
    domain_set.insert(t.predicate);
    domain_set.insert(t.object);
  }
  const std::vector<Term> domain(domain_set.begin(), domain_set.end());

  auto index_of = [&](const std::string& name) {
    return static_cast<int>(std::find(vars.begin(), vars.end(), name) - vars.begin());
  };
  auto last_var = [&](const sparql::TriplePattern& p) {
    int last = -1;
    for (const auto* n : {&p.subject, &p.predicate, &p.object}) {
      if (const auto* v = std::get_if<sparql::Variable>(n)) last = std::max(last, index_of(v->name));
    }
    return last;
  };

  std::vector<std::vector<const sparql::TriplePattern*>> check_at(vars.size() + 1);
  for (const auto& p : q.where) check_at[static_cast<std::size_t>(last_var(p) + 1)].push_back(&p);
  std::vector<std::vector<const sparql::FilterExpr*>> filter_at(vars.size() + 1);
  bool impossible = false;
  for (const auto& f : q.filters) {
    const int i = index_of(f.variable);
    if (i == static_cast<int>(vars.size())) {
      impossible = true;
    } else {
      filter_at[static_cast<std::size_t>(i + 1)].push_back(&f);
    }
  }

  std::vector<std::map<std::string, Term>> out;
  if (impossible) return out;
  std::map<std::string, Term> assignment;
  auto ground = [&](const sparql::PatternNode& n) -> const Term& {
    if (const auto* v = std::get_if<sparql::Variable>(&n)) return assignment.at(v->name);
    return std::get<Term>(n);
  };
  auto satisfied = [&](std::size_t level) {
    for (const auto* p : check_at[level]) {
      const Term& s = ground(p->subject);
      const Term& pr = ground(p->predicate);
      const Term& o = ground(p->object);
      if (s.is_literal() || !pr.is_iri() || !g.contains({s, pr, o})) return false;
    }
    for (const auto* f : filter_at[level]) {
      if (!oracle_filter(*f, assignment.at(f->variable))) return false;
    }
    return true;
  };

  auto assign = [&](auto&& self, std::size_t level) -> void {
    if (!satisfied(level)) return;
    if (level == vars.size()) {
      out.push_back(assignment);
      return;
    }
    for (const auto& t : domain) {
      assignment.insert_or_assign(vars[level], t);
      self(self, level + 1);
    }
    assignment.erase(vars[level]);
  };
  assign(assign, 0);
  return out;
}

/// Random graph over a small vocabulary so that random BGPs join often:
/// IRIs, a few predicates, and literals that are numeric, numeric-looking
/// plain strings or plain text.
inline std::vector<Triple> random_query_graph(std::mt19937& rng, std::size_t n, int nodes = 40) {
  auto node = [&](int i) { return Term::iri("http://example.org/n" + std::to_string(i)); };
  auto pred = [&](int i) { return Term::iri("http://example.org/p" + std::to_string(i)); };
  std::vector<Triple> out;
  for (std::size_t k = 0; k < n; ++k) {
    const Term s = node(static_cast<int>(rng() % static_cast<unsigned>(nodes)));
    const Term p = pred(static_cast<int>(rng() % 4));
    Term o = node(static_cast<int>(rng() % static_cast<unsigned>(nodes)));
    switch (rng() % 6) {
      case 0:
        o = Term::typed_literal(std::to_string(rng() % 7), "http://www.w3.org/2001/XMLSchema#integer");
        break;
      case 1:
        o = Term::typed_literal(std::to_string(rng() % 5) + ".5", "http://www.w3.org/2001/XMLSchema#double");
        break;
      case 2:
        o = Term::literal(rng() % 2 ? "2" : "label" + std::to_string(rng() % 3));
        break;
      default:
        break;
    }
    out.push_back({s, p, o});
  }
  return out;
}

/// Random SELECT * text with up to `max_patterns` patterns over variables
/// ?v0..?v3 and up to two numeric filters on variables that occur in object
/// position.
inline std::string random_bgp_query(std::mt19937& rng, const std::vector<Triple>& triples,
                                    std::size_t max_patterns = 6, bool distinct = false) {
  const std::size_t n = 1 + rng() % max_patterns;
  std::string body;
  std::vector<std::string> object_vars;
  std::set<std::string> used;
  auto pick_triple = [&]() -> const Triple& { return triples[rng() % triples.size()]; };
  auto var = [&] {
    // prefer variables already used so patterns connect
    if (!used.empty() && rng() % 3 != 0) {
      auto it = used.begin();
      std::advance(it, static_cast<long>(rng() % used.size()));
      return *it;
    }
    std::string v = "v" + std::to_string(rng() % 4);
    used.insert(v);
    return v;
  };
  for (std::size_t i = 0; i < n; ++i) {
    const Triple& t = pick_triple();
    const std::string s = rng() % 4 == 0 ? t.subject.to_ntriples() : "?" + var();
    const std::string p = rng() % 3 != 0 ? t.predicate.to_ntriples() : "?" + var();
    std::string o;
    if (rng() % 3 == 0) {
      o = t.object.to_ntriples();
    } else {
      const std::string v = var();
      object_vars.push_back(v);
      o = "?" + v;
    }
    body += "  " + s + " " + p + " " + o + " .\n";
  }
  const std::size_t nfilters = object_vars.empty() ? 0 : rng() % 3;
  static const char* ops[] = {"<", "<=", ">", ">=", "=", "!="};
  for (std::size_t f = 0; f < nfilters; ++f) {
    const std::string& v = object_vars[rng() % object_vars.size()];
    const std::string c = std::to_string(rng() % 6) + (rng() % 2 ? ".5" : "");
    if (rng() % 2) {
      body += "  FILTER (?" + v + " " + ops[rng() % 6] + " " + c + ")\n";
    } else {
      body += "  FILTER (" + c + " " + ops[rng() % 6] + " ?" + v + ")\n";
    }
  }
  return std::string("SELECT ") + (distinct ? "DISTINCT " : "") + "*\nWHERE {\n" + body + "}\n";
}

/// SELECT * built from a connected walk over `triples` with terms replaced
/// consistently by ?v0..?v3, so the unfiltered pattern has at least one
/// solution. Up to two numeric filters go on variables that stand for
/// literals.
inline std::string anchored_bgp_query(std::mt19937& rng, const std::vector<Triple>& triples,
                                      std::size_t max_patterns = 6, bool distinct = false) {
  std::map<Term, std::vector<std::size_t>> touching;
  for (std::size_t i = 0; i < triples.size(); ++i) {
    touching[triples[i].subject].push_back(i);
    if (!triples[i].object.is_literal()) touching[triples[i].object].push_back(i);
  }
  std::vector<std::size_t> walk{rng() % triples.size()};
  const std::size_t n = 1 + rng() % max_patterns;
  while (walk.size() < n) {
    const Triple& from = triples[walk[rng() % walk.size()]];
    const Term& node = rng() % 2 || from.object.is_literal() ? from.subject : from.object;
    const auto& next = touching[node];
    walk.push_back(next[rng() % next.size()]);
  }

  std::map<Term, std::string> vars;
  std::set<Term> constants;
  std::vector<std::string> literal_vars;
  auto render = [&](const Term& t, int var_odds) -> std::string {
    if (auto it = vars.find(t); it != vars.end()) return "?" + it->second;
    if (!constants.contains(t) && vars.size() < 4 && static_cast<int>(rng() % 10) < var_odds) {
      const std::string v = "v" + std::to_string(vars.size());
      vars.emplace(t, v);
      if (t.is_literal()) literal_vars.push_back(v);
      return "?" + v;
    }
    constants.insert(t);
    return t.to_ntriples();
  };
  std::string body;
  for (std::size_t i : walk) {
    const Triple& t = triples[i];
    const std::string s = render(t.subject, 7);
    const std::string p = render(t.predicate, 2);
    const std::string o = render(t.object, 6);
    body += "  " + s + " " + p + " " + o + " .\n";
  }
  static const char* ops[] = {"<", "<=", ">", ">=", "=", "!="};
  const std::size_t nfilters = literal_vars.empty() ? 0 : rng() % 3;
  for (std::size_t f = 0; f < nfilters; ++f) {
    const std::string& v = literal_vars[rng() % literal_vars.size()];
    const std::string c = std::to_string(rng() % 6) + (rng() % 2 ? ".5" : "");
    body += "  FILTER (?" + v + " " + ops[rng() % 6] + " " + c + ")\n";
  }
  return std::string("SELECT ") + (distinct ? "DISTINCT " : "") + "*\nWHERE {\n" + body + "}\n";
}

}  // namespace semint::test_support
