#include "semint/reasoner.hpp"

#include "semint/error.hpp"
#include "semint/vocab.hpp"

#include <unordered_set>

namespace semint::reasoner {

std::vector<ChainAxiom> default_axioms() {
  const std::string broader(vocab::skos_broader);
  std::vector<ChainAxiom> axioms;
  for (auto p : {vocab::ro_participates_in, vocab::ro_has_function, vocab::ro_part_of}) {
    axioms.push_back({std::string(p), broader, std::string(p)});
  }
  return axioms;
}

std::vector<ChainAxiom> parse_axioms(std::string_view text) {
  std::vector<ChainAxiom> axioms;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line.front() == '#') continue;

    std::vector<std::string> cols;
    std::size_t from = 0;
    while (true) {
      auto tab = line.find('\t', from);
      cols.emplace_back(line.substr(from, tab == std::string_view::npos ? line.npos : tab - from));
      if (tab == std::string_view::npos) break;
      from = tab + 1;
    }
    if (cols.size() != 3) throw DataError("expected three tab-separated IRIs", line_no);
    for (auto& c : cols) {
      if (c.size() >= 2 && c.front() == '<' && c.back() == '>') c = c.substr(1, c.size() - 2);
      if (!is_absolute_iri(c)) throw DataError("not an absolute IRI: '" + c + "'", line_no);
    }
    axioms.push_back({cols[0], cols[1], cols[2]});
  }
  return axioms;
}

namespace {

struct IdAxiom {
  TermId first, second, implied;
};

}  // namespace

MaterializeReport materialize(Graph& graph, const std::vector<ChainAxiom>& axioms) {
  MaterializeReport report;
  std::vector<IdAxiom> rules;
  for (const auto& a : axioms) {
    rules.push_back({graph.intern(Term::iri(a.first)), graph.intern(Term::iri(a.second)),
                     graph.intern(Term::iri(a.implied))});
  }
  if (rules.empty()) return report;

  std::vector<IdTriple> delta = graph.id_triples();
  while (!delta.empty()) {
    ++report.rounds;
    std::unordered_set<IdTriple, IdTripleHash> fresh;
    auto propose = [&](IdTriple t) {
      if (!graph.contains(t)) fresh.insert(t);
    };
    for (const IdTriple& d : delta) {
      for (const IdAxiom& r : rules) {
        // d as the left edge (A first B), (B second C) from the graph
        if (d.p == r.first) {
          graph.for_each_match(d.o, r.second, std::nullopt, [&](const IdTriple& right) {
            propose({d.s, r.implied, right.o});
            return true;
          });
        }
        // d as the right edge (B second C), (A first B) from the graph
        if (d.p == r.second) {
          graph.for_each_match(std::nullopt, r.first, d.s, [&](const IdTriple& left) {
            propose({left.s, r.implied, d.o});
            return true;
          });
        }
      }
    }
    delta.assign(fresh.begin(), fresh.end());
    for (const IdTriple& t : delta) graph.insert(t);
    report.derived += delta.size();
  }
  return report;
}

}  // namespace semint::reasoner
