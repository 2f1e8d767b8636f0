#include "semint/obo.hpp"

#include "semint/error.hpp"

#include <algorithm>
#include <unordered_map>

namespace semint::obo {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

// Drops a trailing `! comment` (unescaped '!') and `{modifier}` block.
std::string_view strip_comment(std::string_view value) {
  for (std::size_t i = 0; i < value.size(); ++i) {
    if (value[i] == '\\') {
      ++i;
    } else if (value[i] == '!') {
      value = value.substr(0, i);
      break;
    }
  }
  value = trim(value);
  if (!value.empty() && value.back() == '}') {
    if (auto open = value.rfind('{'); open != std::string_view::npos) value = trim(value.substr(0, open));
  }
  return value;
}

bool valid_curie(std::string_view id) {
  const auto colon = id.find(':');
  return colon != std::string_view::npos && colon > 0 && colon + 1 < id.size() &&
         id.find_first_of(" \t") == std::string_view::npos;
}

struct Stanza {
  OboTerm term;
  std::size_t start_line = 0;
  bool has_id = false;
  bool has_name = false;
};

void check_acyclic(const OboOntology& onto) {
  enum class Mark { none, active, done };
  std::unordered_map<std::string_view, Mark> mark;
  // path holds (term id, index of the next parent to visit)
  std::vector<std::pair<const OboTerm*, std::size_t>> path;

  for (const auto& [root_id, root] : onto.terms) {
    if (root.obsolete || mark[root_id] != Mark::none) continue;
    path.emplace_back(&root, 0);
    mark[root_id] = Mark::active;
    while (!path.empty()) {
      auto& [term, next] = path.back();
      if (next == term->parents.size()) {
        mark[term->id] = Mark::done;
        path.pop_back();
        continue;
      }
      const std::string& parent_id = term->parents[next++];
      auto it = onto.terms.find(parent_id);
      if (it == onto.terms.end() || it->second.obsolete) continue;
      Mark& m = mark[parent_id];
      if (m == Mark::active) {
        std::string cycle;
        auto from = std::find_if(path.begin(), path.end(),
                                 [&](const auto& frame) { return frame.first->id == parent_id; });
        for (; from != path.end(); ++from) cycle += from->first->id + " -> ";
        throw DataError("is_a cycle: " + cycle + parent_id);
      }
      if (m == Mark::none) {
        m = Mark::active;
        path.emplace_back(&it->second, 0);
      }
    }
  }
}

}  // namespace

OboParseResult parse_obo(std::string_view text) {
  OboParseResult result;
  auto& onto = result.ontology;

  std::optional<Stanza> stanza;
  bool in_other_stanza = false;

  auto finish = [&] {
    if (!stanza) return;
    if (!stanza->has_id) throw DataError("[Term] stanza without id:", stanza->start_line);
    if (!stanza->has_name) stanza->term.name = stanza->term.id;
    const std::string id = stanza->term.id;
    if (!onto.terms.emplace(id, std::move(stanza->term)).second) {
      throw DataError("duplicate term id " + id, stanza->start_line);
    }
    stanza.reset();
  };

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const auto line = trim(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    if (line.empty() || line.front() == '!') continue;

    if (line.front() == '[') {
      finish();
      in_other_stanza = line != "[Term]";
      if (!in_other_stanza) {
        stanza.emplace();
        stanza->start_line = line_no;
      }
      continue;
    }
    if (in_other_stanza) continue;

    const auto colon = line.find(':');
    if (colon == std::string_view::npos) {
      if (stanza) ++result.warnings.ignored_tag_lines;
      continue;
    }
    const auto tag = trim(line.substr(0, colon));
    const auto raw_value = trim(line.substr(colon + 1));

    if (!stanza) {  // header
      if (tag == "format-version") onto.format_version = std::string(strip_comment(raw_value));
      continue;
    }

    OboTerm& term = stanza->term;
    if (tag == "id") {
      const auto id = strip_comment(raw_value);
      if (!valid_curie(id)) throw DataError("malformed term id '" + std::string(id) + "'", line_no);
      term.id = std::string(id);
      stanza->has_id = true;
    } else if (tag == "name") {
      term.name = std::string(strip_comment(raw_value));
      stanza->has_name = true;
    } else if (tag == "namespace") {
      term.ns = std::string(strip_comment(raw_value));
    } else if (tag == "is_a") {
      const auto parent = strip_comment(raw_value);
      if (!valid_curie(parent)) {
        throw DataError("malformed is_a target '" + std::string(parent) + "'", line_no);
      }
      if (std::find(term.parents.begin(), term.parents.end(), parent) == term.parents.end()) {
        term.parents.emplace_back(parent);
      }
    } else if (tag == "is_obsolete") {
      term.obsolete = strip_comment(raw_value) == "true";
    } else {
      ++result.warnings.ignored_tag_lines;
    }
  }
  finish();

  for (const auto& [id, term] : onto.terms) {
    if (term.obsolete) continue;
    for (const auto& parent : term.parents) {
      if (parent == id) throw DataError("is_a cycle: " + id + " -> " + id);
      if (!onto.terms.contains(parent)) {
        result.warnings.dangling_references.push_back(id + " -> " + parent);
      }
    }
  }
  check_acyclic(onto);
  return result;
}

std::string concept_iri(std::string_view curie, std::string_view base) {
  const auto colon = curie.find(':');
  if (colon == std::string_view::npos) throw DataError("not a CURIE: '" + std::string(curie) + "'");
  std::string iri(base);
  iri += curie.substr(0, colon);
  iri += '#';
  iri += curie.substr(colon + 1);
  return iri;
}

Graph to_skos(const OboOntology& ontology, std::string_view base) {
  Graph g;
  g.prefixes().bind("skos", std::string(vocab::ns::skos));
  g.prefixes().bind("rdf", std::string(vocab::ns::rdf));
  if (base == vocab::ns::obo_owl) g.prefixes().bind("go", std::string(vocab::ns::go));

  const Term type = Term::iri(std::string(vocab::rdf_type));
  const Term concept_class = Term::iri(std::string(vocab::skos_concept));
  const Term pref_label = Term::iri(std::string(vocab::skos_pref_label));
  const Term broader = Term::iri(std::string(vocab::skos_broader));

  for (const auto& [id, term] : ontology.terms) {
    if (term.obsolete) continue;
    const Term subject = Term::iri(concept_iri(id, base));
    g.insert(subject, type, concept_class);
    g.insert(subject, pref_label, Term::literal(term.name));
    for (const auto& parent : term.parents) {
      g.insert(subject, broader, Term::iri(concept_iri(parent, base)));
    }
  }
  return g;
}

}  // namespace semint::obo
