#include "semint/graph.hpp"

#include "semint/error.hpp"
#include "semint/vocab.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace semint {

// ---------------------------------------------------------------------------
// PrefixMap

void PrefixMap::bind(std::string prefix, std::string namespace_iri) {
  bindings_[std::move(prefix)] = std::move(namespace_iri);
}

std::optional<std::string> PrefixMap::find(std::string_view prefix) const {
  auto it = bindings_.find(prefix);
  if (it == bindings_.end()) return std::nullopt;
  return it->second;
}

Term PrefixMap::expand(std::string_view qname) const {
  const auto colon = qname.find(':');
  if (colon == std::string_view::npos) {
    throw UnknownPrefixError(std::string(qname));
  }
  const auto prefix = qname.substr(0, colon);
  auto it = bindings_.find(prefix);
  if (it == bindings_.end()) throw UnknownPrefixError(std::string(prefix));
  return Term::iri(it->second + std::string(qname.substr(colon + 1)));
}

std::optional<std::string> PrefixMap::compact(std::string_view iri) const {
  const std::pair<const std::string, std::string>* best = nullptr;
  for (const auto& binding : bindings_) {
    const auto& ns = binding.second;
    if (iri.size() > ns.size() && iri.starts_with(ns) &&
        (!best || ns.size() > best->second.size())) {
      best = &binding;
    }
  }
  if (!best) return std::nullopt;
  const auto local = iri.substr(best->second.size());
  // Conservative PN_LOCAL subset: safe in both Turtle and SPARQL.
  if (!std::isalnum(static_cast<unsigned char>(local.front())) && local.front() != '_') {
    return std::nullopt;
  }
  for (char c : local) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return std::nullopt;
  }
  return best->first + ":" + std::string(local);
}

PrefixMap PrefixMap::standard() {
  PrefixMap m;
  m.bind("rdf", std::string(vocab::ns::rdf));
  m.bind("xsd", std::string(vocab::ns::xsd));
  m.bind("skos", std::string(vocab::ns::skos));
  m.bind("obo", std::string(vocab::ns::obo));
  m.bind("ro", std::string(vocab::ns::ro));
  m.bind("dc", std::string(vocab::ns::dc));
  m.bind("go", std::string(vocab::ns::go));
  m.bind("so", std::string(vocab::ns::so));
  return m;
}

Term expand_qname(const PrefixMap& prefixes, std::string_view qname) {
  return prefixes.expand(qname);
}

// ---------------------------------------------------------------------------
// Graph

TermId Graph::intern(const Term& t) {
  auto [it, inserted] = term_ids_.try_emplace(t, static_cast<TermId>(terms_.size()));
  if (inserted) terms_.push_back(t);
  return it->second;
}

std::optional<TermId> Graph::lookup(const Term& t) const {
  auto it = term_ids_.find(t);
  if (it == term_ids_.end()) return std::nullopt;
  return it->second;
}

const Graph::Head* Graph::Index::head(TermId a) const {
  auto it = heads.find(a);
  return it == heads.end() ? nullptr : &it->second;
}

const Graph::Ids* Graph::Index::tail(TermId a, TermId b) const {
  auto it = tails.find(key(a, b));
  return it == tails.end() ? nullptr : &it->second;
}

bool Graph::Index::insert(TermId a, TermId b, TermId c) {
  auto& cs = tails[key(a, b)];
  const bool fresh = cs.empty();
  cs.push_back(c);
  auto& h = heads[a];
  ++h.total;
  if (fresh) h.seconds.push_back(b);
  return fresh;
}

void Graph::reserve(std::size_t triples) {
  const std::size_t n = triples_.size() + triples;
  triples_.reserve(n);
  set_.reserve(n);
  term_ids_.reserve(n);
  for (Index* index : {&spo_, &pos_, &osp_}) index->tails.reserve(n);
}

bool Graph::insert(const Triple& t) {
  validate_triple(t);
  return insert(IdTriple{intern(t.subject), intern(t.predicate), intern(t.object)});
}

bool Graph::insert(IdTriple t) {
  if (!set_.insert(t).second) return false;
  triples_.push_back(t);
  if (spo_.insert(t.s, t.p, t.o)) ++predicate_subjects_[t.p];
  pos_.insert(t.p, t.o, t.s);
  osp_.insert(t.o, t.s, t.p);
  return true;
}

bool Graph::contains(const Triple& t) const {
  const auto s = lookup(t.subject);
  const auto p = lookup(t.predicate);
  const auto o = lookup(t.object);
  return s && p && o && set_.contains(IdTriple{*s, *p, *o});
}

std::vector<Triple> Graph::match(const std::optional<Term>& s, const std::optional<Term>& p,
                                 const std::optional<Term>& o) const {
  std::optional<TermId> sid, pid, oid;
  if (s && !(sid = lookup(*s))) return {};
  if (p && !(pid = lookup(*p))) return {};
  if (o && !(oid = lookup(*o))) return {};
  std::vector<Triple> out;
  for_each_match(sid, pid, oid, [&](const IdTriple& t) {
    out.push_back(resolve(t));
    return true;
  });
  return out;
}

std::size_t Graph::count(std::optional<TermId> s, std::optional<TermId> p,
                         std::optional<TermId> o) const {
  auto two_level = [](const Index& index, TermId a, TermId b) -> std::size_t {
    const Ids* cs = index.tail(a, b);
    return cs ? cs->size() : 0;
  };
  auto one_level = [](const Index& index, TermId a) -> std::size_t {
    const Head* h = index.head(a);
    return h ? h->total : 0;
  };
  if (s && p && o) return set_.contains(IdTriple{*s, *p, *o}) ? 1 : 0;
  if (s && p) return two_level(spo_, *s, *p);
  if (p && o) return two_level(pos_, *p, *o);
  if (s && o) return two_level(osp_, *o, *s);
  if (s) return one_level(spo_, *s);
  if (p) return one_level(pos_, *p);
  if (o) return one_level(osp_, *o);
  return triples_.size();
}

std::vector<Triple> Graph::triples() const {
  std::vector<Triple> out;
  out.reserve(triples_.size());
  for (const auto& t : triples_) out.push_back(resolve(t));
  return out;
}

std::vector<IdTriple> Graph::index_view(const Index& index, int order) {
  std::vector<IdTriple> out;
  for (const auto& [a, h] : index.heads) {
    for (TermId b : h.seconds) {
      for (TermId c : *index.tail(a, b)) {
        switch (order) {
          case 0: out.push_back({a, b, c}); break;  // spo
          case 1: out.push_back({c, a, b}); break;  // pos
          default: out.push_back({b, c, a}); break;  // osp
        }
      }
    }
  }
  return out;
}

std::vector<IdTriple> Graph::spo_view() const { return index_view(spo_, 0); }
std::vector<IdTriple> Graph::pos_view() const { return index_view(pos_, 1); }
std::vector<IdTriple> Graph::osp_view() const { return index_view(osp_, 2); }

std::size_t Graph::predicate_subjects(TermId p) const {
  auto it = predicate_subjects_.find(p);
  return it == predicate_subjects_.end() ? 0 : it->second;
}

std::size_t Graph::predicate_objects(TermId p) const {
  const Head* h = pos_.head(p);
  return h ? h->seconds.size() : 0;
}

bool Graph::same_statements(const Graph& other) const {
  if (size() != other.size()) return false;
  for (const auto& t : triples_) {
    if (!other.contains(resolve(t))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// merge

MergeReport merge(Graph& target, const Graph& source) {
  MergeReport report;

  std::unordered_set<TermId> seen_subjects;
  for (const auto& t : source.id_triples()) {
    if (!seen_subjects.insert(t.s).second) continue;
    const Term& subject = source.term(t.s);
    if (!subject.is_iri()) continue;
    if (auto id = target.lookup(subject); id && target.count(*id, std::nullopt, std::nullopt) > 0) {
      ++report.shared_subjects;
    }
  }

  // Source blank labels already present in target get a fresh label unused
  // by either graph.
  std::unordered_set<std::string> used;
  for (std::size_t i = 0; i < target.term_count(); ++i) {
    if (target.term(static_cast<TermId>(i)).is_blank()) {
      used.insert(target.term(static_cast<TermId>(i)).value());
    }
  }
  std::map<std::string, std::string> renamed;
  for (std::size_t i = 0; i < source.term_count(); ++i) {
    const Term& t = source.term(static_cast<TermId>(i));
    if (t.is_blank() && used.contains(t.value())) renamed.emplace(t.value(), std::string{});
  }
  if (!renamed.empty()) {
    for (std::size_t i = 0; i < source.term_count(); ++i) {
      const Term& t = source.term(static_cast<TermId>(i));
      if (t.is_blank()) used.insert(t.value());
    }
    std::size_t counter = 0;
    for (auto& [from, to] : renamed) {
      do {
        to = from + "_m" + std::to_string(++counter);
      } while (used.contains(to));
      used.insert(to);
    }
  }
  auto map_term = [&](const Term& t) -> Term {
    if (!t.is_blank()) return t;
    auto it = renamed.find(t.value());
    return it == renamed.end() ? t : Term::blank(it->second);
  };

  for (const auto& t : source.id_triples()) {
    const Triple triple = source.resolve(t);
    if (target.insert(Triple{map_term(triple.subject), triple.predicate, map_term(triple.object)})) {
      ++report.added;
    }
  }
  for (const auto& [prefix, ns] : source.prefixes().bindings()) {
    if (!target.prefixes().find(prefix)) target.prefixes().bind(prefix, ns);
  }
  return report;
}

}  // namespace semint
