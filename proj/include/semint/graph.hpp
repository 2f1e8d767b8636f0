#pragma once

#include "semint/term.hpp"

#include <absl/container/flat_hash_map.h>
#include <absl/container/flat_hash_set.h>
#include <absl/container/inlined_vector.h>

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semint {

/// Handle of an interned Term, valid only for the Graph that issued it.
using TermId = std::uint32_t;

struct IdTriple {
  TermId s;
  TermId p;
  TermId o;

  friend bool operator==(const IdTriple&, const IdTriple&) = default;
  friend auto operator<=>(const IdTriple&, const IdTriple&) = default;
};

struct IdTripleHash {
  std::size_t operator()(const IdTriple& t) const noexcept {
    std::uint64_t h = (static_cast<std::uint64_t>(t.s) << 32) ^ t.o;
    h ^= static_cast<std::uint64_t>(t.p) * 0x9e3779b97f4a7c15ULL;
    h ^= h >> 29;
    h *= 0xbf58476d1ce4e5b9ULL;
    return static_cast<std::size_t>(h ^ (h >> 32));
  }
};

/// prefix -> namespace IRI, with qname expansion.
class PrefixMap {
 public:
  PrefixMap() = default;

  void bind(std::string prefix, std::string namespace_iri);
  std::optional<std::string> find(std::string_view prefix) const;

  /// "obo:IAO_0000136" -> <http://purl.obolibrary.org/obo/IAO_0000136>.
  /// Throws UnknownPrefixError for an unbound prefix.
  Term expand(std::string_view qname) const;

  /// Longest-namespace match, if the local part is a plain name.
  std::optional<std::string> compact(std::string_view iri) const;

  const std::map<std::string, std::string, std::less<>>& bindings() const { return bindings_; }

  /// rdf, xsd, skos, obo, ro, dc, go, so.
  static PrefixMap standard();

 private:
  std::map<std::string, std::string, std::less<>> bindings_;
};

/// Free-function form of PrefixMap::expand.
Term expand_qname(const PrefixMap& prefixes, std::string_view qname);

struct MergeReport {
  std::size_t added = 0;
  /// IRIs used as subject in both graphs before the merge.
  std::size_t shared_subjects = 0;
};

/// In-memory triple set with interned terms and SPO / POS / OSP indexes.
///
/// Mutation is single-writer. Const member functions never mutate, so a graph
/// that is no longer written may be read from any number of threads.
class Graph {
 public:
  Graph() = default;

  /// Returns true iff the triple was not already present.
  /// Throws DataError for a literal subject or non-IRI predicate.
  bool insert(const Triple& t);
  bool insert(const Term& s, const Term& p, const Term& o) { return insert(Triple{s, p, o}); }

  /// Id-level insert; ids must come from this graph's intern().
  bool insert(IdTriple t);

  bool contains(const Triple& t) const;
  bool contains(IdTriple t) const { return set_.contains(t); }

  /// Pre-sizes storage for about `triples` more statements.
  void reserve(std::size_t triples);

  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }

  /// Every triple agreeing with the bound positions.
  std::vector<Triple> match(const std::optional<Term>& s, const std::optional<Term>& p,
                            const std::optional<Term>& o) const;

  /// Id-level match; `fn` receives each matching IdTriple. Stops early if
  /// `fn` returns false.
  template <class Fn>
  void for_each_match(std::optional<TermId> s, std::optional<TermId> p,
                      std::optional<TermId> o, Fn&& fn) const;

  /// Exact number of triples agreeing with the bound positions.
  std::size_t count(std::optional<TermId> s, std::optional<TermId> p,
                    std::optional<TermId> o) const;

  TermId intern(const Term& t);
  std::optional<TermId> lookup(const Term& t) const;
  const Term& term(TermId id) const { return terms_[id]; }
  std::size_t term_count() const noexcept { return terms_.size(); }
  Triple resolve(IdTriple t) const { return {terms_[t.s], terms_[t.p], terms_[t.o]}; }

  /// Triples in insertion order.
  const std::vector<IdTriple>& id_triples() const noexcept { return triples_; }
  std::vector<Triple> triples() const;

  // Index views, used to check that the three indexes agree.
  std::vector<IdTriple> spo_view() const;
  std::vector<IdTriple> pos_view() const;
  std::vector<IdTriple> osp_view() const;

  // Statistics for join ordering.
  std::size_t distinct_subjects() const noexcept { return spo_.heads.size(); }
  std::size_t distinct_predicates() const noexcept { return pos_.heads.size(); }
  std::size_t distinct_objects() const noexcept { return osp_.heads.size(); }
  std::size_t predicate_subjects(TermId p) const;
  std::size_t predicate_objects(TermId p) const;

  PrefixMap& prefixes() noexcept { return prefixes_; }
  const PrefixMap& prefixes() const noexcept { return prefixes_; }

  /// Set equality of the statements, independent of interning order.
  bool same_statements(const Graph& other) const;

 private:
  using Ids = absl::InlinedVector<TermId, 2>;
  struct Head {
    std::size_t total = 0;
    Ids seconds;  // distinct second keys, first-seen order
  };
  /// One permutation of the triples: a -> (b, ...), (a, b) -> (c, ...).
  struct Index {
    absl::flat_hash_map<TermId, Head> heads;
    absl::flat_hash_map<std::uint64_t, Ids> tails;

    static std::uint64_t key(TermId a, TermId b) { return (static_cast<std::uint64_t>(a) << 32) | b; }
    const Head* head(TermId a) const;
    const Ids* tail(TermId a, TermId b) const;
    /// Returns true iff (a, b) was new.
    bool insert(TermId a, TermId b, TermId c);
  };

  static std::vector<IdTriple> index_view(const Index& index, int order);

  std::vector<Term> terms_;
  absl::flat_hash_map<Term, TermId, TermHash> term_ids_;
  std::vector<IdTriple> triples_;
  absl::flat_hash_set<IdTriple, IdTripleHash> set_;
  Index spo_;
  Index pos_;
  Index osp_;
  absl::flat_hash_map<TermId, std::size_t> predicate_subjects_;
  PrefixMap prefixes_;
};

template <class Fn>
void Graph::for_each_match(std::optional<TermId> s, std::optional<TermId> p,
                           std::optional<TermId> o, Fn&& fn) const {
  // Walks one index from a bound first key; `make` restores (s, p, o) order.
  auto scan = [&fn](const Index& index, TermId a, std::optional<TermId> b, auto make) {
    auto visit = [&](TermId kb) {
      const Ids* cs = index.tail(a, kb);
      if (!cs) return true;
      for (TermId c : *cs) {
        if (!fn(make(a, kb, c))) return false;
      }
      return true;
    };
    if (b) {
      visit(*b);
      return;
    }
    const Head* h = index.head(a);
    if (!h) return;
    for (TermId kb : h->seconds) {
      if (!visit(kb)) return;
    }
  };

  if (s && p && o) {
    IdTriple t{*s, *p, *o};
    if (set_.contains(t)) fn(t);
  } else if (s) {
    if (o) {
      scan(osp_, *o, s, [](TermId oo, TermId ss, TermId pp) { return IdTriple{ss, pp, oo}; });
    } else {
      scan(spo_, *s, p, [](TermId ss, TermId pp, TermId oo) { return IdTriple{ss, pp, oo}; });
    }
  } else if (p) {
    scan(pos_, *p, o, [](TermId pp, TermId oo, TermId ss) { return IdTriple{ss, pp, oo}; });
  } else if (o) {
    scan(osp_, *o, std::nullopt, [](TermId oo, TermId ss, TermId pp) { return IdTriple{ss, pp, oo}; });
  } else {
    for (const auto& t : triples_) {
      if (!fn(t)) return;
    }
  }
}

/// Set union of `source` into `target`. Blank labels of `source` that already
/// occur in `target` are renamed apart first.
MergeReport merge(Graph& target, const Graph& source);

}  // namespace semint
