#include "semint/sparql/evaluator.hpp"

#include "semint/vocab.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <deque>
#include <limits>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace semint::sparql {
namespace {

constexpr TermId kUnbound = std::numeric_limits<TermId>::max();

struct KeyHash {
  std::size_t operator()(const std::vector<TermId>& key) const noexcept {
    std::size_t h = key.size();
    for (TermId id : key) h ^= id + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

bool numeric_lexical(std::string_view s) {
  std::size_t i = 0;
  auto digits = [&] {
    const std::size_t from = i;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
    return i - from;
  };
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  std::size_t mantissa = digits();
  if (i < s.size() && s[i] == '.') {
    ++i;
    mantissa += digits();
  }
  if (mantissa == 0) return false;
  if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
    ++i;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
    if (digits() == 0) return false;
  }
  return i == s.size();
}

// Position of a pattern after compilation: a constant id, a variable slot,
// or a constant absent from the graph (the pattern cannot match).
struct Slot {
  enum class Kind { constant, variable, missing } kind = Kind::constant;
  TermId id = 0;  // term id or variable slot
};

struct CompiledPattern {
  Slot s, p, o;
};

class Evaluation {
 public:
  Evaluation(const Graph& graph, const Query& query, const EvalOptions& options)
      : graph_(graph) {
    for (const auto& pattern : query.where) {
      compiled_.push_back({compile(pattern.subject), compile(pattern.predicate), compile(pattern.object)});
    }
    plan_ = options.plan ? *options.plan : plan_bgp(query.where, graph);

    // attach each filter to the first join depth that binds its variable
    filters_at_.resize(plan_.size() + 1);
    std::vector<bool> bound(slot_names_.size(), false);
    std::vector<std::size_t> first_bound(slot_names_.size(), plan_.size());
    for (std::size_t d = 0; d < plan_.size(); ++d) {
      const auto& cp = compiled_[plan_[d]];
      for (const Slot* s : {&cp.s, &cp.p, &cp.o}) {
        if (s->kind == Slot::Kind::variable && !bound[s->id]) {
          bound[s->id] = true;
          first_bound[s->id] = d;
        }
      }
    }
    for (const auto& f : query.filters) {
      auto it = slots_.find(f.variable);
      if (it == slots_.end()) {
        never_ = true;  // unbound variable: the filter errors, so no row survives
        continue;
      }
      filters_at_[first_bound[it->second]].push_back({it->second, f.op, f.constant});
    }
  }

  std::optional<std::size_t> slot(const std::string& name) const {
    auto it = slots_.find(name);
    if (it == slots_.end()) return std::nullopt;
    return it->second;
  }

  std::size_t slot_count() const { return slot_names_.size(); }

  /// Calls `emit(binding)` once per solution.
  template <class Fn>
  void run(Fn&& emit) {
    if (never_) return;
    for (const auto& cp : compiled_) {
      if (cp.s.kind == Slot::Kind::missing || cp.p.kind == Slot::Kind::missing ||
          cp.o.kind == Slot::Kind::missing) {
        return;
      }
    }
    std::vector<TermId> binding(slot_names_.size(), kUnbound);
    join(0, binding, emit);
  }

 private:
  struct BoundFilter {
    std::size_t slot;
    Comparator op;
    double constant;
  };

  Slot compile(const PatternNode& node) {
    if (const auto* v = std::get_if<Variable>(&node)) {
      auto [it, fresh] = slots_.emplace(v->name, slot_names_.size());
      if (fresh) slot_names_.push_back(v->name);
      return {Slot::Kind::variable, static_cast<TermId>(it->second)};
    }
    if (auto id = graph_.lookup(std::get<Term>(node))) return {Slot::Kind::constant, *id};
    return {Slot::Kind::missing, 0};
  }

  std::optional<TermId> resolve(const Slot& s, const std::vector<TermId>& binding) const {
    if (s.kind == Slot::Kind::constant) return s.id;
    if (binding[s.id] != kUnbound) return binding[s.id];
    return std::nullopt;
  }

  bool passes(const BoundFilter& f, TermId value) {
    auto it = numeric_cache_.find(value);
    if (it == numeric_cache_.end()) it = numeric_cache_.emplace(value, numeric_value(graph_.term(value))).first;
    return it->second && compare(*it->second, f.op, f.constant);
  }

  template <class Fn>
  void join(std::size_t depth, std::vector<TermId>& binding, Fn& emit) {
    if (depth == plan_.size()) {
      emit(static_cast<const std::vector<TermId>&>(binding));
      return;
    }
    const CompiledPattern& cp = compiled_[plan_[depth]];
    graph_.for_each_match(resolve(cp.s, binding), resolve(cp.p, binding), resolve(cp.o, binding),
                          [&](const IdTriple& t) {
                            TermId newly[3];
                            int n = 0;
                            bool ok = true;
                            for (auto [slot, value] : {std::pair{&cp.s, t.s}, std::pair{&cp.p, t.p},
                                                       std::pair{&cp.o, t.o}}) {
                              if (slot->kind != Slot::Kind::variable) continue;
                              TermId& b = binding[slot->id];
                              if (b == kUnbound) {
                                b = value;
                                newly[n++] = slot->id;
                              } else if (b != value) {
                                ok = false;  // repeated variable within the pattern
                                break;
                              }
                            }
                            if (ok) {
                              for (const auto& f : filters_at_[depth]) {
                                if (!passes(f, binding[f.slot])) {
                                  ok = false;
                                  break;
                                }
                              }
                            }
                            if (ok) join(depth + 1, binding, emit);
                            for (int i = 0; i < n; ++i) binding[newly[i]] = kUnbound;
                            return true;
                          });
  }

  const Graph& graph_;
  std::vector<CompiledPattern> compiled_;
  std::unordered_map<std::string, std::size_t> slots_;
  std::vector<std::string> slot_names_;
  std::vector<std::size_t> plan_;
  std::vector<std::vector<BoundFilter>> filters_at_;
  std::unordered_map<TermId, std::optional<double>> numeric_cache_;
  bool never_ = false;
};

Term integer_literal(std::size_t n) {
  return Term::typed_literal(std::to_string(n), std::string(vocab::xsd_integer));
}

}  // namespace

std::optional<double> numeric_value(const Term& term) {
  if (term.kind() != TermKind::literal) return std::nullopt;
  std::string_view s = term.value();
  if (!numeric_lexical(s)) return std::nullopt;
  if (s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) return std::nullopt;
  return v;
}

bool compare(double lhs, Comparator op, double rhs) {
  switch (op) {
    case Comparator::lt: return lhs < rhs;
    case Comparator::le: return lhs <= rhs;
    case Comparator::gt: return lhs > rhs;
    case Comparator::ge: return lhs >= rhs;
    case Comparator::eq: return lhs == rhs;
    case Comparator::ne: return lhs != rhs;
  }
  return false;
}

double estimate_cardinality(const TriplePattern& pattern, const std::vector<std::string>& bound,
                            const Graph& graph) {
  std::optional<TermId> ids[3];
  const PatternNode* nodes[3] = {&pattern.subject, &pattern.predicate, &pattern.object};
  for (int i = 0; i < 3; ++i) {
    if (const auto* t = std::get_if<Term>(nodes[i])) {
      ids[i] = graph.lookup(*t);
      if (!ids[i]) return 0.0;
    }
  }
  double estimate = static_cast<double>(graph.count(ids[0], ids[1], ids[2]));
  for (int i = 0; i < 3; ++i) {
    const auto* v = std::get_if<Variable>(nodes[i]);
    if (!v || std::find(bound.begin(), bound.end(), v->name) == bound.end()) continue;
    std::size_t distinct = 1;
    if (i == 1) {
      distinct = graph.distinct_predicates();
    } else if (ids[1]) {
      distinct = i == 0 ? graph.predicate_subjects(*ids[1]) : graph.predicate_objects(*ids[1]);
    } else {
      distinct = i == 0 ? graph.distinct_subjects() : graph.distinct_objects();
    }
    estimate /= static_cast<double>(std::max<std::size_t>(distinct, 1));
  }
  return estimate;
}

std::vector<std::size_t> plan_bgp(const std::vector<TriplePattern>& patterns, const Graph& graph) {
  std::vector<std::size_t> plan;
  std::vector<bool> used(patterns.size(), false);
  std::vector<std::string> bound;
  while (plan.size() < patterns.size()) {
    std::size_t best = patterns.size();
    double best_estimate = 0.0;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
      if (used[i]) continue;
      const double e = estimate_cardinality(patterns[i], bound, graph);
      if (best == patterns.size() || e < best_estimate) {
        best = i;
        best_estimate = e;
      }
    }
    used[best] = true;
    plan.push_back(best);
    for (const PatternNode* n : {&patterns[best].subject, &patterns[best].predicate, &patterns[best].object}) {
      if (const auto* v = std::get_if<Variable>(n);
          v && std::find(bound.begin(), bound.end(), v->name) == bound.end()) {
        bound.push_back(v->name);
      }
    }
  }
  return plan;
}

SolutionTable evaluate_select(const Graph& graph, const Query& query, const EvalOptions& options) {
  const SelectForm& form = query.select();
  Evaluation eval(graph, query, options);
  SolutionTable table;
  table.header = select_header(query);

  auto slot_of = [&](const std::string& name) {
    const auto s = eval.slot(name);
    return s ? static_cast<long>(*s) : -1L;
  };
  auto term_of = [&](TermId id) -> std::optional<Term> {
    if (id == kUnbound) return std::nullopt;
    return graph.term(id);
  };

  if (!form.aggregated()) {
    std::unordered_set<std::vector<TermId>, KeyHash> seen;
    std::vector<long> slots;
    for (const auto& name : table.header) slots.push_back(slot_of(name));
    std::vector<TermId> key(slots.size());
    eval.run([&](const std::vector<TermId>& binding) {
      for (std::size_t i = 0; i < slots.size(); ++i) {
        key[i] = slots[i] < 0 ? kUnbound : binding[static_cast<std::size_t>(slots[i])];
      }
      if (form.distinct && !seen.insert(key).second) return;
      std::vector<std::optional<Term>> row;
      row.reserve(key.size());
      for (TermId id : key) row.push_back(term_of(id));
      table.rows.push_back(std::move(row));
    });
    return table;
  }

  struct AggState {
    std::size_t count = 0;
    std::unordered_set<TermId> values;
    std::unordered_set<std::vector<TermId>, KeyHash> rows;
  };
  struct Group {
    std::vector<TermId> key;
    std::vector<AggState> aggs;
  };
  std::vector<const CountAggregate*> aggregates;
  for (const auto& item : form.projection) {
    if (const auto* a = std::get_if<CountAggregate>(&item)) aggregates.push_back(a);
  }
  std::vector<long> group_slots;
  for (const auto& name : form.group_by) group_slots.push_back(slot_of(name));
  std::vector<long> agg_slots;
  for (const auto* a : aggregates) agg_slots.push_back(a->variable ? slot_of(*a->variable) : -1L);

  std::vector<Group> groups;
  std::unordered_map<std::vector<TermId>, std::size_t, KeyHash> group_index;
  std::vector<TermId> key(group_slots.size());
  eval.run([&](const std::vector<TermId>& binding) {
    for (std::size_t i = 0; i < group_slots.size(); ++i) {
      key[i] = group_slots[i] < 0 ? kUnbound : binding[static_cast<std::size_t>(group_slots[i])];
    }
    auto [it, fresh] = group_index.emplace(key, groups.size());
    if (fresh) groups.push_back({key, std::vector<AggState>(aggregates.size())});
    Group& g = groups[it->second];
    for (std::size_t a = 0; a < aggregates.size(); ++a) {
      AggState& st = g.aggs[a];
      if (!aggregates[a]->variable) {  // COUNT(*)
        if (!aggregates[a]->distinct || st.rows.insert(binding).second) ++st.count;
        continue;
      }
      const TermId v = agg_slots[a] < 0 ? kUnbound : binding[static_cast<std::size_t>(agg_slots[a])];
      if (v == kUnbound) continue;
      if (!aggregates[a]->distinct || st.values.insert(v).second) ++st.count;
    }
  });
  if (groups.empty() && form.group_by.empty()) {
    groups.push_back({{}, std::vector<AggState>(aggregates.size())});
  }

  std::set<std::vector<std::optional<Term>>> distinct_rows;
  for (const auto& g : groups) {
    std::vector<std::optional<Term>> row;
    std::size_t a = 0;
    for (const auto& item : form.projection) {
      if (const auto* v = std::get_if<Variable>(&item)) {
        const auto pos = std::find(form.group_by.begin(), form.group_by.end(), v->name) - form.group_by.begin();
        row.push_back(term_of(g.key[static_cast<std::size_t>(pos)]));
      } else {
        row.push_back(integer_literal(g.aggs[a++].count));
      }
    }
    if (form.distinct && !distinct_rows.insert(row).second) continue;
    table.rows.push_back(std::move(row));
  }
  return table;
}

Graph evaluate_describe(const Graph& graph, const Query& query, const EvalOptions& options) {
  const DescribeForm& form = query.describe();
  std::vector<TermId> roots;
  std::unordered_set<TermId> seen;
  std::vector<std::size_t> slots;
  for (const auto& target : form.targets) {
    if (const auto* t = std::get_if<Term>(&target)) {
      if (auto id = graph.lookup(*t); id && seen.insert(*id).second) roots.push_back(*id);
    }
  }

  Evaluation eval(graph, query, options);
  for (const auto& target : form.targets) {
    if (const auto* v = std::get_if<Variable>(&target)) {
      if (auto s = eval.slot(v->name)) slots.push_back(*s);
    }
  }
  if (!slots.empty()) {
    eval.run([&](const std::vector<TermId>& binding) {
      for (std::size_t s : slots) {
        const TermId id = binding[s];
        if (id != kUnbound && seen.insert(id).second) roots.push_back(id);
      }
    });
  }

  Graph out;
  for (const auto& [prefix, ns] : graph.prefixes().bindings()) out.prefixes().bind(prefix, ns);
  std::vector<TermId> copied(graph.term_count(), kUnbound);
  auto copy = [&](TermId id) {
    if (copied[id] == kUnbound) copied[id] = out.intern(graph.term(id));
    return copied[id];
  };
  std::deque<TermId> queue(roots.begin(), roots.end());
  std::unordered_set<TermId> expanded_blanks;
  while (!queue.empty()) {
    const TermId subject = queue.front();
    queue.pop_front();
    graph.for_each_match(subject, std::nullopt, std::nullopt, [&](const IdTriple& t) {
      out.insert(IdTriple{copy(t.s), copy(t.p), copy(t.o)});
      if (graph.term(t.o).kind() == TermKind::blank && !seen.contains(t.o) &&
          expanded_blanks.insert(t.o).second) {
        queue.push_back(t.o);
      }
      return true;
    });
  }
  return out;
}

}  // namespace semint::sparql
