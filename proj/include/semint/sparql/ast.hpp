#pragma once

#include "semint/graph.hpp"
#include "semint/term.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace semint::sparql {

struct Variable {
  std::string name;  // without the leading '?'; "_:x" for a blank node in a pattern

  bool operator==(const Variable&) const = default;
  bool projectable() const { return !name.starts_with("_:"); }
};

using PatternNode = std::variant<Term, Variable>;

inline bool is_variable(const PatternNode& n) { return std::holds_alternative<Variable>(n); }

struct TriplePattern {
  PatternNode subject;
  PatternNode predicate;
  PatternNode object;
};

enum class Comparator { lt, le, gt, ge, eq, ne };

/// `?variable <op> constant`; a constant written on the left is flipped.
struct FilterExpr {
  std::string variable;
  Comparator op = Comparator::gt;
  double constant = 0.0;
};

struct CountAggregate {
  bool distinct = false;
  std::optional<std::string> variable;  // nullopt for COUNT(*)
  std::string alias;
};

using ProjectionItem = std::variant<Variable, CountAggregate>;

struct SelectForm {
  bool distinct = false;
  bool star = false;
  std::vector<ProjectionItem> projection;
  std::vector<std::string> group_by;

  bool aggregated() const;
};

struct DescribeForm {
  std::vector<PatternNode> targets;  // variables or IRIs
};

struct Query {
  PrefixMap prefixes;
  std::variant<SelectForm, DescribeForm> form;
  std::vector<TriplePattern> where;
  std::vector<FilterExpr> filters;

  bool is_select() const { return std::holds_alternative<SelectForm>(form); }
  const SelectForm& select() const { return std::get<SelectForm>(form); }
  const DescribeForm& describe() const { return std::get<DescribeForm>(form); }
};

/// Distinct named variables of the WHERE clause in order of first appearance.
std::vector<std::string> pattern_variables(const std::vector<TriplePattern>& patterns);

/// Result column names of a SELECT, in projection order.
std::vector<std::string> select_header(const Query& query);

}  // namespace semint::sparql
