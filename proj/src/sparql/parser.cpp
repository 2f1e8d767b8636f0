#include "semint/sparql/parser.hpp"

#include "semint/error.hpp"
#include "semint/vocab.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <set>
#include <unordered_set>

namespace semint::sparql {

bool SelectForm::aggregated() const {
  return !group_by.empty() ||
         std::any_of(projection.begin(), projection.end(), [](const ProjectionItem& item) {
           return std::holds_alternative<CountAggregate>(item);
         });
}

std::vector<std::string> pattern_variables(const std::vector<TriplePattern>& patterns) {
  std::vector<std::string> out;
  auto add = [&](const PatternNode& n) {
    if (const auto* v = std::get_if<Variable>(&n); v && v->projectable() &&
                                                   std::find(out.begin(), out.end(), v->name) == out.end()) {
      out.push_back(v->name);
    }
  };
  for (const auto& p : patterns) {
    add(p.subject);
    add(p.predicate);
    add(p.object);
  }
  return out;
}

std::vector<std::string> select_header(const Query& query) {
  const auto& form = query.select();
  if (form.star) return pattern_variables(query.where);
  std::vector<std::string> header;
  for (const auto& item : form.projection) {
    if (const auto* v = std::get_if<Variable>(&item)) {
      header.push_back(v->name);
    } else {
      header.push_back(std::get<CountAggregate>(item).alias);
    }
  }
  return header;
}

namespace {

enum class Tok { iri, pname, var, blank, string, langtag, number, word, punct, eof };

struct Token {
  Tok kind = Tok::eof;
  std::string text;  // IRI body, prefixed name, variable name, decoded string, ...
  std::size_t line = 1;
  std::size_t column = 1;
};

const std::set<std::string, std::less<>> unsupported_keywords{
    "ASK",    "AVG",     "BASE",   "BIND",     "BOUND",  "CLEAR",        "CONSTRUCT", "CREATE",
    "DELETE", "DROP",    "EXISTS", "FROM",     "GRAPH",  "GROUP_CONCAT", "HAVING",    "IN",
    "INSERT", "LIMIT",   "LOAD",   "MAX",      "MIN",    "MINUS",        "NAMED",     "NOT",
    "OFFSET", "OPTIONAL", "ORDER", "REDUCED",  "REGEX",  "SAMPLE",       "SERVICE",   "STR",
    "SUM",    "UNION",   "VALUES", "WITH",     "LANG",   "DATATYPE",     "IF",        "COALESCE"};

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

void append_utf8(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out += static_cast<char>(cp);
  } else if (cp < 0x800) {
    out += static_cast<char>(0xC0 | (cp >> 6));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else if (cp < 0x10000) {
    out += static_cast<char>(0xE0 | (cp >> 12));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  } else {
    out += static_cast<char>(0xF0 | (cp >> 18));
    out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
    out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
    out += static_cast<char>(0x80 | (cp & 0x3F));
  }
}

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (true) {
      skip_space();
      Token t;
      t.line = line_;
      t.column = column();
      if (pos_ >= text_.size()) {
        out.push_back(t);
        return out;
      }
      lex_one(t);
      out.push_back(std::move(t));
    }
  }

 private:
  std::size_t column() const { return pos_ - line_start_ + 1; }

  [[noreturn]] void fail(const std::string& msg) const { throw QueryError(msg, line_, column()); }

  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' ||
           static_cast<unsigned char>(c) >= 0x80;
  }

  void lex_one(Token& t) {
    const char c = peek();
    if (c == '<') {
      if (auto end = iri_end()) {
        t.kind = Tok::iri;
        t.text = std::string(text_.substr(pos_ + 1, *end - pos_ - 1));
        pos_ = *end + 1;
        return;
      }
      t.kind = Tok::punct;
      t.text = peek(1) == '=' ? "<=" : "<";
      pos_ += t.text.size();
      return;
    }
    if (c == '?' || c == '$') {
      ++pos_;
      const std::size_t from = pos_;
      while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_' ||
                                     static_cast<unsigned char>(peek()) >= 0x80)) {
        ++pos_;
      }
      if (pos_ == from) fail("expected a variable name after '" + std::string(1, c) + "'");
      t.kind = Tok::var;
      t.text = std::string(text_.substr(from, pos_ - from));
      return;
    }
    if (c == '"' || c == '\'') return lex_string(t);
    if (c == '@') {
      ++pos_;
      const std::size_t from = pos_;
      while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-') ++pos_;
      if (pos_ == from) fail("expected a language tag after '@'");
      t.kind = Tok::langtag;
      t.text = std::string(text_.substr(from, pos_ - from));
      return;
    }
    if (c == '_' && peek(1) == ':') {
      pos_ += 2;
      const std::size_t from = pos_;
      while (name_char(peek()) || (peek() == '.' && name_char(peek(1)))) ++pos_;
      if (pos_ == from) fail("expected a blank node label after '_:'");
      t.kind = Tok::blank;
      t.text = std::string(text_.substr(from, pos_ - from));
      return;
    }
    const bool signed_number =
        (c == '+' || c == '-') && (std::isdigit(static_cast<unsigned char>(peek(1))) ||
                                   (peek(1) == '.' && std::isdigit(static_cast<unsigned char>(peek(2)))));
    if (std::isdigit(static_cast<unsigned char>(c)) || signed_number ||
        (c == '.' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
      return lex_number(t);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == ':' || c == '_' ||
        static_cast<unsigned char>(c) >= 0x80) {
      return lex_name(t);
    }
    t.kind = Tok::punct;
    for (std::string_view two : {"<=", ">=", "!=", "^^", "&&", "||"}) {
      if (text_.substr(pos_).starts_with(two)) {
        t.text = std::string(two);
        pos_ += 2;
        return;
      }
    }
    t.text = std::string(1, c);
    ++pos_;
  }

  std::optional<std::size_t> iri_end() const {
    for (std::size_t j = pos_ + 1; j < text_.size(); ++j) {
      const char c = text_[j];
      if (c == '>') return j;
      if (std::isspace(static_cast<unsigned char>(c)) || c == '<' || c == '"' || c == '{' ||
          c == '}' || c == '|' || c == '^' || c == '`' || c == '\\') {
        return std::nullopt;
      }
    }
    return std::nullopt;
  }

  void lex_string(Token& t) {
    const char quote = peek();
    if (peek(1) == quote && peek(2) == quote) fail("long string literals are an unsupported feature");
    ++pos_;
    std::string value;
    while (true) {
      if (pos_ >= text_.size() || peek() == '\n') fail("unterminated string literal");
      const char c = peek();
      if (c == quote) {
        ++pos_;
        break;
      }
      if (c != '\\') {
        value += c;
        ++pos_;
        continue;
      }
      const char e = peek(1);
      pos_ += 2;
      switch (e) {
        case 't': value += '\t'; break;
        case 'n': value += '\n'; break;
        case 'r': value += '\r'; break;
        case 'b': value += '\b'; break;
        case 'f': value += '\f'; break;
        case '"': value += '"'; break;
        case '\'': value += '\''; break;
        case '\\': value += '\\'; break;
        case 'u':
        case 'U': {
          const std::size_t n = e == 'u' ? 4 : 8;
          if (pos_ + n > text_.size()) fail("truncated \\" + std::string(1, e) + " escape");
          std::uint32_t cp = 0;
          const auto hex = text_.substr(pos_, n);
          auto [ptr, ec] = std::from_chars(hex.data(), hex.data() + n, cp, 16);
          if (ec != std::errc() || ptr != hex.data() + n) fail("bad \\" + std::string(1, e) + " escape");
          append_utf8(value, static_cast<char32_t>(cp));
          pos_ += n;
          break;
        }
        default: fail("unknown escape '\\" + std::string(1, e) + "'");
      }
    }
    t.kind = Tok::string;
    t.text = std::move(value);
  }

  void lex_number(Token& t) {
    const std::size_t from = pos_;
    auto digits = [&] {
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    };
    if (peek() == '+' || peek() == '-') ++pos_;
    digits();
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      ++pos_;
      digits();
    }
    if ((peek() == 'e' || peek() == 'E') &&
        (std::isdigit(static_cast<unsigned char>(peek(1))) ||
         ((peek(1) == '+' || peek(1) == '-') && std::isdigit(static_cast<unsigned char>(peek(2)))))) {
      pos_ += 2;
      digits();
    }
    t.kind = Tok::number;
    t.text = std::string(text_.substr(from, pos_ - from));
  }

  void lex_name(Token& t) {
    const std::size_t from = pos_;
    auto scan = [&](bool allow_colon) {
      while (pos_ < text_.size()) {
        const char c = peek();
        if (name_char(c) || (allow_colon && (c == ':' || c == '%'))) {
          ++pos_;
        } else if (c == '.' && (name_char(peek(1)) || (allow_colon && peek(1) == ':'))) {
          ++pos_;
        } else {
          break;
        }
      }
    };
    scan(false);
    if (peek() == ':') {
      ++pos_;
      scan(true);
      t.kind = Tok::pname;
    } else {
      t.kind = Tok::word;
    }
    t.text = std::string(text_.substr(from, pos_ - from));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
};

struct VarUse {
  std::string name;
  std::size_t line, column;
};

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Query run() {
    Query q;
    prologue(q);
    const Token& form = peek();
    const std::string kw = form.kind == Tok::word ? upper(form.text) : "";
    if (kw == "SELECT") {
      next();
      q.form = select_clause();
    } else if (kw == "DESCRIBE") {
      next();
      q.form = describe_clause(q);
    } else {
      unexpected(form, "SELECT or DESCRIBE");
    }
    if (is_word("WHERE")) {
      next();
      group(q);
    } else if (q.is_select() || peek().kind != Tok::eof) {
      group(q);
    }
    if (is_word("GROUP")) {
      if (!q.is_select()) fail(peek(), "GROUP BY is only allowed with SELECT");
      next();
      expect_word("BY");
      auto& form_ref = std::get<SelectForm>(q.form);
      do {
        if (peek().kind == Tok::punct && peek().text == "(") {
          next();
          form_ref.group_by.push_back(var_use(expect(Tok::var, "a variable"), grouped_));
          expect_punct(")");
        } else {
          form_ref.group_by.push_back(var_use(expect(Tok::var, "a variable"), grouped_));
        }
      } while (peek().kind == Tok::var || (peek().kind == Tok::punct && peek().text == "("));
    }
    if (peek().kind != Tok::eof) unexpected(peek(), "end of query");
    validate(q);
    return q;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_ < toks_.size() - 1 ? i_++ : i_]; }

  [[noreturn]] static void fail(const Token& t, const std::string& msg) {
    throw QueryError(msg, t.line, t.column);
  }

  static std::string describe(const Token& t) {
    switch (t.kind) {
      case Tok::eof: return "end of query";
      case Tok::iri: return "'<" + t.text + ">'";
      case Tok::var: return "'?" + t.text + "'";
      case Tok::string: return "string \"" + t.text + "\"";
      case Tok::blank: return "'_:" + t.text + "'";
      case Tok::langtag: return "'@" + t.text + "'";
      default: return "'" + t.text + "'";
    }
  }

  [[noreturn]] static void unexpected(const Token& t, const std::string& wanted) {
    if (t.kind == Tok::word && unsupported_keywords.contains(upper(t.text))) {
      fail(t, "unsupported feature: " + upper(t.text));
    }
    if (t.kind == Tok::punct && (t.text == "&&" || t.text == "||" || t.text == "!")) {
      fail(t, "unsupported feature: boolean filter operator " + describe(t));
    }
    fail(t, "unexpected " + describe(t) + ", expected " + wanted);
  }

  bool is_word(std::string_view kw) const {
    return peek().kind == Tok::word && upper(peek().text) == kw;
  }
  bool is_punct(std::string_view p) const { return peek().kind == Tok::punct && peek().text == p; }

  const Token& expect(Tok kind, const std::string& wanted) {
    if (peek().kind != kind) unexpected(peek(), wanted);
    return next();
  }
  void expect_punct(std::string_view p) {
    if (!is_punct(p)) unexpected(peek(), "'" + std::string(p) + "'");
    next();
  }
  void expect_word(std::string_view kw) {
    if (!is_word(kw)) unexpected(peek(), std::string(kw));
    next();
  }

  std::string var_use(const Token& t, std::vector<VarUse>& uses) {
    uses.push_back({t.text, t.line, t.column});
    return t.text;
  }

  void prologue(Query& q) {
    while (true) {
      if (is_word("BASE")) fail(peek(), "unsupported feature: BASE");
      if (!is_word("PREFIX")) return;
      next();
      const Token& name = expect(Tok::pname, "a prefix name such as 'dc:'");
      if (name.text.back() != ':' || name.text.find(':') != name.text.size() - 1) {
        fail(name, "expected a prefix name ending in ':', found " + describe(name));
      }
      const Token& iri = expect(Tok::iri, "an IRI in angle brackets");
      if (!is_absolute_iri(iri.text)) fail(iri, "prefix IRI must be absolute: " + describe(iri));
      q.prefixes.bind(name.text.substr(0, name.text.size() - 1), iri.text);
    }
  }

  SelectForm select_clause() {
    SelectForm form;
    if (is_word("DISTINCT")) {
      next();
      form.distinct = true;
    }
    if (is_punct("*")) {
      next();
      form.star = true;
      return form;
    }
    while (true) {
      if (peek().kind == Tok::var) {
        form.projection.emplace_back(Variable{var_use(next(), projected_)});
      } else if (is_punct("(")) {
        next();
        form.projection.emplace_back(count_aggregate());
      } else {
        break;
      }
    }
    if (form.projection.empty()) unexpected(peek(), "a variable, '(' or '*'");
    return form;
  }

  CountAggregate count_aggregate() {
    CountAggregate agg;
    if (!is_word("COUNT")) unexpected(peek(), "COUNT");
    next();
    expect_punct("(");
    if (is_word("DISTINCT")) {
      next();
      agg.distinct = true;
    }
    if (is_punct("*")) {
      next();
    } else {
      agg.variable = var_use(expect(Tok::var, "a variable or '*'"), counted_);
    }
    expect_punct(")");
    expect_word("AS");
    const Token& alias = expect(Tok::var, "an alias variable");
    agg.alias = alias.text;
    aliases_.push_back({alias.text, alias.line, alias.column});
    expect_punct(")");
    return agg;
  }

  DescribeForm describe_clause(Query& q) {
    DescribeForm form;
    if (is_punct("*")) {
      next();
      describe_star_ = true;
      return form;
    }
    while (true) {
      if (peek().kind == Tok::var) {
        form.targets.emplace_back(Variable{var_use(next(), described_)});
      } else if (peek().kind == Tok::iri || peek().kind == Tok::pname) {
        form.targets.emplace_back(iri_term(next(), q));
      } else {
        break;
      }
    }
    if (form.targets.empty()) unexpected(peek(), "a variable or IRI to describe");
    return form;
  }

  Term iri_term(const Token& t, const Query& q) {
    if (t.kind == Tok::iri) {
      if (!is_absolute_iri(t.text)) fail(t, "relative IRI " + describe(t) + " is not supported");
      return Term::iri(t.text);
    }
    try {
      return q.prefixes.expand(t.text);
    } catch (const UnknownPrefixError& e) {
      fail(t, e.what());
    }
  }

  void group(Query& q) {
    expect_punct("{");
    while (true) {
      if (is_punct("}")) {
        next();
        return;
      }
      if (is_word("FILTER")) {
        next();
        q.filters.push_back(filter());
        if (is_punct(".")) next();
        continue;
      }
      if (is_punct("{")) fail(peek(), "unsupported feature: nested group pattern");
      if (is_punct("[") || is_punct("(")) fail(peek(), "unsupported feature: blank node or collection syntax");
      triples_block(q);
      if (is_punct(".")) {
        next();
      } else if (!is_punct("}") && !is_word("FILTER")) {
        unexpected(peek(), "'.', '}' or FILTER");
      }
    }
  }

  PatternNode subject_node(const Query& q) {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::var: next(); pattern_vars_.push_back({t.text, t.line, t.column}); return Variable{t.text};
      case Tok::iri:
      case Tok::pname: return iri_term(next(), q);
      case Tok::blank: next(); return Variable{"_:" + t.text};
      default: unexpected(t, "a subject (variable, IRI or blank node)");
    }
  }

  PatternNode verb(const Query& q) {
    const Token& t = peek();
    if (is_punct("^")) fail(t, "unsupported feature: property paths");
    if (t.kind == Tok::word && t.text == "a") {
      next();
      return Term::iri(std::string(vocab::rdf_type));
    }
    if (t.kind == Tok::var) {
      next();
      pattern_vars_.push_back({t.text, t.line, t.column});
      return Variable{t.text};
    }
    if (t.kind == Tok::iri || t.kind == Tok::pname) return iri_term(next(), q);
    unexpected(t, "a predicate (variable, IRI or 'a')");
  }

  PatternNode object_node(const Query& q) {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::var: next(); pattern_vars_.push_back({t.text, t.line, t.column}); return Variable{t.text};
      case Tok::iri:
      case Tok::pname: return iri_term(next(), q);
      case Tok::blank: next(); return Variable{"_:" + t.text};
      case Tok::string: {
        next();
        std::string value = t.text;
        if (peek().kind == Tok::langtag) return Term::lang_literal(std::move(value), next().text);
        if (is_punct("^^")) {
          next();
          const Token& dt = peek();
          if (dt.kind != Tok::iri && dt.kind != Tok::pname) unexpected(dt, "a datatype IRI");
          return Term::typed_literal(std::move(value), iri_term(next(), q).value());
        }
        return Term::literal(std::move(value));
      }
      case Tok::number: {
        next();
        std::string_view dt = vocab::xsd_integer;
        if (t.text.find_first_of("eE") != std::string::npos) {
          dt = vocab::xsd_double;
        } else if (t.text.find('.') != std::string::npos) {
          dt = vocab::xsd_decimal;
        }
        return Term::typed_literal(t.text, std::string(dt));
      }
      case Tok::word:
        if (t.text == "true" || t.text == "false") {
          next();
          return Term::typed_literal(t.text, std::string(vocab::ns::xsd) + "boolean");
        }
        [[fallthrough]];
      default: unexpected(t, "an object (variable, IRI, literal or blank node)");
    }
  }

  void triples_block(Query& q) {
    const PatternNode subject = subject_node(q);
    while (true) {
      const PatternNode predicate = verb(q);
      if (is_punct("/") || is_punct("|") || is_punct("*") || is_punct("+")) {
        fail(peek(), "unsupported feature: property paths");
      }
      while (true) {
        q.where.push_back({subject, predicate, object_node(q)});
        if (!is_punct(",")) break;
        next();
      }
      if (!is_punct(";")) return;
      while (is_punct(";")) next();
      if (is_punct(".") || is_punct("}") || is_word("FILTER")) return;
    }
  }

  FilterExpr filter() {
    if (peek().kind == Tok::word) fail(peek(), "unsupported feature: FILTER function " + describe(peek()));
    expect_punct("(");
    FilterExpr f = filter_body();
    expect_punct(")");
    return f;
  }

  FilterExpr filter_body() {
    if (!is_punct("(")) return comparison();
    next();
    FilterExpr f = filter_body();
    expect_punct(")");
    return f;
  }

  double number(const Token& t) {
    double v = 0.0;
    std::string_view s = t.text;
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
      fail(t, "numeric constant " + describe(t) + " is not finite");
    }
    return v;
  }

  static std::optional<Comparator> comparator(const Token& t) {
    if (t.kind != Tok::punct) return std::nullopt;
    if (t.text == "<") return Comparator::lt;
    if (t.text == "<=") return Comparator::le;
    if (t.text == ">") return Comparator::gt;
    if (t.text == ">=") return Comparator::ge;
    if (t.text == "=") return Comparator::eq;
    if (t.text == "!=") return Comparator::ne;
    return std::nullopt;
  }

  static Comparator flip(Comparator c) {
    switch (c) {
      case Comparator::lt: return Comparator::gt;
      case Comparator::le: return Comparator::ge;
      case Comparator::gt: return Comparator::lt;
      case Comparator::ge: return Comparator::le;
      default: return c;
    }
  }

  FilterExpr comparison() {
    const Token& lhs = peek();
    if (lhs.kind == Tok::word) fail(lhs, "unsupported feature: FILTER function " + describe(lhs));
    if (lhs.kind != Tok::var && lhs.kind != Tok::number) unexpected(lhs, "a variable or number");
    next();
    const Token& op_tok = peek();
    const auto op = comparator(op_tok);
    if (!op) unexpected(op_tok, "a comparison operator");
    next();
    const Token& rhs = peek();
    if (rhs.kind != Tok::var && rhs.kind != Tok::number) unexpected(rhs, "a variable or number");
    next();
    if (lhs.kind == rhs.kind) {
      fail(lhs, "FILTER must compare one variable with one number");
    }
    if (is_punct("&&") || is_punct("||")) unexpected(peek(), "')'");
    FilterExpr f;
    if (lhs.kind == Tok::var) {
      f.variable = lhs.text;
      f.op = *op;
      f.constant = number(rhs);
    } else {
      f.variable = rhs.text;
      f.op = flip(*op);
      f.constant = number(lhs);
    }
    return f;
  }

  void validate(Query& q) {
    std::unordered_set<std::string> in_patterns;
    for (const auto& v : pattern_vars_) in_patterns.insert(v.name);
    auto require = [&](const std::vector<VarUse>& uses, const std::string& role) {
      for (const auto& u : uses) {
        if (!in_patterns.contains(u.name)) {
          throw QueryError(role + " variable ?" + u.name + " does not appear in WHERE", u.line,
                           u.column);
        }
      }
    };
    require(projected_, "projected");
    require(described_, "described");
    require(counted_, "counted");
    require(grouped_, "grouped");

    if (describe_star_) {
      auto& form = std::get<DescribeForm>(q.form);
      for (auto& name : pattern_variables(q.where)) form.targets.emplace_back(Variable{std::move(name)});
    }

    if (!q.is_select()) return;
    const auto& form = q.select();
    for (const auto& a : aliases_) {
      if (in_patterns.contains(a.name)) {
        throw QueryError("alias ?" + a.name + " is already a pattern variable", a.line, a.column);
      }
    }
    if (!form.aggregated()) return;
    if (form.star) throw QueryError("SELECT * cannot be combined with GROUP BY", 1, 1);
    for (const auto& u : projected_) {
      if (std::find(form.group_by.begin(), form.group_by.end(), u.name) == form.group_by.end()) {
        throw QueryError("?" + u.name + " must be grouped or aggregated", u.line, u.column);
      }
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
  bool describe_star_ = false;
  std::vector<VarUse> pattern_vars_, projected_, described_, counted_, grouped_, aliases_;
};

}  // namespace

Query parse_query(std::string_view text) {
  return Parser(Lexer(text).run()).run();
}

}  // namespace semint::sparql
