#include "semint/ntriples.hpp"

#include "semint/error.hpp"
#include "semint/vocab.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <tuple>
#include <vector>

namespace semint {
namespace {

void append_utf8(std::string& out, std::uint32_t cp) {
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

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no) : line_(line), line_no_(line_no) {}

  // Returns false for blank / comment-only lines.
  bool parse(Triple& out) {
    skip_ws();
    if (at_end() || peek() == '#') return false;
    Term subject = parse_subject();
    skip_ws();
    Term predicate = parse_iri();
    skip_ws();
    Term object = parse_object();
    skip_ws();
    expect('.');
    skip_ws();
    if (!at_end() && peek() != '#') fail("trailing characters after '.'");
    out = Triple{std::move(subject), std::move(predicate), std::move(object)};
    return true;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw DataError("column " + std::to_string(pos_ + 1) + ": " + what, line_no_);
  }

  bool at_end() const { return pos_ >= line_.size(); }
  char peek() const { return line_[pos_]; }

  void skip_ws() {
    while (!at_end() && (peek() == ' ' || peek() == '\t')) ++pos_;
  }

  void expect(char c) {
    if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::uint32_t parse_hex(std::size_t digits) {
    if (pos_ + digits > line_.size()) fail("truncated unicode escape");
    std::uint32_t cp = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      const char c = line_[pos_++];
      cp <<= 4;
      if (c >= '0' && c <= '9') cp |= static_cast<std::uint32_t>(c - '0');
      else if (c >= 'a' && c <= 'f') cp |= static_cast<std::uint32_t>(c - 'a' + 10);
      else if (c >= 'A' && c <= 'F') cp |= static_cast<std::uint32_t>(c - 'A' + 10);
      else fail("bad hex digit in unicode escape");
    }
    return cp;
  }

  std::string parse_iri_text() {
    expect('<');
    std::string iri;
    while (true) {
      if (at_end()) fail("unterminated IRI");
      const char c = line_[pos_++];
      if (c == '>') break;
      if (c == '\\') {
        if (at_end()) fail("unterminated escape in IRI");
        const char e = line_[pos_++];
        if (e == 'u') append_utf8(iri, parse_hex(4));
        else if (e == 'U') append_utf8(iri, parse_hex(8));
        else fail("invalid escape in IRI");
        continue;
      }
      if (c == ' ' || c == '<' || c == '"' || c == '{' || c == '}' || c == '|' || c == '^' ||
          c == '`') {
        --pos_;
        fail(std::string("character '") + c + "' not allowed in IRI");
      }
      iri += c;
    }
    if (!is_absolute_iri(iri)) fail("relative IRI <" + iri + ">");
    return iri;
  }

  Term parse_iri() {
    if (at_end() || peek() != '<') fail("expected IRI");
    return Term::iri(parse_iri_text());
  }

  Term parse_blank() {
    expect('_');
    expect(':');
    const auto start = pos_;
    while (!at_end()) {
      const auto c = static_cast<unsigned char>(peek());
      if (std::isalnum(c) || c == '_' || c == '-' || c == '.' || c >= 0x80) ++pos_;
      else break;
    }
    // a label never ends with '.'
    while (pos_ > start && line_[pos_ - 1] == '.') --pos_;
    if (pos_ == start) fail("empty blank node label");
    return Term::blank(std::string(line_.substr(start, pos_ - start)));
  }

  Term parse_subject() {
    if (at_end()) fail("expected subject");
    if (peek() == '<') return parse_iri();
    if (peek() == '_') return parse_blank();
    if (peek() == '"') fail("literal in subject position");
    fail("expected subject");
  }

  Term parse_object() {
    if (at_end()) fail("expected object");
    if (peek() == '<') return parse_iri();
    if (peek() == '_') return parse_blank();
    if (peek() == '"') return parse_literal();
    fail("expected object");
  }

  Term parse_literal() {
    expect('"');
    std::string lexical;
    while (true) {
      if (at_end()) fail("unterminated string literal");
      const char c = line_[pos_++];
      if (c == '"') break;
      if (c != '\\') {
        lexical += c;
        continue;
      }
      if (at_end()) fail("unterminated escape");
      switch (line_[pos_++]) {
        case 't': lexical += '\t'; break;
        case 'b': lexical += '\b'; break;
        case 'n': lexical += '\n'; break;
        case 'r': lexical += '\r'; break;
        case 'f': lexical += '\f'; break;
        case '"': lexical += '"'; break;
        case '\'': lexical += '\''; break;
        case '\\': lexical += '\\'; break;
        case 'u': append_utf8(lexical, parse_hex(4)); break;
        case 'U': append_utf8(lexical, parse_hex(8)); break;
        default: --pos_; fail("invalid string escape");
      }
    }
    if (!at_end() && peek() == '@') {
      ++pos_;
      const auto start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '-')) {
        ++pos_;
      }
      if (pos_ == start) fail("empty language tag");
      return Term::lang_literal(std::move(lexical), std::string(line_.substr(start, pos_ - start)));
    }
    if (pos_ + 1 < line_.size() && peek() == '^' && line_[pos_ + 1] == '^') {
      pos_ += 2;
      return Term::typed_literal(std::move(lexical), parse_iri_text());
    }
    return Term::literal(std::move(lexical));
  }

  std::string_view line_;
  std::size_t line_no_;
  std::size_t pos_ = 0;
};

// Triples sorted by their (subject, predicate, object) N-Triples forms.
std::vector<IdTriple> canonical_order(const Graph& graph, std::vector<std::string>& rendered) {
  rendered.resize(graph.term_count());
  for (std::size_t i = 0; i < rendered.size(); ++i) {
    rendered[i] = graph.term(static_cast<TermId>(i)).to_ntriples();
  }
  std::vector<IdTriple> order = graph.id_triples();
  std::sort(order.begin(), order.end(), [&](const IdTriple& a, const IdTriple& b) {
    return std::tie(rendered[a.s], rendered[a.p], rendered[a.o]) <
           std::tie(rendered[b.s], rendered[b.p], rendered[b.o]);
  });
  return order;
}

}  // namespace

void parse_ntriples_into(Graph& graph, std::string_view text) {
  graph.reserve(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')));
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++line_no;
    Triple t{Term::blank("x"), Term::blank("x"), Term::blank("x")};
    if (LineParser(line, line_no).parse(t)) graph.insert(t);
    start = end + 1;
  }
}

Graph parse_ntriples(std::string_view text) {
  Graph g;
  parse_ntriples_into(g, text);
  return g;
}

std::string serialize_ntriples(const Graph& graph) {
  std::vector<std::string> nt;
  std::string out;
  for (const auto& t : canonical_order(graph, nt)) {
    out += nt[t.s];
    out += ' ';
    out += nt[t.p];
    out += ' ';
    out += nt[t.o];
    out += " .\n";
  }
  return out;
}

std::string serialize_turtle(const Graph& graph) {
  const auto& prefixes = graph.prefixes();
  std::string out;
  for (const auto& [prefix, ns] : prefixes.bindings()) {
    out += "@prefix " + prefix + ": <" + ns + "> .\n";
  }
  if (!prefixes.bindings().empty()) out += '\n';

  auto render = [&](const Term& t) -> std::string {
    if (t.is_iri()) {
      if (auto q = prefixes.compact(t.value())) return *q;
    } else if (t.is_literal() && t.language().empty() && t.datatype() != vocab::xsd_string) {
      if (auto q = prefixes.compact(t.datatype())) {
        return "\"" + escape_string_literal(t.value()) + "\"^^" + *q;
      }
    }
    return t.to_ntriples();
  };

  std::vector<std::string> nt;
  const auto order = canonical_order(graph, nt);
  for (const auto& t : order) {
    out += render(graph.term(t.s)) + ' ' + render(graph.term(t.p)) + ' ' +
           render(graph.term(t.o)) + " .\n";
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw IoError("error while reading '" + path.string() + "'");
  return std::move(buf).str();
}

void write_text_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw IoError("error while writing '" + path.string() + "'");
}

}  // namespace semint
