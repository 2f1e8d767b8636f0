#include "semint/term.hpp"

#include "semint/error.hpp"
#include "semint/vocab.hpp"

#include <cctype>

namespace semint {

bool is_absolute_iri(std::string_view iri) noexcept {
  if (iri.empty() || !std::isalpha(static_cast<unsigned char>(iri.front()))) return false;
  for (std::size_t i = 1; i < iri.size(); ++i) {
    const auto c = static_cast<unsigned char>(iri[i]);
    if (c == ':') return true;
    if (!std::isalnum(c) && c != '+' && c != '-' && c != '.') return false;
  }
  return false;
}

Term Term::iri(std::string value) {
  if (!is_absolute_iri(value)) throw DataError("relative or malformed IRI <" + value + ">");
  return Term(TermKind::iri, std::move(value), {}, {});
}

Term Term::literal(std::string lexical) {
  return Term(TermKind::literal, std::move(lexical), std::string(vocab::xsd_string), {});
}

Term Term::typed_literal(std::string lexical, std::string datatype) {
  if (!is_absolute_iri(datatype)) throw DataError("relative datatype IRI <" + datatype + ">");
  return Term(TermKind::literal, std::move(lexical), std::move(datatype), {});
}

Term Term::lang_literal(std::string lexical, std::string language) {
  for (auto& c : language) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return Term(TermKind::literal, std::move(lexical), std::string(vocab::rdf_lang_string),
              std::move(language));
}

Term Term::blank(std::string label) {
  if (label.empty()) throw DataError("empty blank node label");
  return Term(TermKind::blank, std::move(label), {}, {});
}

std::string escape_string_literal(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

std::string Term::to_ntriples() const {
  switch (kind_) {
    case TermKind::iri:
      return "<" + value_ + ">";
    case TermKind::blank:
      return "_:" + value_;
    case TermKind::literal: {
      std::string out = "\"" + escape_string_literal(value_) + "\"";
      if (!language_.empty()) {
        out += "@" + language_;
      } else if (datatype_ != vocab::xsd_string) {
        out += "^^<" + datatype_ + ">";
      }
      return out;
    }
  }
  return {};
}

std::size_t TermHash::operator()(const Term& t) const noexcept {
  std::size_t h = std::hash<std::string>{}(t.value());
  h ^= std::hash<std::string>{}(t.datatype()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h ^= std::hash<std::string>{}(t.language()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h ^ static_cast<std::size_t>(t.kind());
}

void validate_triple(const Triple& t) {
  if (t.subject.is_literal()) {
    throw DataError("literal in subject position: " + t.subject.to_ntriples());
  }
  if (!t.predicate.is_iri()) {
    throw DataError("predicate must be an IRI, got " + t.predicate.to_ntriples());
  }
}

}  // namespace semint
