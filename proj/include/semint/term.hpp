#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace semint {

enum class TermKind : std::uint8_t { iri, literal, blank };

/// True if `iri` starts with a scheme followed by ':' (RFC 3986 scheme syntax).
bool is_absolute_iri(std::string_view iri) noexcept;

/// An RDF node: IRI, literal or blank node.
///
/// Literals always carry a datatype; plain literals are xsd:string and
/// language-tagged ones rdf:langString. Equality is structural over the
/// populated fields, so "1"^^xsd:integer and "01"^^xsd:integer differ.
class Term {
 public:
  /// Throws DataError if `value` is not an absolute IRI.
  static Term iri(std::string value);
  static Term literal(std::string lexical);
  static Term typed_literal(std::string lexical, std::string datatype);
  static Term lang_literal(std::string lexical, std::string language);
  static Term blank(std::string label);

  TermKind kind() const noexcept { return kind_; }
  bool is_iri() const noexcept { return kind_ == TermKind::iri; }
  bool is_literal() const noexcept { return kind_ == TermKind::literal; }
  bool is_blank() const noexcept { return kind_ == TermKind::blank; }

  /// IRI string, literal lexical form, or blank label depending on kind.
  const std::string& value() const noexcept { return value_; }
  const std::string& datatype() const noexcept { return datatype_; }
  const std::string& language() const noexcept { return language_; }

  /// N-Triples rendering: <iri>, "lex", "lex"^^<dt>, "lex"@lang, _:label.
  std::string to_ntriples() const;

  friend bool operator==(const Term&, const Term&) = default;
  friend std::strong_ordering operator<=>(const Term&, const Term&) = default;

 private:
  Term(TermKind kind, std::string value, std::string datatype, std::string language)
      : kind_(kind),
        value_(std::move(value)),
        datatype_(std::move(datatype)),
        language_(std::move(language)) {}

  TermKind kind_;
  std::string value_;
  std::string datatype_;
  std::string language_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;

  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

/// Throws DataError unless the subject is an IRI or blank node and the
/// predicate is an IRI.
void validate_triple(const Triple& t);

/// Escapes a string for use between double quotes in N-Triples / SPARQL.
std::string escape_string_literal(std::string_view s);

}  // namespace semint
