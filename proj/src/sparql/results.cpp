#include "semint/sparql/results.hpp"

#include "semint/vocab.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>

namespace semint::sparql {
namespace {

nlohmann::ordered_json term_json(const Term& t) {
  nlohmann::ordered_json j;
  switch (t.kind()) {
    case TermKind::iri:
      j["type"] = "uri";
      j["value"] = t.value();
      break;
    case TermKind::blank:
      j["type"] = "bnode";
      j["value"] = t.value();
      break;
    case TermKind::literal:
      j["type"] = "literal";
      j["value"] = t.value();
      if (!t.language().empty()) {
        j["xml:lang"] = t.language();
      } else if (t.datatype() != vocab::xsd_string) {
        j["datatype"] = t.datatype();
      }
      break;
  }
  return j;
}

bool bare_integer(const Term& t) {
  if (t.kind() != TermKind::literal || t.datatype() != vocab::xsd_integer) return false;
  std::string_view v = t.value();
  if (!v.empty() && (v.front() == '-' || v.front() == '+')) v.remove_prefix(1);
  return !v.empty() && std::all_of(v.begin(), v.end(), [](char c) {
    return std::isdigit(static_cast<unsigned char>(c));
  });
}

}  // namespace

std::string to_json(const SolutionTable& table) {
  nlohmann::ordered_json doc;
  doc["head"]["vars"] = table.header;
  auto bindings = nlohmann::ordered_json::array();
  for (const auto& row : table.rows) {
    auto binding = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i]) binding[table.header[i]] = term_json(*row[i]);
    }
    bindings.push_back(std::move(binding));
  }
  doc["results"]["bindings"] = std::move(bindings);
  return doc.dump(2) + "\n";
}

std::string to_tsv(const SolutionTable& table) {
  std::string out;
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    if (i) out += '\t';
    out += '?';
    out += table.header[i];
  }
  out += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += '\t';
      if (!row[i]) continue;
      out += bare_integer(*row[i]) ? row[i]->value() : row[i]->to_ntriples();
    }
    out += '\n';
  }
  return out;
}

}  // namespace semint::sparql
