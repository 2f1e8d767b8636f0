#include "semint/annotation.hpp"

#include "semint/error.hpp"
#include "semint/obo.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

namespace semint::annotation {
namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    if (pos == std::string_view::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    auto line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line, ++line_no);
    start = end + 1;
  }
}

}  // namespace

GafParseResult parse_gaf(std::string_view text) {
  GafParseResult result;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    if (line.empty() || line.front() == '!') return;
    const auto cols = split(line, '\t');
    if (cols.size() < 15 || cols.size() > 17) {
      ++result.malformed;
      result.warnings.push_back(
          {line_no, "expected 15-17 columns, found " + std::to_string(cols.size())});
      return;
    }
    const auto qualifier = trim(cols[3]);
    const auto qualifiers = split(qualifier, '|');
    if (std::find(qualifiers.begin(), qualifiers.end(), "NOT") != qualifiers.end()) {
      ++result.negated;
      result.warnings.push_back({line_no, "negated annotation skipped"});
      return;
    }
    const auto aspect = trim(cols[8]);
    if (aspect != "P" && aspect != "F" && aspect != "C") {
      ++result.malformed;
      result.warnings.push_back({line_no, "unknown aspect '" + std::string(aspect) + "'"});
      return;
    }
    const auto symbol = trim(cols[2]);
    const auto go_id = trim(cols[4]);
    if (symbol.empty() || go_id.find(':') == std::string_view::npos) {
      ++result.malformed;
      result.warnings.push_back({line_no, "missing symbol or GO id"});
      return;
    }
    AnnotationRecord record;
    record.symbol = std::string(symbol);
    record.go_id = std::string(go_id);
    record.aspect = static_cast<Aspect>(aspect.front());
    if (!qualifier.empty()) record.qualifier = std::string(qualifier);
    result.records.push_back(std::move(record));
  });
  return result;
}

std::optional<std::string> normalize_refseq(std::string_view accession) {
  accession = trim(accession);
  if (auto dot = accession.find('.'); dot != std::string_view::npos) {
    const auto version = accession.substr(dot + 1);
    if (version.empty() || !std::all_of(version.begin(), version.end(),
                                        [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      return std::nullopt;
    }
    accession = accession.substr(0, dot);
  }
  if (accession.size() < 4 || !std::isupper(static_cast<unsigned char>(accession[0])) ||
      !std::isupper(static_cast<unsigned char>(accession[1])) || accession[2] != '_') {
    return std::nullopt;
  }
  for (std::size_t i = 3; i < accession.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(accession[i]))) return std::nullopt;
  }
  return std::string(accession);
}

std::string refseq_iri(std::string_view accession) {
  return std::string(vocab::ns::bio2rdf_refseq) + std::string(accession);
}

void SymbolMap::add(const std::string& symbol, std::string_view accession) {
  auto normalized = normalize_refseq(accession);
  if (!normalized) throw DataError("not a RefSeq accession: '" + std::string(accession) + "'");
  auto& list = entries_[symbol];
  if (std::find(list.begin(), list.end(), *normalized) == list.end()) {
    list.push_back(std::move(*normalized));
  }
}

const std::vector<std::string>* SymbolMap::find(std::string_view symbol) const {
  auto it = entries_.find(symbol);
  return it == entries_.end() ? nullptr : &it->second;
}

SymbolMap parse_symbol_map(std::string_view text) {
  SymbolMap map;
  for_each_line(text, [&](std::string_view line, std::size_t line_no) {
    if (trim(line).empty() || line.front() == '#') return;
    const auto cols = split(line, '\t');
    if (cols.size() != 2 || trim(cols[0]).empty()) {
      throw DataError("expected 'symbol<TAB>accessions'", line_no);
    }
    const std::string symbol(trim(cols[0]));
    for (auto accession : split(cols[1], ',')) {
      if (trim(accession).empty()) continue;
      try {
        map.add(symbol, accession);
      } catch (const DataError& e) {
        throw DataError(e.what(), line_no);
      }
    }
  });
  return map;
}

std::string_view aspect_predicate(Aspect aspect) {
  switch (aspect) {
    case Aspect::process: return vocab::ro_participates_in;
    case Aspect::function: return vocab::ro_has_function;
    case Aspect::component: return vocab::ro_part_of;
  }
  return vocab::ro_participates_in;
}

AnnotationGraph annotations_to_rdf(std::span<const AnnotationRecord> records,
                                   const SymbolMap& symbols, std::string_view concept_base) {
  AnnotationGraph out;
  Graph& g = out.graph;
  g.prefixes().bind("ro", std::string(vocab::ns::ro));
  g.prefixes().bind("so", std::string(vocab::ns::so));
  g.prefixes().bind("rdf", std::string(vocab::ns::rdf));

  const Term type = Term::iri(std::string(vocab::rdf_type));
  const Term transcript = Term::iri(std::string(vocab::so_transcript));
  std::unordered_set<std::string> reported;

  for (const auto& record : records) {
    const auto* accessions = symbols.find(record.symbol);
    if (!accessions || accessions->empty()) {
      if (reported.insert(record.symbol).second) out.unmapped_symbols.push_back(record.symbol);
      continue;
    }
    const Term predicate = Term::iri(std::string(aspect_predicate(record.aspect)));
    const Term concept_term = Term::iri(obo::concept_iri(record.go_id, concept_base));
    for (const auto& accession : *accessions) {
      const Term gene = Term::iri(refseq_iri(accession));
      g.insert(gene, type, transcript);
      g.insert(gene, predicate, concept_term);
    }
  }
  return out;
}

}  // namespace semint::annotation
