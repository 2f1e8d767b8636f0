#include "semint/observation.hpp"

#include "semint/annotation.hpp"
#include "semint/error.hpp"
#include "semint/vocab.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <unordered_map>
#include <unordered_set>

namespace semint::observation {
namespace {

// [+-]? (d+ (. d*)? | . d+) ([eE] [+-]? d+)?
bool is_decimal_lexical(std::string_view s) {
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

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

std::vector<CsvRecord> parse_csv(std::string_view text) {
  std::vector<CsvRecord> records;
  CsvRecord current;
  std::string field;
  std::size_t line = 1;
  current.line = 1;
  bool in_quotes = false;
  bool quoted_field = false;
  bool record_open = false;

  auto end_field = [&] {
    current.fields.push_back(std::move(field));
    field.clear();
    quoted_field = false;
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(current));
    current = {};
    record_open = false;
  };

  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (in_quotes) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          in_quotes = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    if (!record_open) {
      current.line = line;
      record_open = true;
    }
    switch (c) {
      case '"':
        if (!field.empty() || quoted_field) throw DataError("stray quote in field", line);
        in_quotes = quoted_field = true;
        break;
      case ',':
        end_field();
        break;
      case '\r':
        if (i + 1 < text.size() && text[i + 1] == '\n') break;
        field += c;
        break;
      case '\n':
        end_record();
        ++line;
        break;
      default:
        if (quoted_field) throw DataError("text after closing quote", line);
        field += c;
    }
  }
  if (in_quotes) throw DataError("unterminated quoted field", current.line);
  if (record_open) end_record();

  // drop blank lines
  std::erase_if(records, [](const CsvRecord& r) { return r.fields.size() == 1 && r.fields[0].empty(); });
  return records;
}

std::vector<ObservationRow> parse_observations(std::string_view text) {
  if (text.starts_with("\xEF\xBB\xBF")) text.remove_prefix(3);
  const auto records = parse_csv(text);
  std::vector<ObservationRow> rows;
  if (records.empty()) throw DataError("missing header line", 1);

  std::string header;
  for (std::size_t i = 0; i < records[0].fields.size(); ++i) {
    if (i) header += ',';
    header += records[0].fields[i];
  }
  if (header != csv_header) {
    throw DataError("header must be '" + std::string(csv_header) + "'", records[0].line);
  }

  rows.reserve(records.size() - 1);
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != 6) {
      throw DataError("expected 6 fields, found " + std::to_string(rec.fields.size()), rec.line);
    }
    ObservationRow row;
    row.line = rec.line;
    row.dataset_title = std::string(trim(rec.fields[0]));
    row.sample_title = std::string(trim(rec.fields[1]));
    if (row.dataset_title.empty() || row.sample_title.empty()) {
      throw DataError("empty dataset or sample title", rec.line);
    }
    auto accession = annotation::normalize_refseq(rec.fields[2]);
    if (!accession) throw DataError("not a RefSeq accession: '" + rec.fields[2] + "'", rec.line);
    row.reporter = std::move(*accession);
    row.quality = rec.fields[3];
    row.unit = rec.fields[4];

    const std::string_view lexical = trim(rec.fields[5]);
    double value = 0.0;
    const char* first = lexical.data();
    const char* last = first + lexical.size();
    if (!lexical.empty() && *first == '+') ++first;
    const auto parsed = std::from_chars(first, last, value);
    if (!is_decimal_lexical(lexical) || parsed.ec != std::errc() || parsed.ptr != last ||
        !std::isfinite(value)) {
      throw DataError("value '" + std::string(lexical) + "' is not a finite number", rec.line);
    }
    row.value = value;
    row.value_lexical = std::string(lexical);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string slug(std::string_view title) {
  std::string out;
  out.reserve(title.size());
  for (unsigned char c : title) {
    if (c == ' ') {
      out += '-';
    } else if (std::isalnum(c) && c < 0x80) {
      out += static_cast<char>(std::tolower(c));
    } else if (c == '-') {
      out += '-';
    }
  }
  return out;
}

IriPolicy::IriPolicy(std::string base) : base_(std::move(base)) {
  if (!is_absolute_iri(base_)) throw DataError("base IRI must be absolute: '" + base_ + "'");
  if (base_.back() != '/' && base_.back() != '#') base_ += '/';
}

std::string IriPolicy::dataset(std::string_view title) const {
  return base_ + "dataset/" + slug(title);
}

std::string IriPolicy::sample(std::string_view title) const {
  return base_ + "sample/" + slug(title);
}

std::string IriPolicy::observation(const ObservationRow& row) const {
  return base_ + "observation/" + slug(row.dataset_title) + "/" + slug(row.sample_title) + "/" +
         row.reporter;
}

Graph rows_to_rdf(std::span<const ObservationRow> rows, const IriPolicy& policy) {
  Graph g;
  g.reserve(rows.size() * 8);
  auto& prefixes = g.prefixes();
  prefixes.bind("rdf", std::string(vocab::ns::rdf));
  prefixes.bind("xsd", std::string(vocab::ns::xsd));
  prefixes.bind("obo", std::string(vocab::ns::obo));
  prefixes.bind("ro", std::string(vocab::ns::ro));
  prefixes.bind("dc", std::string(vocab::ns::dc));
  prefixes.bind("so", std::string(vocab::ns::so));

  auto iri = [](std::string_view s) { return Term::iri(std::string(s)); };
  const Term type = iri(vocab::rdf_type);
  const Term title = iri(vocab::dc_title);
  const Term identifier = iri(vocab::dc_identifier);
  const Term is_about = iri(vocab::iao_is_about);
  const Term has_value = iri(vocab::iao_has_measurement_value);
  const Term quality = iri(vocab::iao_is_quality_measurement_of);
  const Term unit = iri(vocab::iao_has_measurement_unit_label);
  const Term part_of = iri(vocab::ro_part_of);
  const Term datum = iri(vocab::iao_measurement_datum);

  // slug -> title, per kind, to refuse two titles minting one IRI
  std::unordered_map<std::string, std::string> dataset_slugs, sample_slugs;
  auto claim = [](std::unordered_map<std::string, std::string>& seen, const std::string& title,
                  std::size_t line) {
    auto s = slug(title);
    if (s.empty()) throw DataError("title '" + title + "' has an empty slug", line);
    auto [it, fresh] = seen.emplace(std::move(s), title);
    if (!fresh && it->second != title) {
      throw DataError("titles '" + it->second + "' and '" + title + "' map to the same IRI", line);
    }
    return fresh;
  };
  std::unordered_set<std::string> reporters;
  std::unordered_set<std::string> observations;

  for (const auto& row : rows) {
    const Term dataset = iri(policy.dataset(row.dataset_title));
    const Term sample = iri(policy.sample(row.sample_title));
    const Term reporter = iri(annotation::refseq_iri(row.reporter));
    if (claim(dataset_slugs, row.dataset_title, row.line)) {
      g.insert(dataset, type, iri(vocab::iao_data_set));
      g.insert(dataset, title, Term::literal(row.dataset_title));
    }
    if (claim(sample_slugs, row.sample_title, row.line)) {
      g.insert(sample, type, iri(vocab::obi_cell_culture));
      g.insert(sample, title, Term::literal(row.sample_title));
    }
    if (reporters.insert(row.reporter).second) {
      g.insert(reporter, type, iri(vocab::so_transcript));
      g.insert(reporter, identifier, Term::literal(row.reporter));
    }

    std::string obs_iri = policy.observation(row);
    if (!observations.insert(obs_iri).second) {
      throw DataError("second value for dataset '" + row.dataset_title + "', sample '" +
                          row.sample_title + "', reporter " + row.reporter,
                      row.line);
    }
    const Term obs = Term::iri(std::move(obs_iri));
    g.insert(obs, type, datum);
    g.insert(obs, has_value, Term::typed_literal(row.value_lexical, std::string(vocab::xsd_double)));
    g.insert(obs, part_of, dataset);
    g.insert(obs, is_about, sample);
    g.insert(obs, is_about, reporter);
    g.insert(obs, quality, Term::literal(row.quality));
    g.insert(obs, unit, Term::literal(row.unit));
  }
  return g;
}

std::string describe_retrieval_reference(std::string_view sample_title) {
  return "PREFIX obo: <" + std::string(vocab::ns::obo) + ">\n"
         "PREFIX dc: <" + std::string(vocab::ns::dc) + ">\n"
         "PREFIX ro: <" + std::string(vocab::ns::ro) + ">\n"
         "\n"
         "DESCRIBE ?rep ?obs ?data ?samp\n"
         "WHERE {\n"
         "  ?samp dc:title \"" + escape_string_literal(sample_title) + "\" .\n"
         "  # IAO_0000136 = 'is_about'\n"
         "  ?obs obo:IAO_0000136 ?samp .\n"
         "  ?obs ro:part_of ?data .\n"
         "  ?obs obo:IAO_0000136 ?rep .\n"
         "}\n";
}

}  // namespace semint::observation
