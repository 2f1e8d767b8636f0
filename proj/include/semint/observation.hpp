#pragma once

#include "semint/graph.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace semint::observation {

inline constexpr std::string_view csv_header =
    "dataset_title,sample_title,reporter_refseq,quality,unit,value";

struct ObservationRow {
  std::string dataset_title;
  std::string sample_title;
  std::string reporter;  // versionless RefSeq accession
  std::string quality;
  std::string unit;
  double value = 0.0;
  std::string value_lexical;  // as written, used for the xsd:double literal
  std::size_t line = 0;
};

/// Splits RFC 4180 CSV into records. Quoted fields may hold commas, doubled
/// quotes and newlines. Each record carries the line it starts on.
struct CsvRecord {
  std::vector<std::string> fields;
  std::size_t line = 0;
};
std::vector<CsvRecord> parse_csv(std::string_view text);

/// Parses the observation CSV. The header must match `csv_header` exactly.
/// Throws DataError naming the line for a wrong field count, an empty
/// title, a malformed accession or a value that is not a finite decimal.
std::vector<ObservationRow> parse_observations(std::string_view text);

/// lowercase, spaces to '-', anything outside [a-z0-9-] dropped
std::string slug(std::string_view title);

class IriPolicy {
 public:
  explicit IriPolicy(std::string base);

  const std::string& base() const noexcept { return base_; }
  std::string dataset(std::string_view title) const;
  std::string sample(std::string_view title) const;
  std::string observation(const ObservationRow& row) const;

 private:
  std::string base_;
};

/// Dataset, sample and reporter resources once each, seven triples per
/// observation. Throws DataError if two rows share dataset, sample and
/// reporter, or two distinct titles share a slug, since either would merge
/// distinct observations into one node.
Graph rows_to_rdf(std::span<const ObservationRow> rows, const IriPolicy& policy);

/// DESCRIBE query extracting everything about one cell line: the sample, its
/// observations, their datasets and reporters.
std::string describe_retrieval_reference(std::string_view sample_title);

}  // namespace semint::observation
