#include "semint/annotation.hpp"
#include "semint/error.hpp"
#include "semint/ntriples.hpp"
#include "semint/observation.hpp"
#include "semint/vocab.hpp"

#include <gtest/gtest.h>

#include <map>
#include <random>

namespace semint::observation {
namespace {

Term iri(std::string_view s) { return Term::iri(std::string(s)); }

const std::string header = std::string(csv_header) + "\n";
const IriPolicy policy("http://example.org/omics/");

TEST(CsvTest, QuotedFields) {
  const auto recs = parse_csv("a,\"b,c\",\"say \"\"hi\"\"\"\r\nx,\"multi\nline\",z\n\nlast,,");
  ASSERT_EQ(recs.size(), 3u);
  EXPECT_EQ(recs[0].fields, (std::vector<std::string>{"a", "b,c", "say \"hi\""}));
  EXPECT_EQ(recs[1].fields, (std::vector<std::string>{"x", "multi\nline", "z"}));
  EXPECT_EQ(recs[1].line, 2u);
  EXPECT_EQ(recs[2].line, 5u);
  EXPECT_EQ(recs[2].fields, (std::vector<std::string>{"last", "", ""}));
  EXPECT_THROW(parse_csv("\"open\n"), DataError);
  EXPECT_THROW(parse_csv("\"a\"b\n"), DataError);
}

TEST(ObservationParseTest, SingleRow) {
  const auto rows = parse_observations(
      header + "Methylation Relative,YUMAC,NM_000546,relative methylation,ratio,2.73\n");
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].dataset_title, "Methylation Relative");
  EXPECT_EQ(rows[0].sample_title, "YUMAC");
  EXPECT_EQ(rows[0].reporter, "NM_000546");
  EXPECT_DOUBLE_EQ(rows[0].value, 2.73);
  EXPECT_EQ(rows[0].value_lexical, "2.73");
}

TEST(ObservationParseTest, HeaderOnly) { EXPECT_TRUE(parse_observations(header).empty()); }

TEST(ObservationParseTest, NonNumericValueNamesLine) {
  try {
    parse_observations(header + "D,S,NM_1,q,u,abc\n");
    FAIL();
  } catch (const DataError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  for (const char* bad : {"", "1.2.3", "inf", "nan", "0x1p3", "1e", ".", "1e999"}) {
    EXPECT_THROW(parse_observations(header + "D,S,NM_1,q,u," + bad + "\n"), DataError) << bad;
  }
}

TEST(ObservationParseTest, Structure) {
  EXPECT_THROW(parse_observations(header + "D,S,NM_1,q,u\n"), DataError);
  EXPECT_THROW(parse_observations("dataset_title,sample_title,reporter,quality,unit,value\n"),
               DataError);
  EXPECT_THROW(parse_observations(header + ",S,NM_1,q,u,1\n"), DataError);
  EXPECT_THROW(parse_observations(header + "D,S,P04637,q,u,1\n"), DataError);
  EXPECT_THROW(parse_observations(""), DataError);
  const auto rows = parse_observations(header + "D,S,NM_1.4,q,u,-1.5e2\n");
  EXPECT_EQ(rows[0].reporter, "NM_1");
  EXPECT_DOUBLE_EQ(rows[0].value, -150.0);
}

TEST(SlugTest, Rules) {
  EXPECT_EQ(slug("Methylation Relative"), "methylation-relative");
  EXPECT_EQ(slug("AZA Pre-Post Treatment Ratios"), "aza-pre-post-treatment-ratios");
  EXPECT_EQ(slug("YUMAC"), "yumac");
  EXPECT_EQ(slug("a/b (c)"), "ab-c");
}

TEST(RowsToRdfTest, OneRowThirteenTriples) {
  const auto rows = parse_observations(
      header + "Methylation Relative,YUMAC,NM_000546,relative methylation,ratio,2.73\n");
  const Graph g = rows_to_rdf(rows, policy);
  EXPECT_EQ(g.size(), 13u);
  const Term obs = iri("http://example.org/omics/observation/methylation-relative/yumac/NM_000546");
  const Term dataset = iri("http://example.org/omics/dataset/methylation-relative");
  const Term sample = iri("http://example.org/omics/sample/yumac");
  const Term gene = iri("http://bio2rdf.org/refseq:NM_000546");
  EXPECT_TRUE(g.contains({obs, iri(vocab::iao_has_measurement_value),
                          Term::typed_literal("2.73", std::string(vocab::xsd_double))}));
  EXPECT_TRUE(g.contains({obs, iri(vocab::ro_part_of), dataset}));
  EXPECT_TRUE(g.contains({obs, iri(vocab::iao_is_about), sample}));
  EXPECT_TRUE(g.contains({obs, iri(vocab::iao_is_about), gene}));
  EXPECT_TRUE(g.contains({obs, iri(vocab::rdf_type), iri(vocab::iao_measurement_datum)}));
  EXPECT_TRUE(g.contains({dataset, iri(vocab::rdf_type), iri(vocab::iao_data_set)}));
  EXPECT_TRUE(g.contains({sample, iri(vocab::rdf_type), iri(vocab::obi_cell_culture)}));
  EXPECT_TRUE(g.contains({sample, iri(vocab::dc_title), Term::literal("YUMAC")}));
  EXPECT_TRUE(g.contains({gene, iri(vocab::rdf_type), iri(vocab::so_transcript)}));
  EXPECT_TRUE(g.contains({gene, iri(vocab::dc_identifier), Term::literal("NM_000546")}));
}

TEST(RowsToRdfTest, SharedEntitiesOnce) {
  const auto rows = parse_observations(header + "D,S,NM_1,q,u,1\nE,S,NM_1,q,u,2\n");
  const Graph g = rows_to_rdf(rows, policy);
  EXPECT_EQ(g.size(), 7u * 2 + 2 * 2 + 2 + 2);
}

TEST(RowsToRdfTest, CollisionsRejected) {
  EXPECT_THROW(rows_to_rdf(parse_observations(header + "D,S,NM_1,q,u,1\nD,S,NM_1.2,q,u,2\n"), policy),
               DataError);
  EXPECT_THROW(rows_to_rdf(parse_observations(header + "A B,S,NM_1,q,u,1\na-b,S,NM_2,q,u,2\n"), policy),
               DataError);
  EXPECT_THROW(rows_to_rdf(parse_observations(header + "D,!!,NM_1,q,u,1\n"), policy), DataError);
}

TEST(RowsToRdfTest, PolicyNormalizesBase) {
  EXPECT_EQ(IriPolicy("http://x.org/base").sample("S 1"), "http://x.org/base/sample/s-1");
  EXPECT_THROW(IriPolicy("relative/"), DataError);
}

// Random CSVs: per-observation shape invariants, the row count law,
// round-trip of every value and deterministic output.
TEST(RowsToRdfTest, RandomCsvProperties) {
  std::mt19937 rng(11);
  const std::vector<std::string> datasets{"Methylation Relative", "AZA Pre-Post Treatment Ratios",
                                          "Third, quoted"};
  const std::vector<std::string> samples{"WW165", "YUMAC", "YU GEN8"};
  for (int trial = 0; trial < 15; ++trial) {
    std::string csv = header;
    std::map<std::tuple<std::string, std::string, std::string>, std::string> cells;
    const int n = static_cast<int>(rng() % 80);
    for (int i = 0; i < n; ++i) {
      const auto& d = datasets[rng() % datasets.size()];
      const auto& s = samples[rng() % samples.size()];
      const std::string a = "NM_" + std::to_string(rng() % 25);
      if (cells.contains({d, s, a})) continue;
      const std::string v = std::to_string(static_cast<int>(rng() % 900) - 300) + "." +
                            std::to_string(rng() % 100);
      cells[{d, s, a}] = v;
      const std::string quoted_d = d.find(',') != std::string::npos ? "\"" + d + "\"" : d;
      csv += quoted_d + "," + s + "," + a + ".1,q,u," + v + "\n";
    }
    const auto rows = parse_observations(csv);
    const Graph g = rows_to_rdf(rows, policy);

    std::set<std::string> ds, ss, as;
    for (const auto& [key, v] : cells) {
      ds.insert(std::get<0>(key));
      ss.insert(std::get<1>(key));
      as.insert(std::get<2>(key));
    }
    EXPECT_EQ(g.size(), 7 * cells.size() + 2 * (ds.size() + ss.size() + as.size()));

    const auto datum = iri(vocab::iao_measurement_datum);
    const auto observations = g.match(std::nullopt, iri(vocab::rdf_type), datum);
    EXPECT_EQ(observations.size(), cells.size());
    for (const auto& t : observations) {
      EXPECT_EQ(g.match(t.subject, iri(vocab::iao_has_measurement_value), std::nullopt).size(), 1u);
      EXPECT_EQ(g.match(t.subject, iri(vocab::ro_part_of), std::nullopt).size(), 1u);
      EXPECT_EQ(g.match(t.subject, iri(vocab::iao_is_about), std::nullopt).size(), 2u);
    }
    for (const auto& [key, v] : cells) {
      const auto& [d, s, a] = key;
      const Term obs = iri(policy.base() + "observation/" + slug(d) + "/" + slug(s) + "/" + a);
      EXPECT_TRUE(g.contains({obs, iri(vocab::ro_part_of), iri(policy.dataset(d))}));
      EXPECT_TRUE(g.contains({obs, iri(vocab::iao_is_about), iri(policy.sample(s))}));
      EXPECT_TRUE(g.contains({obs, iri(vocab::iao_is_about), iri(annotation::refseq_iri(a))}));
      EXPECT_TRUE(g.contains({obs, iri(vocab::iao_has_measurement_value),
                              Term::typed_literal(v, std::string(vocab::xsd_double))}));
    }
    EXPECT_EQ(serialize_ntriples(rows_to_rdf(parse_observations(csv), policy)),
              serialize_ntriples(g));
  }
}

TEST(DescribeReferenceTest, NamesSample) {
  const auto q = describe_retrieval_reference("YUMAC");
  EXPECT_NE(q.find("?samp dc:title \"YUMAC\""), std::string::npos);
  EXPECT_NE(q.find("DESCRIBE ?rep ?obs ?data ?samp"), std::string::npos);
  EXPECT_NE(q.find("<http://purl.obolibrary.org/obo/>"), std::string::npos);
}

}  // namespace
}  // namespace semint::observation
