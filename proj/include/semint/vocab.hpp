#pragma once

// IRIs of every class and property the pipeline reads or writes. The numeric
// IAO codes that queries do not pin down (measurement datum, data set, quality
// and unit properties) live here and nowhere else.

#include <string_view>

namespace semint::vocab {

namespace ns {
inline constexpr std::string_view rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view xsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view skos = "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view obo = "http://purl.obolibrary.org/obo/";
inline constexpr std::string_view ro = "http://www.obofoundry.org/ro/ro.owl#";
inline constexpr std::string_view dc = "http://purl.org/dc/elements/1.1/";
inline constexpr std::string_view go = "http://purl.org/obo/owl/GO#";
inline constexpr std::string_view so = "http://purl.org/obo/owl/SO#";
// OBO id spaces map to <base><IDSPACE>#<local>, e.g. GO:0006915 -> go:0006915
inline constexpr std::string_view obo_owl = "http://purl.org/obo/owl/";
inline constexpr std::string_view bio2rdf_refseq = "http://bio2rdf.org/refseq:";
}  // namespace ns

inline constexpr std::string_view rdf_type = "http://www.w3.org/1999/02/22-rdf-syntax-ns#type";
inline constexpr std::string_view rdf_lang_string =
    "http://www.w3.org/1999/02/22-rdf-syntax-ns#langString";

inline constexpr std::string_view xsd_string = "http://www.w3.org/2001/XMLSchema#string";
inline constexpr std::string_view xsd_double = "http://www.w3.org/2001/XMLSchema#double";
inline constexpr std::string_view xsd_decimal = "http://www.w3.org/2001/XMLSchema#decimal";
inline constexpr std::string_view xsd_integer = "http://www.w3.org/2001/XMLSchema#integer";

inline constexpr std::string_view skos_concept = "http://www.w3.org/2004/02/skos/core#Concept";
inline constexpr std::string_view skos_pref_label = "http://www.w3.org/2004/02/skos/core#prefLabel";
inline constexpr std::string_view skos_broader = "http://www.w3.org/2004/02/skos/core#broader";

inline constexpr std::string_view ro_part_of = "http://www.obofoundry.org/ro/ro.owl#part_of";
inline constexpr std::string_view ro_participates_in =
    "http://www.obofoundry.org/ro/ro.owl#participates_in";
inline constexpr std::string_view ro_has_function = "http://www.obofoundry.org/ro/ro.owl#has_function";

inline constexpr std::string_view dc_title = "http://purl.org/dc/elements/1.1/title";
inline constexpr std::string_view dc_identifier = "http://purl.org/dc/elements/1.1/identifier";

// is about
inline constexpr std::string_view iao_is_about = "http://purl.obolibrary.org/obo/IAO_0000136";
// has measurement value
inline constexpr std::string_view iao_has_measurement_value =
    "http://purl.obolibrary.org/obo/IAO_0000004";
inline constexpr std::string_view iao_measurement_datum = "http://purl.obolibrary.org/obo/IAO_0000109";
inline constexpr std::string_view iao_data_set = "http://purl.obolibrary.org/obo/IAO_0000100";
inline constexpr std::string_view iao_is_quality_measurement_of =
    "http://purl.obolibrary.org/obo/IAO_0000221";
inline constexpr std::string_view iao_has_measurement_unit_label =
    "http://purl.obolibrary.org/obo/IAO_0000039";
// cell culture
inline constexpr std::string_view obi_cell_culture = "http://purl.obolibrary.org/obo/OBI_0100060";

inline constexpr std::string_view so_transcript = "http://purl.org/obo/owl/SO#SO_0000673";

}  // namespace semint::vocab
