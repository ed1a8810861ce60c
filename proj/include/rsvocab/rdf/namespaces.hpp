#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "rsvocab/rdf/term.hpp"

namespace rsvocab::rdf {

struct Prefix {
  std::string_view name;
  std::string_view iri;
};

// Order is the emission order of prefix declarations in every serializer.
inline constexpr std::array<Prefix, 11> kNamespaceTable{{
    {"cc", "http://creativecommons.org/ns#"},
    {"dc", "http://purl.org/dc/elements/1.1/"},
    {"dcmitype", "http://purl.org/dc/dcmitype/"},
    {"dcterms", "http://purl.org/dc/terms/"},
    {"edm", "http://www.europeana.eu/schemas/edm/"},
    {"odrl", "http://www.w3.org/community/odrl/two/vocab/2.1/"},
    {"premiscopy", "http://id.loc.gov/vocabulary/preservation/copyrightStatus/"},
    {"skos", "http://www.w3.org/2004/02/skos/core#"},
    {"rdf", "http://www.w3.org/1999/02/22-rdf-syntax-ns#"},
    {"rdfs", "http://www.w3.org/2000/01/rdf-schema#"},
    {"xsd", "http://www.w3.org/2001/XMLSchema#"},
}};

/// Splits an IRI into (prefix, local) using the namespace table when the
/// local part is a safe prefixed-name local (letters, digits, '_', '-', '.'
/// not at either end). Longest namespace wins.
std::optional<std::pair<std::string_view, std::string>> compact(
    std::string_view iri);

/// "prefix:local" if compactable, otherwise the bare IRI string.
std::string compact_or_full(std::string_view iri);

bool is_safe_local_name(std::string_view local);

namespace ns {

inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kSkos = "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view kDc = "http://purl.org/dc/elements/1.1/";
inline constexpr std::string_view kDcterms = "http://purl.org/dc/terms/";
inline constexpr std::string_view kEdm = "http://www.europeana.eu/schemas/edm/";
inline constexpr std::string_view kCc = "http://creativecommons.org/ns#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";

inline Iri iri(std::string_view base, std::string_view local) {
  return Iri(std::string(base) + std::string(local));
}

inline Iri rdf_type() { return iri(kRdf, "type"); }

}  // namespace ns

}  // namespace rsvocab::rdf
