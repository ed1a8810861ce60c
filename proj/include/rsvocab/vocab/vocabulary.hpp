#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsvocab/rdf/graph.hpp"
#include "rsvocab/uri/statement_uri.hpp"

namespace rsvocab::vocab {

using LangMap = std::map<std::string, std::string>;

enum class MatchRelation { kClose, kExact, kRelated };

std::string_view to_string(MatchRelation r);

struct Match {
  MatchRelation relation;
  rdf::Iri target;

  friend auto operator<=>(const Match&, const Match&) = default;
};

struct PermissionConstraint {
  rdf::Iri op;
  rdf::Iri purpose;

  friend auto operator<=>(const PermissionConstraint&, const PermissionConstraint&) = default;
};

/// An odrl:permission node: one action plus purpose constraints. The ODRL
/// namespace the source graph used is kept so that re-expressed triples use
/// the same predicates.
struct PermissionSpec {
  std::string odrl_namespace;
  rdf::Iri action;
  std::vector<PermissionConstraint> constraints;  // sorted

  friend auto operator<=>(const PermissionSpec&, const PermissionSpec&) = default;
};

struct StatementRecord {
  uri::StatementUri uri;
  std::string identifier;
  LangMap pref_labels;
  LangMap definitions;
  LangMap notes;
  std::optional<std::string> creator;
  std::string version;
  std::string modified;
  /// Jurisdiction as asserted by dcterms:coverage, never read off the URI.
  std::optional<std::string> jurisdiction;
  std::vector<Match> matches;             // sorted
  std::vector<PermissionSpec> permissions;  // sorted

  friend bool operator==(const StatementRecord&, const StatementRecord&) = default;
};

struct Vocabulary {
  std::string scheme_uri;
  LangMap title;
  /// Keyed by canonical statement URI.
  std::map<std::string, StatementRecord> statements;

  friend bool operator==(const Vocabulary&, const Vocabulary&) = default;
};

struct Finding {
  std::string rule;
  std::string subject;
  std::string message;
};

struct ValidationReport {
  std::vector<Finding> errors;
  std::vector<Finding> warnings;

  bool accepted() const noexcept { return errors.empty(); }
};

struct LoadResult {
  Vocabulary vocabulary;
  ValidationReport report;
};

struct LoadOptions {
  /// Language every prefLabel and definition must be available in.
  std::string default_language = "en";
};

/// Builds a Vocabulary from every dcterms:RightsStatement under the
/// namespace and checks rules R1-R10. All failures are collected; a
/// vocabulary with errors is still returned for inspection.
///
///   R0  statement subject is a well-formed statement URI
///   R1  typed dcterms:RightsStatement
///   R2  skos:prefLabel literals are language-tagged, one per language,
///       default language present
///   R3  same for skos:definition (and tagging for skos:scopeNote)
///   R4  dc:identifier equals the URI name
///   R5  dcterms:hasVersion equals the URI version
///   R6  dcterms:modified is a calendar date
///   R7  SKOS match targets are IRIs outside the local namespace
///   R8  odrl:permission nodes are well-formed
///   R9  no two subjects share a canonical URI
///   R10 dcterms:coverage agrees with the URI jurisdiction
LoadResult load_vocabulary(const rdf::Graph& g, const uri::NamespaceConfig& cfg,
                           const LoadOptions& options = {});

/// Normalizes `uri` (dropping any validity qualifier) and looks it up.
/// Foreign or malformed URIs yield nullptr.
const StatementRecord* lookup_statement(const Vocabulary& v, std::string_view uri,
                                        const uri::NamespaceConfig& cfg);

/// Re-expresses one record as triples under its canonical URI.
rdf::Graph statement_graph(const StatementRecord& r, const uri::NamespaceConfig& cfg);

/// The concept scheme node (type, titles, hasTopConcept links) plus every
/// statement graph.
rdf::Graph vocabulary_graph(const Vocabulary& v, const uri::NamespaceConfig& cfg);

/// Triples of the scheme node alone.
rdf::Graph scheme_graph(const Vocabulary& v, const uri::NamespaceConfig& cfg);

/// Drops literals tagged with any language other than `lang`; untagged
/// literals and non-literal objects are kept.
rdf::Graph restrict_language(const rdf::Graph& g, std::string_view lang);

// Well-known IRIs used by the model.
namespace terms {
rdf::Iri rights_statement();
rdf::Iri cc_license();
rdf::Iri concept_scheme();
rdf::Iri pref_label();
rdf::Iri definition();
rdf::Iri scope_note();
rdf::Iri has_top_concept();
rdf::Iri identifier();
rdf::Iri creator();
rdf::Iri has_version();
rdf::Iri modified();
rdf::Iri coverage();
rdf::Iri title();
rdf::Iri match(MatchRelation r);
}  // namespace terms

/// ODRL namespaces accepted for permission structures.
const std::vector<std::string>& odrl_namespaces();
/// Namespace used for permissions built without a source graph.
inline constexpr std::string_view kDefaultOdrlNamespace = "http://www.w3.org/ns/odrl/2/";

}  // namespace rsvocab::vocab
