#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rsvocab/vocab/vocabulary.hpp"

namespace rsvocab::site {

inline constexpr std::string_view kTurtle = "text/turtle";
inline constexpr std::string_view kJsonLd = "application/ld+json";
inline constexpr std::string_view kHtml = "text/html";

struct Document {
  std::string content;
  std::string media_type;
  std::optional<std::string> content_language;

  friend bool operator==(const Document&, const Document&) = default;
};

/// Relative path ("rs/ic/1.0/data.ttl") to generated document.
struct SiteManifest {
  std::map<std::string, Document> entries;
  /// Informational only; not part of any document body.
  std::string generated_at;
};

class SiteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SiteOptions {
  std::string default_language = "en";
};

/// Renders every statement's data.ttl, data.jsonld and one index.{lang}.html
/// per prefLabel language, plus the scheme-level rs/data.* files and one
/// overview page per language in use. Throws SiteError if the vocabulary
/// does not validate.
SiteManifest generate_site(const vocab::Vocabulary& v, const uri::NamespaceConfig& cfg,
                           const SiteOptions& options = {});

/// Statement page in `lang`. Throws SiteError if the record has no
/// prefLabel in that language.
std::string render_statement_html(const vocab::StatementRecord& r, std::string_view lang,
                                  const vocab::Vocabulary& v, const uri::NamespaceConfig& cfg);

/// Scheme overview in `lang`, labels falling back to the default language.
std::string render_overview_html(const vocab::Vocabulary& v, std::string_view lang,
                                 const uri::NamespaceConfig& cfg, const SiteOptions& options = {});

/// The triples an overview page in `lang` is meant to carry as RDFa.
rdf::Graph overview_graph(const vocab::Vocabulary& v, std::string_view lang,
                          const uri::NamespaceConfig& cfg, const SiteOptions& options = {});

/// Languages that get an overview page: the default plus every prefLabel
/// and title language.
std::vector<std::string> overview_languages(const vocab::Vocabulary& v,
                                            const SiteOptions& options = {});

/// "index.nl.html" -> "nl"; nullopt for other names.
std::optional<std::string> page_language(std::string_view filename);

void write_site(const SiteManifest& m, const std::filesystem::path& dir);
/// Reads a tree written by write_site. Media types come from extensions.
SiteManifest read_site(const std::filesystem::path& dir);

std::string escape_html(std::string_view s);

}  // namespace rsvocab::site
