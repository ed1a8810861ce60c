#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rsvocab/site/generator.hpp"
#include "rsvocab/vocab/vocabulary.hpp"

namespace rsvocab::server {

/// Quality value in thousandths: "q=0.8" is 800, the default is 1000.
using Quality = int;
inline constexpr Quality kFullQuality = 1000;

struct MediaRange {
  std::string type;     // may be "*"
  std::string subtype;  // may be "*"
  Quality q = kFullQuality;

  /// 2 for type/subtype, 1 for type/*, 0 for */*.
  int specificity() const;
  bool matches(std::string_view media_type) const;

  friend bool operator==(const MediaRange&, const MediaRange&) = default;
};

struct LanguageRange {
  std::string tag;  // normalized, or "*"
  Quality q = kFullQuality;

  friend bool operator==(const LanguageRange&, const LanguageRange&) = default;
};

/// Parses an Accept header, sorted by q descending, then specificity, then
/// header order. An absent header is "*/*". Entries that do not parse are
/// skipped.
std::vector<MediaRange> parse_accept(std::optional<std::string_view> header);

/// Parses Accept-Language the same way. An absent header is an empty list.
std::vector<LanguageRange> parse_accept_language(std::optional<std::string_view> header);

/// Best of text/html, text/turtle and application/ld+json. Ties for the top
/// quality (even between the two RDF formats) and wildcards go to HTML, as
/// does a header that accepts none of them.
std::string select_media_type(const std::vector<MediaRange>& accept);

/// Picks one of `available` for the ranges. A range matches a tag exactly,
/// as a prefix ("nl" matches "nl-BE"), or after truncation ("nl-BE" falls
/// back to "nl"). Ranges with q=0 exclude their languages. Falls back to
/// `default_language` when nothing matches.
std::string select_language(const std::vector<std::string>& available,
                            const std::vector<LanguageRange>& ranges,
                            std::string_view default_language);

struct NegotiationDecision {
  int status = 404;  // 200, 303 or 404
  std::optional<std::string> location;  // site-relative path
  std::optional<std::string> media_type;
  std::optional<std::string> content_language;
  std::vector<std::string> vary{"Accept", "Accept-Language"};

  friend bool operator==(const NegotiationDecision&, const NegotiationDecision&) = default;
};

struct NegotiationContext {
  const site::SiteManifest& manifest;
  const vocab::Vocabulary& vocabulary;
  const uri::NamespaceConfig& cfg;
  std::string default_language = "en";
};

/// Decides the response for a site-relative path (no leading slash).
/// Documents in the manifest answer 200. Statement URIs (validity qualifier
/// dropped) and the scheme URI answer 303 to the chosen document. Anything
/// else is 404.
NegotiationDecision negotiate(std::string_view path, const std::vector<MediaRange>& accept,
                              const std::vector<LanguageRange>& accept_language,
                              const NegotiationContext& ctx);

}  // namespace rsvocab::server
