#pragma once

// Decision table for dereferencing abstract URIs of the fixture vocabulary.
// Expectations are written down from the routing rules (303 to the chosen
// document, wildcard and unacceptable types go to HTML, unmatched languages
// fall back to English, validity qualifiers resolve to the base statement)
// without calling the negotiation code.

#include <optional>
#include <string>
#include <vector>

namespace rsvocab::testing {

struct AbstractUri {
  std::string path;       // request path, no leading slash
  std::string directory;  // where its documents live
  std::vector<std::string> languages;
};

inline const std::vector<AbstractUri>& fixture_abstract_uris() {
  static const std::vector<AbstractUri> uris{
      {"rs/", "rs/", {"en", "nl"}},
      {"rs", "rs/", {"en", "nl"}},
      {"rs/ic/1.0/", "rs/ic/1.0/", {"en", "nl"}},
      {"rs/ic/2.0/", "rs/ic/2.0/", {"en"}},
      {"rs/ic-edu/1.0/", "rs/ic-edu/1.0/", {"en", "nl"}},
      {"rs/ic-edu/1.0", "rs/ic-edu/1.0/", {"en", "nl"}},
      {"rs/pd/1.0/", "rs/pd/1.0/", {"en", "nl"}},
      {"rs/pd/1.0/US/", "rs/pd/1.0/US/", {"en"}},
      {"rs/pd/1.0/US/from/2025-05-02/", "rs/pd/1.0/US/", {"en"}},
      {"rs/pd/1.0/until/2025-05-01/", "rs/pd/1.0/", {"en", "nl"}},
  };
  return uris;
}

struct MatrixCell {
  std::string path;
  std::optional<std::string> accept;
  std::optional<std::string> accept_language;
  std::string expected_location;  // site-relative, no leading slash
};

inline std::string describe(const MatrixCell& c) {
  return c.path + " Accept=" + c.accept.value_or("(absent)") +
         " Accept-Language=" + c.accept_language.value_or("(absent)");
}

inline std::vector<MatrixCell> negotiation_matrix() {
  struct AcceptCase {
    std::optional<std::string> header;
    std::string file;  // "" means the HTML page
  };
  const std::vector<AcceptCase> accepts{
      {"text/html", ""},
      {"text/turtle", "data.ttl"},
      {"application/ld+json", "data.jsonld"},
      {"*/*", ""},
      {std::nullopt, ""},
      {"image/png", ""},
  };
  struct LanguageCase {
    std::optional<std::string> header;
    std::string wanted;  // language if available, otherwise English
  };
  const std::vector<LanguageCase> languages{
      {std::nullopt, "en"},
      {"en", "en"},
      {"nl", "nl"},
      {"nl;q=0, en;q=0.5", "en"},
      {"xx", "en"},
  };

  std::vector<MatrixCell> cells;
  for (const auto& u : fixture_abstract_uris()) {
    for (const auto& a : accepts) {
      for (const auto& l : languages) {
        std::string file = a.file;
        if (file.empty()) {
          bool available = false;
          for (const auto& have : u.languages) available |= have == l.wanted;
          file = "index." + (available ? l.wanted : std::string("en")) + ".html";
        }
        cells.push_back({u.path, a.header, l.header, u.directory + file});
      }
    }
  }
  return cells;
}

}  // namespace rsvocab::testing
