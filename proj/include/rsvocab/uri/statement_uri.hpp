#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rsvocab::uri {

/// Where statement URIs live. `base` never ends with a slash.
struct NamespaceConfig {
  std::string base = "http://rightsstatements.org";
  std::string resource_segment = "rs";
  std::string purpose_segment = "purpose";

  /// Strips trailing slashes from `base`; throws std::invalid_argument if
  /// it is not an http(s) IRI.
  static NamespaceConfig with_base(std::string_view base);

  /// "{base}/{rs}/", the URI of the concept scheme.
  std::string scheme_uri() const;
  /// "{base}/{purpose}/{name}", e.g. the hosted education purpose term.
  std::string purpose_uri(std::string_view name) const;
};

enum class ValidityKind { kFrom, kUntil };

struct Validity {
  ValidityKind kind;
  std::string date;  // YYYY-MM-DD

  friend auto operator<=>(const Validity&, const Validity&) = default;
};

/// A parsed statement URI. Components are for routing only; the facts they
/// suggest (identifier, version, jurisdiction) must also be asserted in data.
struct StatementUri {
  std::string name;
  std::string version;
  std::optional<std::string> jurisdiction;
  std::optional<Validity> validity;

  /// Same statement with the validity qualifier removed.
  StatementUri without_validity() const {
    return StatementUri{name, version, jurisdiction, std::nullopt};
  }

  friend auto operator<=>(const StatementUri&, const StatementUri&) = default;
};

class UriError : public std::runtime_error {
 public:
  enum class Kind { kNotInNamespace, kMalformedComponent, kInvariant };

  UriError(Kind kind, std::string component, const std::string& message);

  Kind kind() const noexcept { return kind_; }
  /// Which component failed, e.g. "version"; empty for namespace errors.
  const std::string& component() const noexcept { return component_; }

 private:
  Kind kind_;
  std::string component_;
};

bool is_valid_name(std::string_view name);
bool is_valid_version(std::string_view version);
bool is_valid_jurisdiction(std::string_view code);
/// YYYY-MM-DD naming a real Gregorian calendar day.
bool is_valid_date(std::string_view date);

StatementUri parse_statement_uri(std::string_view uri, const NamespaceConfig& cfg);
std::string build_statement_uri(const StatementUri& s, const NamespaceConfig& cfg);
std::string normalize_uri(std::string_view uri, const NamespaceConfig& cfg);

/// Site-relative directory of a statement's documents, e.g.
/// "rs/ic-edu/1.0/" or "rs/pd/1.0/US/". Validity qualifiers are dropped.
std::string statement_path(const StatementUri& s, const NamespaceConfig& cfg);

/// Recognizes the unversioned concept form "{base}/{rs}/{name}" (with or
/// without trailing slash) and returns the name. Used for vocabularies that
/// name statements without a version segment and assert the version only
/// in data.
std::optional<std::string> parse_unversioned_name(std::string_view uri,
                                                  const NamespaceConfig& cfg);

/// True if `uri` is the scheme URI itself ("{base}/{rs}" with or without
/// trailing slash, either scheme).
bool is_scheme_uri(std::string_view uri, const NamespaceConfig& cfg);

/// True if `uri` starts with the namespace base under either scheme.
bool in_base_namespace(std::string_view uri, const NamespaceConfig& cfg);

}  // namespace rsvocab::uri
