#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace rsvocab::rdf {

/// Absolute IRI. Construction validates that the value has a scheme and
/// contains no whitespace or angle brackets.
class Iri {
 public:
  explicit Iri(std::string value);

  const std::string& value() const noexcept { return value_; }

  friend auto operator<=>(const Iri&, const Iri&) = default;
  friend bool operator==(const Iri&, const Iri&) = default;

  static bool is_valid(std::string_view value) noexcept;

 private:
  std::string value_;
};

/// Document-scoped blank node. Labels carry no identity across documents;
/// compare graphs with graphs_isomorphic, not with ==.
class BlankNode {
 public:
  explicit BlankNode(std::string label);

  const std::string& label() const noexcept { return label_; }

  friend auto operator<=>(const BlankNode&, const BlankNode&) = default;
  friend bool operator==(const BlankNode&, const BlankNode&) = default;

 private:
  std::string label_;
};

/// Literal with either a language tag, a datatype, or neither.
class Literal {
 public:
  /// Plain (xsd:string) literal.
  explicit Literal(std::string lexical);

  static Literal with_language(std::string lexical, std::string_view lang);
  static Literal with_datatype(std::string lexical, Iri datatype);

  const std::string& lexical() const noexcept { return lexical_; }
  const std::optional<std::string>& language() const noexcept { return lang_; }
  const std::optional<Iri>& datatype() const noexcept { return datatype_; }

  friend auto operator<=>(const Literal&, const Literal&) = default;
  friend bool operator==(const Literal&, const Literal&) = default;

 private:
  std::string lexical_;
  std::optional<std::string> lang_;
  std::optional<Iri> datatype_;
};

/// Lowercases the primary subtag and uppercases a two-letter region.
/// Returns nullopt when the tag does not have the shape xx, xxx, xx-YY or
/// xxx-YY.
std::optional<std::string> normalize_language_tag(std::string_view tag);

// Variant order is significant: IRIs sort before blank nodes, which sort
// before literals.
using Term = std::variant<Iri, BlankNode, Literal>;

inline bool is_iri(const Term& t) { return std::holds_alternative<Iri>(t); }
inline bool is_blank(const Term& t) {
  return std::holds_alternative<BlankNode>(t);
}
inline bool is_literal(const Term& t) {
  return std::holds_alternative<Literal>(t);
}

/// N-Triples style rendering, used in diagnostics and as a sort key.
std::string to_string(const Term& t);

}  // namespace rsvocab::rdf
