#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "rsvocab/rdf/graph.hpp"

namespace rsvocab::rdf {

/// Syntax error in a Turtle or HTML input, with 1-based position.
class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

class EncodingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses the supported Turtle subset: @prefix, <IRI>, prefixed names, `a`,
/// `;` and `,` lists, `[ ... ]` property lists, `_:label` nodes, quoted
/// strings with language tags or `^^` datatypes, and comments.
///
/// Relative IRIs are resolved against `base`; with an empty base they are a
/// syntax error. Blank nodes get fresh labels b0, b1, ... in document order.
///
/// A raw line break inside a "..." literal is kept in the lexical form.
/// Long strings ("""), collections, and numeric or boolean shorthand are
/// rejected.
Graph parse_turtle(std::string_view text, std::string_view base = {});

/// Deterministic Turtle. Every table prefix is declared; rdf:type is
/// written first as `a`, then predicates in IRI order. Blank nodes that are
/// the object of exactly one triple are inlined as [ ... ].
std::string serialize_turtle(const Graph& g);

/// Flattened JSON-LD with the namespace table as inline @context. Node
/// objects live in @graph (IRIs sorted first, then blank nodes numbered
/// _:b0, _:b1, ... in order of first reference). An empty graph produces a
/// document with only @context.
std::string serialize_jsonld(const Graph& g);

/// Extracts triples from HTML that uses the RDFa attributes written by the
/// site generator: prefix, about, typeof, property, resource, content,
/// datatype, and lang. `lang=""` clears an inherited language.
Graph extract_rdfa(std::string_view html);

/// True iff a bijection between the blank nodes of `a` and `b` makes the
/// triple sets equal. Throws ResourceLimitError above kMaxIsomorphismBlankNodes.
bool graphs_isomorphic(const Graph& a, const Graph& b);

inline constexpr std::size_t kMaxIsomorphismBlankNodes = 32;

/// Escapes a string for use inside a double-quoted Turtle literal.
std::string escape_turtle_string(std::string_view s);

}  // namespace rsvocab::rdf
