#include "rsvocab/rdf/term.hpp"

#include <algorithm>
#include <cctype>

#include "rsvocab/rdf/formats.hpp"

namespace rsvocab::rdf {

namespace {

bool is_alpha(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
}

}  // namespace

bool Iri::is_valid(std::string_view value) noexcept {
  if (value.empty()) return false;
  auto colon = value.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  if (!is_alpha(value[0])) return false;
  for (std::size_t i = 1; i < colon; ++i) {
    char c = value[i];
    if (!(is_alpha(c) || (c >= '0' && c <= '9') || c == '+' || c == '-' ||
          c == '.')) {
      return false;
    }
  }
  return std::none_of(value.begin(), value.end(), [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '<' ||
           c == '>';
  });
}

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (!is_valid(value_)) {
    throw std::invalid_argument("not an absolute IRI: '" + value_ + "'");
  }
}

BlankNode::BlankNode(std::string label) : label_(std::move(label)) {
  if (label_.empty()) throw std::invalid_argument("empty blank node label");
}

Literal::Literal(std::string lexical) : lexical_(std::move(lexical)) {}

Literal Literal::with_language(std::string lexical, std::string_view lang) {
  auto norm = normalize_language_tag(lang);
  if (!norm) {
    throw std::invalid_argument("malformed language tag '" +
                                std::string(lang) + "'");
  }
  Literal l(std::move(lexical));
  l.lang_ = std::move(norm);
  return l;
}

Literal Literal::with_datatype(std::string lexical, Iri datatype) {
  Literal l(std::move(lexical));
  l.datatype_ = std::move(datatype);
  return l;
}

std::optional<std::string> normalize_language_tag(std::string_view tag) {
  auto dash = tag.find('-');
  std::string_view primary = tag.substr(0, dash);
  if (primary.size() < 2 || primary.size() > 3) return std::nullopt;
  std::string out;
  for (char c : primary) {
    if (!is_alpha(c)) return std::nullopt;
    out.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (dash != std::string_view::npos) {
    std::string_view region = tag.substr(dash + 1);
    if (region.size() != 2 || !is_alpha(region[0]) || !is_alpha(region[1])) {
      return std::nullopt;
    }
    out.push_back('-');
    for (char c : region) {
      out.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
    }
  }
  return out;
}

std::string to_string(const Term& t) {
  if (const auto* iri = std::get_if<Iri>(&t)) return "<" + iri->value() + ">";
  if (const auto* b = std::get_if<BlankNode>(&t)) return "_:" + b->label();
  const auto& l = std::get<Literal>(t);
  std::string out = "\"" + escape_turtle_string(l.lexical()) + "\"";
  if (l.language()) out += "@" + *l.language();
  if (l.datatype()) out += "^^<" + l.datatype()->value() + ">";
  return out;
}

}  // namespace rsvocab::rdf
