#include <map>
#include <optional>
#include <string>

#include "rsvocab/rdf/formats.hpp"
#include "rsvocab/rdf/namespaces.hpp"

namespace rsvocab::rdf {

SyntaxError::SyntaxError(std::size_t line, std::size_t column,
                         const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

namespace {

bool valid_utf8(std::string_view s) {
  std::size_t i = 0;
  while (i < s.size()) {
    auto c = static_cast<unsigned char>(s[i]);
    std::size_t len = c < 0x80 ? 1 : (c >> 5) == 0x6 ? 2 : (c >> 4) == 0xE ? 3
                                 : (c >> 3) == 0x1E ? 4 : 0;
    if (len == 0 || i + len > s.size()) return false;
    for (std::size_t k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(s[i + k]) >> 6) != 0x2) return false;
    }
    i += len;
  }
  return true;
}

void append_utf8(std::string& out, unsigned long cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

bool is_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
         (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
}

class TurtleParser {
 public:
  TurtleParser(std::string_view text, std::string_view base)
      : text_(text), base_(base) {}

  Graph parse() {
    skip_ws();
    while (!at_end()) {
      if (peek() == '@') {
        directive();
      } else {
        statement();
      }
      skip_ws();
    }
    return std::move(graph_);
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }

  [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(line, col, message);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  void skip_ws() {
    while (!at_end()) {
      char c = peek();
      if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        ++pos_;
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c, const char* what) {
    skip_ws();
    if (peek() != c) {
      fail(std::string("expected ") + what + (at_end() ? " but reached end of input"
                                                       : std::string(" but found '") + peek() + "'"));
    }
    ++pos_;
  }

  void directive() {
    std::size_t start = pos_;
    ++pos_;
    std::string word;
    while (!at_end() && is_name_char(peek())) word.push_back(text_[pos_++]);
    if (word != "prefix") fail_at(start, "unsupported directive '@" + word + "'");
    skip_ws();
    std::string prefix;
    while (!at_end() && is_name_char(peek())) prefix.push_back(text_[pos_++]);
    if (peek() != ':') fail("expected ':' after prefix name");
    ++pos_;
    skip_ws();
    if (peek() != '<') fail("expected <IRI> in @prefix");
    prefixes_[prefix] = iri_ref().value();
    expect('.', "'.' after @prefix");
  }

  void statement() {
    skip_ws();
    if (peek() == '[') {
      Term subject = blank_property_list();
      skip_ws();
      if (peek() != '.') predicate_object_list(subject);
    } else {
      Term subject = subject_term();
      predicate_object_list(subject);
    }
    expect('.', "'.' at end of statement");
  }

  Term subject_term() {
    skip_ws();
    char c = peek();
    if (c == '<') return iri_ref();
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '"' || c == '\'') fail("literal in subject position");
    if (c == '(') fail("collections are not supported");
    return prefixed_name();
  }

  void predicate_object_list(const Term& subject) {
    for (;;) {
      Iri predicate = verb();
      object_list(subject, predicate);
      skip_ws();
      if (peek() != ';') return;
      while (peek() == ';') {
        ++pos_;
        skip_ws();
      }
      char c = peek();
      if (c == '.' || c == ']' || at_end()) return;
    }
  }

  Iri verb() {
    skip_ws();
    if (peek() == 'a') {
      char n = peek(1);
      if (n == ' ' || n == '\t' || n == '\n' || n == '\r' || n == '<' ||
          n == '[' || n == '"' || n == '_') {
        ++pos_;
        return ns::rdf_type();
      }
    }
    if (peek() == '<') return iri_ref();
    if (peek() == '[' || peek() == '"' || (peek() == '_' && peek(1) == ':')) {
      fail("predicate must be an IRI");
    }
    return prefixed_name();
  }

  void object_list(const Term& subject, const Iri& predicate) {
    for (;;) {
      Term obj = object();
      graph_.insert(Triple(subject, predicate, std::move(obj)));
      skip_ws();
      if (peek() != ',') return;
      ++pos_;
    }
  }

  Term object() {
    skip_ws();
    char c = peek();
    if (c == '<') return iri_ref();
    if (c == '[') return blank_property_list();
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '"') return literal();
    if (c == '\'') fail("single-quoted literals are not supported");
    if (c == '(') fail("collections are not supported");
    if ((c >= '0' && c <= '9') || c == '+' || c == '-') {
      fail("numeric shorthand literals are not supported");
    }
    if (text_.substr(pos_).starts_with("true") ||
        text_.substr(pos_).starts_with("false")) {
      std::size_t len = peek() == 't' ? 4 : 5;
      char after = peek(len);
      if (!is_name_char(after) && after != ':') {
        fail("boolean shorthand literals are not supported");
      }
    }
    if (at_end()) fail("unexpected end of input, expected an object");
    return prefixed_name();
  }

  Term blank_property_list() {
    ++pos_;  // '['
    BlankNode node = blanks_.next();
    skip_ws();
    if (peek() != ']') predicate_object_list(node);
    expect(']', "']' to close blank node property list");
    return node;
  }

  Term blank_label() {
    pos_ += 2;
    std::string label;
    while (!at_end() && is_name_char(peek())) label.push_back(text_[pos_++]);
    while (!label.empty() && label.back() == '.') {
      label.pop_back();
      --pos_;
    }
    if (label.empty()) fail("empty blank node label");
    auto it = labels_.find(label);
    if (it == labels_.end()) it = labels_.emplace(label, blanks_.next()).first;
    return it->second;
  }

  Iri iri_ref() {
    std::size_t start = pos_;
    ++pos_;  // '<'
    std::string value;
    for (;;) {
      if (at_end()) fail_at(start, "unterminated IRI");
      char c = text_[pos_++];
      if (c == '>') break;
      if (c == ' ' || c == '\n' || c == '\t' || c == '\r' || c == '<' || c == '"') {
        fail_at(pos_ - 1, "invalid character in IRI");
      }
      value.push_back(c);
    }
    return resolve(value, start);
  }

  Iri resolve(const std::string& ref, std::size_t at) {
    if (Iri::is_valid(ref)) return Iri(ref);
    if (base_.empty()) fail_at(at, "relative IRI <" + ref + "> without a base");
    std::string base(base_);
    std::string out;
    if (ref.empty()) {
      out = base.substr(0, base.find('#'));
    } else if (ref[0] == '#') {
      out = base.substr(0, base.find('#')) + ref;
    } else if (ref[0] == '/') {
      auto scheme_end = base.find("://");
      auto path_start = scheme_end == std::string::npos
                            ? base.find(':') + 1
                            : base.find('/', scheme_end + 3);
      out = base.substr(0, path_start) + ref;
    } else {
      out = base.substr(0, base.rfind('/') + 1) + ref;
    }
    if (!Iri::is_valid(out)) fail_at(at, "cannot resolve IRI <" + ref + ">");
    return Iri(out);
  }

  Iri prefixed_name() {
    std::size_t start = pos_;
    std::string prefix;
    while (!at_end() && is_name_char(peek())) prefix.push_back(text_[pos_++]);
    if (peek() != ':') {
      if (prefix.empty()) {
        fail_at(start, at_end() ? "unexpected end of input"
                                : std::string("unexpected token '") + peek() + "'");
      }
      fail_at(start, "unexpected token '" + prefix + "'");
    }
    ++pos_;
    std::string local;
    while (!at_end() && is_name_char(peek())) local.push_back(text_[pos_++]);
    while (!local.empty() && local.back() == '.') {
      local.pop_back();
      --pos_;
    }
    auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) fail_at(start, "unknown prefix '" + prefix + ":'");
    std::string full = it->second + local;
    if (!Iri::is_valid(full)) fail_at(start, "prefixed name expands to an invalid IRI");
    return Iri(full);
  }

  Term literal() {
    std::size_t start = pos_;
    if (text_.substr(pos_).starts_with("\"\"\"")) {
      fail("long (triple-quoted) literals are not supported");
    }
    ++pos_;
    std::string lexical;
    for (;;) {
      if (at_end()) fail_at(start, "unterminated literal");
      char c = text_[pos_++];
      if (c == '"') break;
      if (c != '\\') {
        lexical.push_back(c);
        continue;
      }
      if (at_end()) fail_at(start, "unterminated literal");
      char e = text_[pos_++];
      switch (e) {
        case '"': lexical.push_back('"'); break;
        case '\'': lexical.push_back('\''); break;
        case '\\': lexical.push_back('\\'); break;
        case 'n': lexical.push_back('\n'); break;
        case 't': lexical.push_back('\t'); break;
        case 'r': lexical.push_back('\r'); break;
        case 'u':
        case 'U': {
          std::size_t digits = e == 'u' ? 4 : 8;
          if (pos_ + digits > text_.size()) fail("truncated unicode escape");
          unsigned long cp = 0;
          for (std::size_t k = 0; k < digits; ++k) {
            char h = text_[pos_++];
            int v = (h >= '0' && h <= '9')   ? h - '0'
                    : (h >= 'a' && h <= 'f') ? h - 'a' + 10
                    : (h >= 'A' && h <= 'F') ? h - 'A' + 10
                                             : -1;
            if (v < 0) fail("invalid unicode escape");
            cp = cp * 16 + static_cast<unsigned long>(v);
          }
          append_utf8(lexical, cp);
          break;
        }
        default:
          fail_at(pos_ - 2, std::string("unknown escape '\\") + e + "'");
      }
    }
    if (peek() == '@') {
      std::size_t tag_start = pos_;
      ++pos_;
      std::string tag;
      while (!at_end() && (is_name_char(peek()))) tag.push_back(text_[pos_++]);
      while (!tag.empty() && tag.back() == '.') {
        tag.pop_back();
        --pos_;
      }
      auto norm = normalize_language_tag(tag);
      if (!norm) fail_at(tag_start, "unsupported language tag '@" + tag + "'");
      return Literal::with_language(std::move(lexical), *norm);
    }
    if (peek() == '^' && peek(1) == '^') {
      pos_ += 2;
      Iri dt = peek() == '<' ? iri_ref() : prefixed_name();
      return Literal::with_datatype(std::move(lexical), std::move(dt));
    }
    return Literal(std::move(lexical));
  }

  std::string_view text_;
  std::string_view base_;
  std::size_t pos_ = 0;
  std::map<std::string, std::string> prefixes_;
  std::map<std::string, BlankNode> labels_;
  BlankNodeFactory blanks_;
  Graph graph_;
};

}  // namespace

Graph parse_turtle(std::string_view text, std::string_view base) {
  if (!valid_utf8(text)) throw EncodingError("input is not valid UTF-8");
  return TurtleParser(text, base).parse();
}

}  // namespace rsvocab::rdf
