#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <vector>

#include "rsvocab/rdf/formats.hpp"
#include "rsvocab/rdf/namespaces.hpp"

namespace rsvocab::rdf {

namespace {

const std::set<std::string, std::less<>> kVoidElements{
    "area", "base", "br", "col", "embed", "hr", "img", "input", "link", "meta",
    "source", "track", "wbr"};

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

struct Frame {
  std::string tag;
  std::optional<Term> subject;
  // Outer optional: whether this element sets lang. Inner: the tag or none.
  std::optional<std::optional<std::string>> lang;
  std::map<std::string, std::string> prefixes;
  // Literal properties waiting for the element's text content.
  std::vector<Iri> pending;
  Term pending_subject = Iri("urn:x-unset:");
  std::optional<Iri> datatype;
  std::optional<std::string> pending_lang;
  std::string text;
  bool collect_text = false;
};

class RdfaExtractor {
 public:
  explicit RdfaExtractor(std::string_view html) : html_(html) {}

  Graph extract() {
    while (pos_ < html_.size()) {
      if (html_[pos_] == '<') {
        tag();
      } else {
        auto next = html_.find('<', pos_);
        if (next == std::string_view::npos) next = html_.size();
        std::string text = decode(html_.substr(pos_, next - pos_), pos_);
        for (auto& f : stack_) {
          if (f.collect_text) f.text += text;
        }
        pos_ = next;
      }
    }
    if (!stack_.empty()) fail(html_.size(), "unclosed element <" + stack_.back().tag + ">");
    return std::move(graph_);
  }

 private:
  [[noreturn]] void fail(std::size_t pos, const std::string& message) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos && i < html_.size(); ++i) {
      if (html_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw SyntaxError(line, col, message);
  }

  std::string decode(std::string_view s, std::size_t at) const {
    std::string out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] != '&') {
        out.push_back(s[i]);
        continue;
      }
      auto semi = s.find(';', i);
      if (semi == std::string_view::npos) fail(at + i, "unterminated character reference");
      std::string_view name = s.substr(i + 1, semi - i - 1);
      if (name == "amp") out += '&';
      else if (name == "lt") out += '<';
      else if (name == "gt") out += '>';
      else if (name == "quot") out += '"';
      else if (name == "apos" || name == "#39") out += '\'';
      else if (!name.empty() && name[0] == '#') {
        unsigned long cp = 0;
        try {
          cp = name.size() > 1 && (name[1] == 'x' || name[1] == 'X')
                   ? std::stoul(std::string(name.substr(2)), nullptr, 16)
                   : std::stoul(std::string(name.substr(1)), nullptr, 10);
        } catch (const std::exception&) {
          fail(at + i, "bad numeric character reference");
        }
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
      } else {
        fail(at + i, "unknown character reference '&" + std::string(name) + ";'");
      }
      i = semi;
    }
    return out;
  }

  void tag() {
    std::size_t start = pos_;
    if (html_.substr(pos_).starts_with("<!--")) {
      auto end = html_.find("-->", pos_);
      if (end == std::string_view::npos) fail(start, "unterminated comment");
      pos_ = end + 3;
      return;
    }
    if (html_.substr(pos_).starts_with("<!")) {
      auto end = html_.find('>', pos_);
      if (end == std::string_view::npos) fail(start, "unterminated declaration");
      pos_ = end + 1;
      return;
    }
    auto end = find_tag_end(start);
    std::string_view inner = html_.substr(start + 1, end - start - 1);
    pos_ = end + 1;
    if (!inner.empty() && inner[0] == '/') {
      close(std::string(trim(inner.substr(1))), start);
      return;
    }
    bool self_closing = !inner.empty() && inner.back() == '/';
    if (self_closing) inner.remove_suffix(1);
    open(inner, start, self_closing);
  }

  std::size_t find_tag_end(std::size_t start) const {
    char quote = 0;
    for (std::size_t i = start + 1; i < html_.size(); ++i) {
      char c = html_[i];
      if (quote) {
        if (c == quote) quote = 0;
      } else if (c == '"' || c == '\'') {
        quote = c;
      } else if (c == '<') {
        fail(i, "unexpected '<' inside tag");
      } else if (c == '>') {
        return i;
      }
    }
    fail(start, "unterminated tag");
  }

  static std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  }

  std::map<std::string, std::string> attributes(std::string_view s, std::size_t at) const {
    std::map<std::string, std::string> attrs;
    std::size_t i = 0;
    auto skip = [&] {
      while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    };
    while (true) {
      skip();
      if (i >= s.size()) break;
      std::size_t name_start = i;
      while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) && s[i] != '=') ++i;
      std::string name(s.substr(name_start, i - name_start));
      std::transform(name.begin(), name.end(), name.begin(),
                     [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
      skip();
      std::string value;
      if (i < s.size() && s[i] == '=') {
        ++i;
        skip();
        if (i >= s.size()) fail(at, "attribute '" + name + "' has no value");
        char q = s[i];
        if (q == '"' || q == '\'') {
          auto close = s.find(q, i + 1);
          if (close == std::string_view::npos) fail(at, "unterminated attribute value");
          value = decode(s.substr(i + 1, close - i - 1), at);
          i = close + 1;
        } else {
          std::size_t v = i;
          while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
          value = decode(s.substr(v, i - v), at);
        }
      }
      if (attrs.count(name)) fail(at, "duplicate attribute '" + name + "'");
      attrs[name] = value;
    }
    return attrs;
  }

  const std::map<std::string, std::string>& prefixes() const {
    static const std::map<std::string, std::string> kNone;
    return stack_.empty() ? kNone : stack_.back().prefixes;
  }

  std::optional<Term> inherited_subject() const {
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
      if (it->subject) return it->subject;
    }
    return std::nullopt;
  }

  std::optional<std::string> inherited_lang() const {
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
      if (it->lang) return *it->lang;
    }
    return std::nullopt;
  }

  Iri expand_term(const std::string& value, const Frame& f, std::size_t at) const {
    auto colon = value.find(':');
    if (colon != std::string::npos) {
      auto it = f.prefixes.find(value.substr(0, colon));
      if (it != f.prefixes.end()) {
        std::string full = it->second + value.substr(colon + 1);
        if (Iri::is_valid(full)) return Iri(full);
      } else if (value.find("://") != std::string::npos && Iri::is_valid(value)) {
        return Iri(value);
      } else {
        fail(at, "unknown prefix '" + value.substr(0, colon) + ":'");
      }
    }
    fail(at, "cannot expand '" + value + "' to an IRI");
  }

  Term expand_resource(std::string value, const Frame& f, std::size_t at) {
    if (value.starts_with("_:")) {
      std::string label = value.substr(2);
      if (label.empty()) fail(at, "empty blank node label");
      auto it = blanks_.find(label);
      if (it == blanks_.end()) it = blanks_.emplace(label, factory_.next()).first;
      return it->second;
    }
    if (value.size() >= 2 && value.front() == '[' && value.back() == ']') {
      return expand_term(value.substr(1, value.size() - 2), f, at);
    }
    auto colon = value.find(':');
    if (colon != std::string::npos && f.prefixes.count(value.substr(0, colon))) {
      return expand_term(value, f, at);
    }
    if (!Iri::is_valid(value)) fail(at, "'" + value + "' is not an absolute IRI");
    return Iri(value);
  }

  void open(std::string_view inner, std::size_t at, bool self_closing) {
    std::size_t name_end = 0;
    while (name_end < inner.size() && !std::isspace(static_cast<unsigned char>(inner[name_end]))) {
      ++name_end;
    }
    Frame f;
    f.tag = std::string(inner.substr(0, name_end));
    std::transform(f.tag.begin(), f.tag.end(), f.tag.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (f.tag.empty()) fail(at, "empty tag name");
    auto attrs = attributes(inner.substr(name_end), at);
    f.prefixes = prefixes();
    if (auto it = attrs.find("prefix"); it != attrs.end()) {
      auto toks = split_ws(it->second);
      if (toks.size() % 2 != 0) fail(at, "malformed prefix attribute");
      for (std::size_t i = 0; i < toks.size(); i += 2) {
        if (toks[i].size() < 2 || toks[i].back() != ':') fail(at, "malformed prefix attribute");
        f.prefixes[toks[i].substr(0, toks[i].size() - 1)] = toks[i + 1];
      }
    }
    if (auto it = attrs.find("lang"); it != attrs.end()) {
      if (it->second.empty()) {
        f.lang = std::optional<std::string>{};
      } else {
        auto norm = normalize_language_tag(it->second);
        if (!norm) fail(at, "unsupported language tag '" + it->second + "'");
        f.lang = norm;
      }
    }
    if (auto it = attrs.find("about"); it != attrs.end()) {
      f.subject = expand_resource(it->second, f, at);
    }
    std::optional<Term> subject = f.subject ? f.subject : inherited_subject();
    std::optional<Term> resource;
    if (auto it = attrs.find("resource"); it != attrs.end()) {
      resource = expand_resource(it->second, f, at);
    }
    if (auto it = attrs.find("typeof"); it != attrs.end()) {
      std::optional<Term> typed = f.subject ? f.subject : resource;
      if (!typed) fail(at, "typeof without about or resource");
      for (const auto& t : split_ws(it->second)) {
        graph_.insert(Triple(*typed, ns::rdf_type(), expand_term(t, f, at)));
      }
    }
    if (auto it = attrs.find("property"); it != attrs.end()) {
      if (!subject) fail(at, "property without a subject");
      std::vector<Iri> props;
      for (const auto& p : split_ws(it->second)) props.push_back(expand_term(p, f, at));
      if (resource) {
        for (const auto& p : props) graph_.insert(Triple(*subject, p, *resource));
      } else {
        std::optional<Iri> datatype;
        if (auto dt = attrs.find("datatype"); dt != attrs.end() && !dt->second.empty()) {
          datatype = expand_term(dt->second, f, at);
        }
        std::optional<std::string> lang = f.lang ? *f.lang : inherited_lang();
        if (auto c = attrs.find("content"); c != attrs.end()) {
          for (const auto& p : props) emit_literal(*subject, p, c->second, datatype, lang);
        } else {
          f.pending = std::move(props);
          f.pending_subject = *subject;
          f.datatype = datatype;
          f.pending_lang = lang;
          f.collect_text = true;
        }
      }
    }
    stack_.push_back(std::move(f));
    if (self_closing || kVoidElements.count(stack_.back().tag)) finish_top();
  }

  void emit_literal(const Term& s, const Iri& p, std::string lexical,
                    const std::optional<Iri>& datatype,
                    const std::optional<std::string>& lang) {
    if (datatype) {
      graph_.insert(Triple(s, p, Literal::with_datatype(std::move(lexical), *datatype)));
    } else if (lang) {
      graph_.insert(Triple(s, p, Literal::with_language(std::move(lexical), *lang)));
    } else {
      graph_.insert(Triple(s, p, Literal(std::move(lexical))));
    }
  }

  void finish_top() {
    Frame f = std::move(stack_.back());
    stack_.pop_back();
    for (const auto& p : f.pending) {
      emit_literal(f.pending_subject, p, f.text, f.datatype,
                   f.pending_lang);
    }
  }

  void close(const std::string& name, std::size_t at) {
    std::string lower = name;
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    if (stack_.empty()) fail(at, "unexpected closing tag </" + name + ">");
    if (stack_.back().tag != lower) {
      fail(at, "mismatched closing tag </" + name + ">, expected </" + stack_.back().tag + ">");
    }
    finish_top();
  }

  std::string_view html_;
  std::size_t pos_ = 0;
  std::vector<Frame> stack_;
  std::map<std::string, BlankNode> blanks_;
  BlankNodeFactory factory_;
  Graph graph_;
};

}  // namespace

Graph extract_rdfa(std::string_view html) { return RdfaExtractor(html).extract(); }

}  // namespace rsvocab::rdf
