#include "rsvocab/uri/statement_uri.hpp"

#include <algorithm>
#include <vector>

namespace rsvocab::uri {

namespace {

bool is_lower_alnum(char c) { return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

// Returns the base with the scheme removed: "//rightsstatements.org".
std::string_view after_scheme(std::string_view s) {
  if (s.starts_with("http:")) return s.substr(5);
  if (s.starts_with("https:")) return s.substr(6);
  return {};
}

// The part of `uri` after "{base}/{rs}", or nullopt if not in namespace.
std::optional<std::string_view> resource_tail(std::string_view uri,
                                              const NamespaceConfig& cfg) {
  auto rest = after_scheme(uri);
  auto base = after_scheme(cfg.base);
  if (rest.empty() || !rest.starts_with(base)) return std::nullopt;
  rest.remove_prefix(base.size());
  std::string seg = "/" + cfg.resource_segment;
  if (!rest.starts_with(seg)) return std::nullopt;
  rest.remove_prefix(seg.size());
  if (!rest.empty() && rest.front() != '/') return std::nullopt;
  return rest;
}

std::vector<std::string_view> split_segments(std::string_view tail) {
  std::vector<std::string_view> out;
  if (tail.starts_with('/')) tail.remove_prefix(1);
  if (tail.ends_with('/')) tail.remove_suffix(1);
  if (tail.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    auto slash = tail.find('/', start);
    out.push_back(tail.substr(start, slash == std::string_view::npos ? slash : slash - start));
    if (slash == std::string_view::npos) break;
    start = slash + 1;
  }
  return out;
}

[[noreturn]] void malformed(const std::string& component, const std::string& why) {
  throw UriError(UriError::Kind::kMalformedComponent, component, component + ": " + why);
}

}  // namespace

UriError::UriError(Kind kind, std::string component, const std::string& message)
    : std::runtime_error(message), kind_(kind), component_(std::move(component)) {}

NamespaceConfig NamespaceConfig::with_base(std::string_view base) {
  std::string b(base);
  while (b.ends_with('/')) b.pop_back();
  if (after_scheme(b).size() < 3 || !after_scheme(b).starts_with("//")) {
    throw std::invalid_argument("base must be an http(s) IRI: '" + std::string(base) + "'");
  }
  NamespaceConfig cfg;
  cfg.base = std::move(b);
  return cfg;
}

std::string NamespaceConfig::scheme_uri() const {
  return base + "/" + resource_segment + "/";
}

std::string NamespaceConfig::purpose_uri(std::string_view name) const {
  return base + "/" + purpose_segment + "/" + std::string(name);
}

bool is_valid_name(std::string_view name) {
  if (name.empty() || name.front() == '-' || name.back() == '-') return false;
  char prev = 0;
  for (char c : name) {
    if (c == '-') {
      if (prev == '-') return false;
    } else if (!is_lower_alnum(c)) {
      return false;
    }
    prev = c;
  }
  return true;
}

bool is_valid_version(std::string_view version) {
  std::size_t groups = 0;
  std::size_t run = 0;
  for (char c : version) {
    if (is_digit(c)) {
      ++run;
    } else if (c == '.') {
      if (run == 0) return false;
      ++groups;
      run = 0;
    } else {
      return false;
    }
  }
  return run > 0 && groups >= 1;
}

bool is_valid_jurisdiction(std::string_view code) {
  return code.size() == 2 && std::all_of(code.begin(), code.end(),
                                         [](char c) { return c >= 'A' && c <= 'Z'; });
}

bool is_valid_date(std::string_view date) {
  if (date.size() != 10 || date[4] != '-' || date[7] != '-') return false;
  for (std::size_t i : {0, 1, 2, 3, 5, 6, 8, 9}) {
    if (!is_digit(date[i])) return false;
  }
  int y = std::stoi(std::string(date.substr(0, 4)));
  int m = std::stoi(std::string(date.substr(5, 2)));
  int d = std::stoi(std::string(date.substr(8, 2)));
  if (m < 1 || m > 12 || d < 1) return false;
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  bool leap = (y % 4 == 0 && y % 100 != 0) || y % 400 == 0;
  int max = kDays[m - 1] + (m == 2 && leap ? 1 : 0);
  return d <= max;
}

StatementUri parse_statement_uri(std::string_view uri, const NamespaceConfig& cfg) {
  auto tail = resource_tail(uri, cfg);
  if (!tail) {
    throw UriError(UriError::Kind::kNotInNamespace, "",
                   "'" + std::string(uri) + "' is not under " + cfg.base + "/" +
                       cfg.resource_segment + "/");
  }
  if (tail->find("//") != std::string_view::npos) malformed("path", "empty segment");
  auto segs = split_segments(*tail);
  if (segs.empty()) malformed("name", "missing");
  StatementUri out;
  if (!is_valid_name(segs[0])) {
    malformed("name", "'" + std::string(segs[0]) + "' is not a lowercase hyphenated token");
  }
  out.name = std::string(segs[0]);
  if (segs.size() < 2) malformed("version", "missing");
  if (!is_valid_version(segs[1])) {
    malformed("version", "'" + std::string(segs[1]) + "' is not a dotted number");
  }
  out.version = std::string(segs[1]);
  std::size_t i = 2;
  if (i < segs.size() && segs[i] != "from" && segs[i] != "until") {
    if (!is_valid_jurisdiction(segs[i])) {
      malformed("jurisdiction", "'" + std::string(segs[i]) + "' is not an ISO 3166-1 alpha-2 code");
    }
    out.jurisdiction = std::string(segs[i]);
    ++i;
  }
  if (i < segs.size()) {
    ValidityKind kind = segs[i] == "from" ? ValidityKind::kFrom : ValidityKind::kUntil;
    if (segs[i] != "from" && segs[i] != "until") {
      malformed("validity", "expected 'from' or 'until', got '" + std::string(segs[i]) + "'");
    }
    if (i + 1 >= segs.size()) malformed("validity", "missing date");
    if (!is_valid_date(segs[i + 1])) {
      malformed("validity", "'" + std::string(segs[i + 1]) + "' is not a calendar date");
    }
    out.validity = Validity{kind, std::string(segs[i + 1])};
    i += 2;
  }
  if (i < segs.size()) malformed("path", "unexpected segment '" + std::string(segs[i]) + "'");
  return out;
}

std::string build_statement_uri(const StatementUri& s, const NamespaceConfig& cfg) {
  auto check = [](bool ok, const char* component) {
    if (!ok) {
      throw UriError(UriError::Kind::kInvariant, component,
                     std::string("invalid ") + component);
    }
  };
  check(is_valid_name(s.name), "name");
  check(is_valid_version(s.version), "version");
  check(!s.jurisdiction || is_valid_jurisdiction(*s.jurisdiction), "jurisdiction");
  check(!s.validity || is_valid_date(s.validity->date), "validity");
  std::string out = cfg.base + "/" + cfg.resource_segment + "/" + s.name + "/" + s.version + "/";
  if (s.jurisdiction) out += *s.jurisdiction + "/";
  if (s.validity) {
    out += (s.validity->kind == ValidityKind::kFrom ? "from/" : "until/") + s.validity->date + "/";
  }
  return out;
}

std::string normalize_uri(std::string_view uri, const NamespaceConfig& cfg) {
  return build_statement_uri(parse_statement_uri(uri, cfg), cfg);
}

std::string statement_path(const StatementUri& s, const NamespaceConfig& cfg) {
  std::string out = cfg.resource_segment + "/" + s.name + "/" + s.version + "/";
  if (s.jurisdiction) out += *s.jurisdiction + "/";
  return out;
}

std::optional<std::string> parse_unversioned_name(std::string_view uri,
                                                  const NamespaceConfig& cfg) {
  auto tail = resource_tail(uri, cfg);
  if (!tail) return std::nullopt;
  auto segs = split_segments(*tail);
  if (segs.size() != 1 || !is_valid_name(segs[0])) return std::nullopt;
  return std::string(segs[0]);
}

bool is_scheme_uri(std::string_view uri, const NamespaceConfig& cfg) {
  auto tail = resource_tail(uri, cfg);
  return tail && (tail->empty() || *tail == "/");
}

bool in_base_namespace(std::string_view uri, const NamespaceConfig& cfg) {
  auto rest = after_scheme(uri);
  auto base = after_scheme(cfg.base);
  if (rest.empty() || !rest.starts_with(base)) return false;
  rest.remove_prefix(base.size());
  return rest.empty() || rest.front() == '/';
}

}  // namespace rsvocab::uri
