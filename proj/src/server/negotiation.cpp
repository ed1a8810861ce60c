#include "rsvocab/server/negotiation.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <set>

#include "rsvocab/uri/statement_uri.hpp"

namespace rsvocab::server {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool is_token(std::string_view s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](unsigned char c) {
    return std::isalnum(c) || std::string_view("!#$&^_.+-*").find(static_cast<char>(c)) !=
                                  std::string_view::npos;
  });
}

// "0", "0.8", "1.000"; at most three decimals, value in [0, 1].
std::optional<Quality> parse_q(std::string_view v) {
  v = trim(v);
  if (v.empty() || (v[0] != '0' && v[0] != '1')) return std::nullopt;
  Quality whole = v[0] - '0';
  Quality frac = 0;
  if (v.size() > 1) {
    if (v[1] != '.' || v.size() > 5) return std::nullopt;
    Quality scale = 100;
    for (std::size_t i = 2; i < v.size(); ++i, scale /= 10) {
      if (!std::isdigit(static_cast<unsigned char>(v[i]))) return std::nullopt;
      frac += (v[i] - '0') * scale;
    }
  }
  Quality q = whole * kFullQuality + frac;
  if (q > kFullQuality) return std::nullopt;
  return q;
}

// Splits "value;q=0.5;x=y" into value and q. nullopt if a q parameter is
// malformed.
std::optional<std::pair<std::string_view, Quality>> value_and_q(std::string_view item) {
  auto parts = split(item, ';');
  Quality q = kFullQuality;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    auto param = trim(parts[i]);
    auto eq = param.find('=');
    if (eq == std::string_view::npos) continue;
    if (lower(trim(param.substr(0, eq))) != "q") continue;
    auto parsed = parse_q(param.substr(eq + 1));
    if (!parsed) return std::nullopt;
    q = *parsed;
  }
  return std::make_pair(trim(parts[0]), q);
}

std::optional<std::string> normalize_range_tag(std::string_view tag) {
  if (tag == "*") return std::string("*");
  auto subtags = split(tag, '-');
  std::string out;
  for (std::size_t i = 0; i < subtags.size(); ++i) {
    auto st = subtags[i];
    if (st.empty() || st.size() > 8) return std::nullopt;
    if (!std::all_of(st.begin(), st.end(), [&](unsigned char c) {
          return i == 0 ? std::isalpha(c) : std::isalnum(c);
        })) {
      return std::nullopt;
    }
    if (i > 0) out += '-';
    if (i > 0 && st.size() == 2) {
      for (char c : st) out += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    } else {
      out += lower(st);
    }
  }
  return out;
}

bool range_matches(std::string_view range, std::string_view tag) {
  if (range == "*") return true;
  std::string r = lower(range), t = lower(tag);
  return t == r || (t.size() > r.size() && t.starts_with(r) && t[r.size()] == '-');
}

constexpr std::array<std::string_view, 3> kVariants{site::kHtml, site::kTurtle, site::kJsonLd};

std::string file_for(std::string_view media_type, std::string_view lang) {
  if (media_type == site::kTurtle) return "data.ttl";
  if (media_type == site::kJsonLd) return "data.jsonld";
  return "index." + std::string(lang) + ".html";
}

}  // namespace

int MediaRange::specificity() const {
  if (type == "*") return 0;
  return subtype == "*" ? 1 : 2;
}

bool MediaRange::matches(std::string_view media_type) const {
  auto slash = media_type.find('/');
  std::string t = lower(media_type.substr(0, slash));
  std::string st = slash == std::string_view::npos ? "" : lower(media_type.substr(slash + 1));
  return (type == "*" || type == t) && (subtype == "*" || subtype == st);
}

std::vector<MediaRange> parse_accept(std::optional<std::string_view> header) {
  if (!header) return {MediaRange{"*", "*", kFullQuality}};
  struct Entry {
    MediaRange range;
    std::size_t order;
  };
  std::vector<Entry> entries;
  for (auto item : split(*header, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    auto vq = value_and_q(item);
    if (!vq) continue;
    auto slash = vq->first.find('/');
    if (slash == std::string_view::npos) continue;
    auto type = trim(vq->first.substr(0, slash));
    auto subtype = trim(vq->first.substr(slash + 1));
    if (!is_token(type) || !is_token(subtype)) continue;
    if (type == "*" && subtype != "*") continue;
    entries.push_back({MediaRange{lower(type), lower(subtype), vq->second}, entries.size()});
  }
  std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (a.range.q != b.range.q) return a.range.q > b.range.q;
    if (a.range.specificity() != b.range.specificity()) {
      return a.range.specificity() > b.range.specificity();
    }
    return a.order < b.order;
  });
  std::vector<MediaRange> out;
  for (auto& e : entries) out.push_back(std::move(e.range));
  return out;
}

std::vector<LanguageRange> parse_accept_language(std::optional<std::string_view> header) {
  if (!header) return {};
  std::vector<LanguageRange> out;
  for (auto item : split(*header, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    auto vq = value_and_q(item);
    if (!vq) continue;
    auto tag = normalize_range_tag(vq->first);
    if (!tag) continue;
    out.push_back({*tag, vq->second});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const LanguageRange& a, const LanguageRange& b) { return a.q > b.q; });
  return out;
}

std::string select_media_type(const std::vector<MediaRange>& accept) {
  std::string best(site::kHtml);
  Quality best_q = 0;
  bool tie = false;
  for (auto variant : kVariants) {
    // The most specific matching range decides a variant's quality.
    const MediaRange* decisive = nullptr;
    for (const auto& r : accept) {
      if (r.matches(variant) && (!decisive || r.specificity() > decisive->specificity())) {
        decisive = &r;
      }
    }
    Quality q = decisive ? decisive->q : 0;
    if (q > best_q) {
      best_q = q;
      best = variant;
      tie = false;
    } else if (q == best_q && q > 0) {
      tie = true;
    }
  }
  return tie ? std::string(site::kHtml) : best;
}

std::string select_language(const std::vector<std::string>& available,
                            const std::vector<LanguageRange>& ranges,
                            std::string_view default_language) {
  std::vector<std::string> sorted(available);
  std::sort(sorted.begin(), sorted.end());
  auto excluded = [&](const std::string& tag) {
    return std::any_of(ranges.begin(), ranges.end(), [&](const LanguageRange& r) {
      return r.q == 0 && r.tag != "*" && range_matches(r.tag, tag);
    });
  };
  for (const auto& r : ranges) {
    if (r.q == 0) continue;
    if (r.tag == "*") {
      std::string def(default_language);
      if (std::find(sorted.begin(), sorted.end(), def) != sorted.end() && !excluded(def)) return def;
      for (const auto& t : sorted) {
        if (!excluded(t)) return t;
      }
      continue;
    }
    for (const auto& t : sorted) {
      if (lower(t) == lower(r.tag) && !excluded(t)) return t;
    }
    for (const auto& t : sorted) {
      if (range_matches(r.tag, t) && !excluded(t)) return t;
    }
    std::string truncated = r.tag;
    while (truncated.find('-') != std::string::npos) {
      truncated.erase(truncated.rfind('-'));
      for (const auto& t : sorted) {
        if (lower(t) == lower(truncated) && !excluded(t)) return t;
      }
    }
  }
  return std::string(default_language);
}

NegotiationDecision negotiate(std::string_view path, const std::vector<MediaRange>& accept,
                              const std::vector<LanguageRange>& accept_language,
                              const NegotiationContext& ctx) {
  while (path.starts_with('/')) path.remove_prefix(1);
  NegotiationDecision d;

  if (auto it = ctx.manifest.entries.find(std::string(path)); it != ctx.manifest.entries.end()) {
    d.status = 200;
    d.media_type = it->second.media_type;
    if (it->second.media_type == site::kHtml) d.content_language = it->second.content_language;
    return d;
  }

  std::string dir;
  std::vector<std::string> languages;
  const std::string full = ctx.cfg.base + "/" + std::string(path);
  if (uri::is_scheme_uri(full, ctx.cfg)) {
    dir = ctx.cfg.resource_segment + "/";
    for (const auto& [p, doc] : ctx.manifest.entries) {
      auto slash = p.rfind('/');
      if (p.substr(0, slash + 1) == dir && doc.content_language && doc.media_type == site::kHtml) {
        languages.push_back(*doc.content_language);
      }
    }
  } else {
    const vocab::StatementRecord* record = vocab::lookup_statement(ctx.vocabulary, full, ctx.cfg);
    if (!record) return d;
    dir = uri::statement_path(record->uri, ctx.cfg);
    for (const auto& [lang, _] : record->pref_labels) languages.push_back(lang);
  }

  std::string media = select_media_type(accept);
  std::string lang = select_language(languages, accept_language, ctx.default_language);
  std::string target = dir + file_for(media, lang);
  if (!ctx.manifest.entries.count(target)) return d;
  d.status = 303;
  d.location = std::move(target);
  return d;
}

}  // namespace rsvocab::server
