#include "rsvocab/site/generator.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "rsvocab/rdf/formats.hpp"

namespace rsvocab::site {

namespace {

std::string now_iso8601() {
  auto now = std::chrono::system_clock::now();
  auto t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void add(SiteManifest& m, std::string path, std::string content, std::string_view media_type,
         std::optional<std::string> lang = std::nullopt) {
  m.entries.emplace(std::move(path),
                    Document{std::move(content), std::string(media_type), std::move(lang)});
}

}  // namespace

SiteManifest generate_site(const vocab::Vocabulary& v, const uri::NamespaceConfig& cfg,
                           const SiteOptions& options) {
  // Revalidate from the vocabulary's own triples so that hand-assembled or
  // stale Vocabulary values cannot be published.
  const rdf::Graph full = vocab::vocabulary_graph(v, cfg);
  auto check = vocab::load_vocabulary(full, cfg, {options.default_language});
  if (!check.report.accepted()) {
    const auto& e = check.report.errors.front();
    throw SiteError("vocabulary does not validate (" + std::to_string(check.report.errors.size()) +
                    " error(s), first: " + e.rule + " " + e.subject + ": " + e.message + ")");
  }

  SiteManifest m;
  m.generated_at = now_iso8601();
  for (const auto& [key, r] : v.statements) {
    const std::string dir = uri::statement_path(r.uri, cfg);
    const rdf::Graph g = vocab::statement_graph(r, cfg);
    add(m, dir + "data.ttl", rdf::serialize_turtle(g), kTurtle);
    add(m, dir + "data.jsonld", rdf::serialize_jsonld(g), kJsonLd);
    for (const auto& [lang, _] : r.pref_labels) {
      add(m, dir + "index." + lang + ".html", render_statement_html(r, lang, v, cfg), kHtml, lang);
    }
  }
  const std::string root = cfg.resource_segment + "/";
  add(m, root + "data.ttl", rdf::serialize_turtle(full), kTurtle);
  add(m, root + "data.jsonld", rdf::serialize_jsonld(full), kJsonLd);
  for (const auto& lang : overview_languages(v, options)) {
    add(m, root + "index." + lang + ".html", render_overview_html(v, lang, cfg, options), kHtml, lang);
  }
  return m;
}

std::optional<std::string> page_language(std::string_view filename) {
  if (!filename.starts_with("index.") || !filename.ends_with(".html")) return std::nullopt;
  std::string_view mid = filename.substr(6, filename.size() - 6 - 5);
  auto norm = rdf::normalize_language_tag(mid);
  if (!norm || *norm != mid) return std::nullopt;
  return norm;
}

void write_site(const SiteManifest& m, const std::filesystem::path& dir) {
  for (const auto& [path, doc] : m.entries) {
    auto target = dir / std::filesystem::path(path);
    std::filesystem::create_directories(target.parent_path());
    std::ofstream out(target, std::ios::binary | std::ios::trunc);
    if (!out) throw std::filesystem::filesystem_error("cannot open for writing", target,
                                                      std::make_error_code(std::errc::io_error));
    out.write(doc.content.data(), static_cast<std::streamsize>(doc.content.size()));
    if (!out) throw std::filesystem::filesystem_error("write failed", target,
                                                      std::make_error_code(std::errc::io_error));
  }
}

SiteManifest read_site(const std::filesystem::path& dir) {
  SiteManifest m;
  for (const auto& entry : std::filesystem::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    std::string rel = std::filesystem::relative(entry.path(), dir).generic_string();
    std::ifstream in(entry.path(), std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string name = entry.path().filename().string();
    std::string media = "application/octet-stream";
    std::optional<std::string> lang;
    if (name.ends_with(".ttl")) {
      media = kTurtle;
    } else if (name.ends_with(".jsonld")) {
      media = kJsonLd;
    } else if (name.ends_with(".html")) {
      media = kHtml;
      lang = page_language(name);
    }
    add(m, std::move(rel), buf.str(), media, std::move(lang));
  }
  return m;
}

}  // namespace rsvocab::site
