#include <algorithm>
#include <set>
#include <sstream>

#include "rsvocab/rdf/namespaces.hpp"
#include "rsvocab/site/generator.hpp"

namespace rsvocab::site {

using vocab::StatementRecord;
using vocab::Vocabulary;

std::string escape_html(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&#39;"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

namespace {

std::string prefix_attribute() {
  std::string out;
  for (const auto& p : rdf::kNamespaceTable) {
    if (!out.empty()) out += " ";
    out += std::string(p.name) + ": " + std::string(p.iri);
  }
  return out;
}

std::string curie(const rdf::Iri& iri) { return escape_html(rdf::compact_or_full(iri.value())); }

void head(std::ostringstream& out, std::string_view lang, std::string_view title) {
  out << "<!DOCTYPE html>\n"
      << "<html lang=\"" << escape_html(lang) << "\" prefix=\"" << prefix_attribute() << "\">\n"
      << "<head>\n<meta charset=\"utf-8\">\n"
      << "<title>" << escape_html(title) << "</title>\n"
      << "</head>\n<body>\n";
}

// Order statements by name, then version, then jurisdiction.
std::vector<const StatementRecord*> sorted_statements(const Vocabulary& v) {
  std::vector<const StatementRecord*> out;
  for (const auto& [k, r] : v.statements) out.push_back(&r);
  std::sort(out.begin(), out.end(), [](const auto* a, const auto* b) {
    return std::tie(a->uri.name, a->uri.version, a->uri.jurisdiction) <
           std::tie(b->uri.name, b->uri.version, b->uri.jurisdiction);
  });
  return out;
}

// Value in `lang`, else in `fallback`; returns (text, language used).
std::optional<std::pair<std::string, std::string>> pick(const vocab::LangMap& m,
                                                        std::string_view lang,
                                                        std::string_view fallback) {
  if (auto it = m.find(std::string(lang)); it != m.end()) return std::make_pair(it->second, it->first);
  if (auto it = m.find(std::string(fallback)); it != m.end()) return std::make_pair(it->second, it->first);
  return std::nullopt;
}

}  // namespace

std::string render_statement_html(const StatementRecord& r, std::string_view lang,
                                  const Vocabulary& v, const uri::NamespaceConfig& cfg) {
  auto label = r.pref_labels.find(std::string(lang));
  if (label == r.pref_labels.end()) {
    throw SiteError("statement " + r.uri.name + " has no translation '" + std::string(lang) + "'");
  }
  const std::string subject = uri::build_statement_uri(r.uri, cfg);
  std::ostringstream out;
  head(out, lang, label->second);
  out << "<main about=\"" << escape_html(subject) << "\" typeof=\"dcterms:RightsStatement\">\n"
      << "<h1 property=\"skos:prefLabel\">" << escape_html(label->second) << "</h1>\n"
      << "<p><a href=\"" << escape_html(subject) << "\">" << escape_html(subject) << "</a>"
      << " in <a href=\"" << escape_html(v.scheme_uri) << "\">" << escape_html(v.scheme_uri)
      << "</a></p>\n";

  if (auto d = r.definitions.find(std::string(lang)); d != r.definitions.end()) {
    out << "<section>\n<h2>Definition</h2>\n<p property=\"skos:definition\">"
        << escape_html(d->second) << "</p>\n</section>\n";
  }
  if (auto n = r.notes.find(std::string(lang)); n != r.notes.end()) {
    out << "<section>\n<h2>Scope</h2>\n<p property=\"skos:scopeNote\">" << escape_html(n->second)
        << "</p>\n</section>\n";
  }

  out << "<dl>\n";
  out << "<dt>Identifier</dt><dd property=\"dc:identifier\" lang=\"\">" << escape_html(r.identifier)
      << "</dd>\n";
  out << "<dt>Version</dt><dd property=\"dcterms:hasVersion\" lang=\"\">" << escape_html(r.version)
      << "</dd>\n";
  out << "<dt>Modified</dt><dd property=\"dcterms:modified\" lang=\"\">" << escape_html(r.modified)
      << "</dd>\n";
  if (r.jurisdiction) {
    out << "<dt>Jurisdiction</dt><dd property=\"dcterms:coverage\" lang=\"\">"
        << escape_html(*r.jurisdiction) << "</dd>\n";
  } else {
    out << "<dt>Jurisdiction</dt><dd>worldwide</dd>\n";
  }
  if (r.creator) {
    out << "<dt>Creator</dt><dd property=\"dc:creator\" lang=\"\">" << escape_html(*r.creator)
        << "</dd>\n";
  }
  out << "</dl>\n";

  if (!r.matches.empty()) {
    out << "<section>\n<h2>Related standards</h2>\n<ul>\n";
    for (const auto& m : r.matches) {
      std::string target = escape_html(m.target.value());
      out << "<li>" << to_string(m.relation) << ": <a property=\"" << curie(vocab::terms::match(m.relation))
          << "\" resource=\"" << target << "\" href=\"" << target << "\">" << target << "</a></li>\n";
    }
    out << "</ul>\n</section>\n";
  }

  if (!r.permissions.empty()) {
    out << "<section>\n<h2>Permissions</h2>\n<ul>\n";
    std::size_t pi = 0;
    for (const auto& p : r.permissions) {
      const auto& odrl = p.odrl_namespace;
      std::string node = "_:permission" + std::to_string(pi++);
      out << "<li property=\"" << curie(rdf::ns::iri(odrl, "permission")) << "\" resource=\"" << node
          << "\">\n<div about=\"" << node << "\">action: <a property=\""
          << curie(rdf::ns::iri(odrl, "action")) << "\" resource=\"" << escape_html(p.action.value())
          << "\" href=\"" << escape_html(p.action.value()) << "\">" << escape_html(p.action.value())
          << "</a>\n";
      std::size_t ci = 0;
      for (const auto& c : p.constraints) {
        std::string cnode = node + "c" + std::to_string(ci++);
        out << "<div property=\"" << curie(rdf::ns::iri(odrl, "constraint")) << "\" resource=\""
            << cnode << "\"></div>\n"
            << "<p about=\"" << cnode << "\">constraint: <a property=\""
            << curie(rdf::ns::iri(odrl, "operator")) << "\" resource=\"" << escape_html(c.op.value())
            << "\" href=\"" << escape_html(c.op.value()) << "\">" << escape_html(c.op.value())
            << "</a> <a property=\"" << curie(rdf::ns::iri(odrl, "purpose")) << "\" resource=\""
            << escape_html(c.purpose.value()) << "\" href=\"" << escape_html(c.purpose.value())
            << "\">" << escape_html(c.purpose.value()) << "</a></p>\n";
      }
      out << "</div>\n</li>\n";
    }
    out << "</ul>\n</section>\n";
  }

  out << "<nav>\n<h2>Other translations</h2>\n<ul>\n";
  for (const auto& [other, text] : r.pref_labels) {
    if (other == lang) continue;
    out << "<li><a href=\"index." << escape_html(other) << ".html\" hreflang=\"" << escape_html(other)
        << "\" lang=\"" << escape_html(other) << "\">" << escape_html(text) << " (" << escape_html(other)
        << ")</a></li>\n";
  }
  out << "</ul>\n</nav>\n</main>\n</body>\n</html>\n";
  return out.str();
}

std::string render_overview_html(const Vocabulary& v, std::string_view lang,
                                 const uri::NamespaceConfig& cfg, const SiteOptions& options) {
  auto title = pick(v.title, lang, options.default_language);
  std::ostringstream out;
  head(out, lang, title ? title->first : "Rights statements");
  out << "<main about=\"" << escape_html(v.scheme_uri) << "\" typeof=\"skos:ConceptScheme\">\n";
  if (title) {
    out << "<h1 property=\"dcterms:title\" lang=\"" << escape_html(title->second) << "\">"
        << escape_html(title->first) << "</h1>\n";
  } else {
    out << "<h1>Rights statements</h1>\n";
  }
  out << "<ul>\n";
  for (const auto* r : sorted_statements(v)) {
    std::string subject = escape_html(uri::build_statement_uri(r->uri, cfg));
    out << "<li property=\"skos:hasTopConcept\" resource=\"" << subject << "\">"
        << "<a about=\"" << subject << "\" href=\"/" << escape_html(uri::statement_path(r->uri, cfg))
        << "\">";
    if (auto label = pick(r->pref_labels, lang, options.default_language)) {
      out << "<span property=\"skos:prefLabel\" lang=\"" << escape_html(label->second) << "\">"
          << escape_html(label->first) << "</span>";
    }
    out << "</a> <code>" << subject << "</code></li>\n";
  }
  out << "</ul>\n</main>\n</body>\n</html>\n";
  return out.str();
}

rdf::Graph overview_graph(const Vocabulary& v, std::string_view lang,
                          const uri::NamespaceConfig& cfg, const SiteOptions& options) {
  using rdf::Literal;
  using rdf::Triple;
  rdf::Graph g;
  const rdf::Iri scheme(v.scheme_uri);
  g.insert(Triple(scheme, rdf::ns::rdf_type(), vocab::terms::concept_scheme()));
  if (auto title = pick(v.title, lang, options.default_language)) {
    g.insert(Triple(scheme, vocab::terms::title(), Literal::with_language(title->first, title->second)));
  }
  for (const auto& [k, r] : v.statements) {
    const rdf::Iri s(uri::build_statement_uri(r.uri, cfg));
    g.insert(Triple(scheme, vocab::terms::has_top_concept(), s));
    if (auto label = pick(r.pref_labels, lang, options.default_language)) {
      g.insert(Triple(s, vocab::terms::pref_label(), Literal::with_language(label->first, label->second)));
    }
  }
  return g;
}

std::vector<std::string> overview_languages(const Vocabulary& v, const SiteOptions& options) {
  std::set<std::string> langs{options.default_language};
  for (const auto& [l, _] : v.title) langs.insert(l);
  for (const auto& [k, r] : v.statements) {
    for (const auto& [l, _] : r.pref_labels) langs.insert(l);
  }
  return {langs.begin(), langs.end()};
}

}  // namespace rsvocab::site
