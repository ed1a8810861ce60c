#include "rsvocab/rdf/namespaces.hpp"
#include "rsvocab/vocab/vocabulary.hpp"

namespace rsvocab::vocab {

using rdf::Iri;
using rdf::Literal;
using rdf::Triple;

namespace {

void add_statement(rdf::Graph& g, const StatementRecord& r, const uri::NamespaceConfig& cfg,
                   rdf::BlankNodeFactory& blanks) {
  const Iri s(uri::build_statement_uri(r.uri, cfg));
  g.insert(Triple(s, rdf::ns::rdf_type(), terms::rights_statement()));
  for (const auto& [lang, text] : r.pref_labels) {
    g.insert(Triple(s, terms::pref_label(), Literal::with_language(text, lang)));
  }
  for (const auto& [lang, text] : r.definitions) {
    g.insert(Triple(s, terms::definition(), Literal::with_language(text, lang)));
  }
  for (const auto& [lang, text] : r.notes) {
    g.insert(Triple(s, terms::scope_note(), Literal::with_language(text, lang)));
  }
  if (r.creator) g.insert(Triple(s, terms::creator(), Literal(*r.creator)));
  g.insert(Triple(s, terms::identifier(), Literal(r.identifier)));
  g.insert(Triple(s, terms::has_version(), Literal(r.version)));
  g.insert(Triple(s, terms::modified(), Literal(r.modified)));
  if (r.jurisdiction) g.insert(Triple(s, terms::coverage(), Literal(*r.jurisdiction)));
  for (const auto& m : r.matches) g.insert(Triple(s, terms::match(m.relation), m.target));
  for (const auto& p : r.permissions) {
    const auto& odrl = p.odrl_namespace;
    auto perm = blanks.next();
    g.insert(Triple(s, rdf::ns::iri(odrl, "permission"), perm));
    g.insert(Triple(perm, rdf::ns::iri(odrl, "action"), p.action));
    for (const auto& c : p.constraints) {
      auto node = blanks.next();
      g.insert(Triple(perm, rdf::ns::iri(odrl, "constraint"), node));
      g.insert(Triple(node, rdf::ns::iri(odrl, "operator"), c.op));
      g.insert(Triple(node, rdf::ns::iri(odrl, "purpose"), c.purpose));
    }
  }
}

}  // namespace

rdf::Graph statement_graph(const StatementRecord& r, const uri::NamespaceConfig& cfg) {
  rdf::Graph g;
  rdf::BlankNodeFactory blanks;
  add_statement(g, r, cfg, blanks);
  return g;
}

rdf::Graph scheme_graph(const Vocabulary& v, const uri::NamespaceConfig& cfg) {
  rdf::Graph g;
  const Iri scheme(v.scheme_uri);
  g.insert(Triple(scheme, rdf::ns::rdf_type(), terms::concept_scheme()));
  for (const auto& [lang, text] : v.title) {
    g.insert(Triple(scheme, terms::title(), Literal::with_language(text, lang)));
  }
  for (const auto& [key, r] : v.statements) {
    g.insert(Triple(scheme, terms::has_top_concept(), Iri(uri::build_statement_uri(r.uri, cfg))));
  }
  return g;
}

rdf::Graph vocabulary_graph(const Vocabulary& v, const uri::NamespaceConfig& cfg) {
  rdf::Graph g = scheme_graph(v, cfg);
  rdf::BlankNodeFactory blanks;
  for (const auto& [key, r] : v.statements) add_statement(g, r, cfg, blanks);
  return g;
}

rdf::Graph restrict_language(const rdf::Graph& g, std::string_view lang) {
  rdf::Graph out;
  for (const auto& t : g) {
    if (const auto* l = std::get_if<Literal>(&t.object())) {
      if (l->language() && *l->language() != lang) continue;
    }
    out.insert(t);
  }
  return out;
}

}  // namespace rsvocab::vocab
