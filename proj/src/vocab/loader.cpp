#include <algorithm>
#include <map>
#include <set>

#include "rsvocab/rdf/namespaces.hpp"
#include "rsvocab/vocab/vocabulary.hpp"

namespace rsvocab::vocab {

using rdf::BlankNode;
using rdf::Iri;
using rdf::Literal;
using rdf::Term;

std::string_view to_string(MatchRelation r) {
  switch (r) {
    case MatchRelation::kClose: return "closeMatch";
    case MatchRelation::kExact: return "exactMatch";
    case MatchRelation::kRelated: return "relatedMatch";
  }
  return "";
}

namespace terms {
using rdf::ns::iri;
Iri rights_statement() { return iri(rdf::ns::kDcterms, "RightsStatement"); }
Iri cc_license() { return iri(rdf::ns::kCc, "License"); }
Iri concept_scheme() { return iri(rdf::ns::kSkos, "ConceptScheme"); }
Iri pref_label() { return iri(rdf::ns::kSkos, "prefLabel"); }
Iri definition() { return iri(rdf::ns::kSkos, "definition"); }
Iri scope_note() { return iri(rdf::ns::kSkos, "scopeNote"); }
Iri has_top_concept() { return iri(rdf::ns::kSkos, "hasTopConcept"); }
Iri identifier() { return iri(rdf::ns::kDc, "identifier"); }
Iri creator() { return iri(rdf::ns::kDc, "creator"); }
Iri has_version() { return iri(rdf::ns::kDcterms, "hasVersion"); }
Iri modified() { return iri(rdf::ns::kDcterms, "modified"); }
Iri coverage() { return iri(rdf::ns::kDcterms, "coverage"); }
Iri title() { return iri(rdf::ns::kDcterms, "title"); }
Iri match(MatchRelation r) { return iri(rdf::ns::kSkos, to_string(r)); }
}  // namespace terms

const std::vector<std::string>& odrl_namespaces() {
  static const std::vector<std::string> kNamespaces{
      std::string(kDefaultOdrlNamespace),
      "http://www.w3c.org/ns/odrl/2/",
      "http://www.w3.org/community/odrl/two/vocab/2.1/",
  };
  return kNamespaces;
}

namespace {

class Loader {
 public:
  Loader(const rdf::Graph& g, const uri::NamespaceConfig& cfg, const LoadOptions& options)
      : g_(g), cfg_(cfg), options_(options) {}

  LoadResult run() {
    load_scheme();
    std::map<std::string, std::string> owner;  // canonical key -> subject
    for (const auto& subject : candidates()) {
      auto record = load_statement(subject);
      if (!record) continue;
      std::string key = uri::build_statement_uri(record->uri, cfg_);
      auto [it, inserted] = owner.emplace(key, subject);
      if (!inserted) {
        error("R9", subject, "shares canonical URI " + key + " with " + it->second);
        continue;
      }
      result_.vocabulary.statements.emplace(key, std::move(*record));
    }
    if (result_.vocabulary.statements.empty() && result_.report.errors.empty()) {
      warning("W0", cfg_.scheme_uri(), "vocabulary contains no rights statements");
    }
    return std::move(result_);
  }

 private:
  void error(std::string rule, const std::string& subject, std::string message) {
    result_.report.errors.push_back({std::move(rule), subject, std::move(message)});
  }
  void warning(std::string rule, const std::string& subject, std::string message) {
    result_.report.warnings.push_back({std::move(rule), subject, std::move(message)});
  }

  bool has_type(const Term& s, const Iri& type) const {
    return g_.contains(rdf::Triple(s, rdf::ns::rdf_type(), type));
  }

  void load_scheme() {
    std::vector<Term> schemes;
    for (const auto& t : g_) {
      if (t.predicate() == rdf::ns::rdf_type() && t.object() == Term(terms::concept_scheme()) &&
          rdf::is_iri(t.subject())) {
        schemes.push_back(t.subject());
      }
    }
    auto& v = result_.vocabulary;
    v.scheme_uri = cfg_.scheme_uri();
    if (schemes.empty()) return;
    if (schemes.size() > 1) {
      warning("W3", cfg_.scheme_uri(), "more than one skos:ConceptScheme; using the first");
    }
    const auto& scheme_iri = std::get<Iri>(schemes.front()).value();
    if (uri::is_scheme_uri(scheme_iri, cfg_)) {
      v.scheme_uri = cfg_.scheme_uri();
    } else {
      warning("W3", scheme_iri, "concept scheme is not at " + cfg_.scheme_uri());
      v.scheme_uri = scheme_iri;
    }
    for (const auto& o : g_.objects(schemes.front(), terms::title())) {
      const auto* l = std::get_if<Literal>(&o);
      if (!l || !l->language()) {
        warning("W4", scheme_iri, "dcterms:title without language tag ignored");
        continue;
      }
      v.title.emplace(*l->language(), l->lexical());
    }
  }

  // Subjects under {base}/{rs}/ that are typed as a rights statement or
  // carry statement properties. Others typed dcterms:RightsStatement are
  // reported as outside the namespace.
  std::vector<std::string> candidates() {
    std::set<std::string> out;
    const std::set<Iri> markers{terms::pref_label(), terms::identifier(),
                                terms::definition(), terms::has_version()};
    for (const auto& t : g_) {
      const auto* s = std::get_if<Iri>(&t.subject());
      if (!s) continue;
      bool typed = t.predicate() == rdf::ns::rdf_type() &&
                   (t.object() == Term(terms::rights_statement()) ||
                    t.object() == Term(terms::cc_license()));
      bool marked = markers.count(t.predicate()) > 0;
      if (!typed && !marked) continue;
      if (uri::is_scheme_uri(s->value(), cfg_)) continue;
      bool in_namespace = true;
      try {
        uri::parse_statement_uri(s->value(), cfg_);
      } catch (const uri::UriError& e) {
        in_namespace = e.kind() != uri::UriError::Kind::kNotInNamespace;
      }
      if (in_namespace) {
        out.insert(s->value());
      } else if (typed && t.object() == Term(terms::rights_statement())) {
        warning("W2", s->value(), "rights statement outside " + cfg_.scheme_uri() + " ignored");
      }
    }
    return {out.begin(), out.end()};
  }

  // Single plain-ish literal value of a property, or nullopt with an error.
  std::optional<std::string> single_literal(const Term& s, const Iri& p, const std::string& rule,
                                            const std::string& subject) {
    auto objs = g_.objects(s, p);
    std::string name = rdf::compact_or_full(p.value());
    if (objs.empty()) {
      error(rule, subject, name + " is missing");
      return std::nullopt;
    }
    if (objs.size() > 1) {
      error(rule, subject, name + " has " + std::to_string(objs.size()) + " values");
      return std::nullopt;
    }
    const auto* l = std::get_if<Literal>(&objs.front());
    if (!l) {
      error(rule, subject, name + " must be a literal");
      return std::nullopt;
    }
    return l->lexical();
  }

  LangMap tagged_texts(const Term& s, const Iri& p, const std::string& rule,
                       const std::string& subject, bool require_default) {
    LangMap out;
    std::string name = rdf::compact_or_full(p.value());
    for (const auto& o : g_.objects(s, p)) {
      const auto* l = std::get_if<Literal>(&o);
      if (!l) {
        error(rule, subject, name + " must be a literal");
      } else if (!l->language()) {
        error(rule, subject, name + " \"" + l->lexical() + "\" has no language tag");
      } else if (!out.emplace(*l->language(), l->lexical()).second) {
        error(rule, subject, name + " has more than one value in language '" + *l->language() + "'");
      }
    }
    if (require_default && !out.count(options_.default_language)) {
      error(rule, subject, name + " has no '" + options_.default_language + "' value");
    }
    return out;
  }

  std::optional<StatementRecord> load_statement(const std::string& subject) {
    const Term s = Iri(subject);
    StatementRecord r;
    try {
      r.uri = uri::parse_statement_uri(subject, cfg_);
      if (r.uri.validity) {
        error("R0", subject, "statement URI carries a validity qualifier");
        return std::nullopt;
      }
    } catch (const uri::UriError& e) {
      auto name = uri::parse_unversioned_name(subject, cfg_);
      if (!name) {
        error("R0", subject, e.what());
        return std::nullopt;
      }
      // Unversioned concept URI: the version is taken from the data.
      auto versions = g_.objects(s, terms::has_version());
      const Literal* v = versions.size() == 1 ? std::get_if<Literal>(&versions.front()) : nullptr;
      if (!v || !uri::is_valid_version(v->lexical())) {
        error("R5", subject, "unversioned statement URI needs one well-formed dcterms:hasVersion");
        return std::nullopt;
      }
      r.uri = uri::StatementUri{*name, v->lexical(), std::nullopt, std::nullopt};
    }

    if (!has_type(s, terms::rights_statement())) {
      error("R1", subject, "not typed dcterms:RightsStatement");
    }
    if (has_type(s, terms::cc_license())) {
      warning("W1", subject, "typed cc:License; dcterms:RightsStatement is the intended class");
    }

    r.pref_labels = tagged_texts(s, terms::pref_label(), "R2", subject, true);
    r.definitions = tagged_texts(s, terms::definition(), "R3", subject, true);
    r.notes = tagged_texts(s, terms::scope_note(), "R3", subject, false);

    if (auto id = single_literal(s, terms::identifier(), "R4", subject)) {
      r.identifier = *id;
      if (*id != r.uri.name) {
        error("R4", subject, "dc:identifier \"" + *id + "\" differs from URI name \"" + r.uri.name + "\"");
      }
    }
    if (auto ver = single_literal(s, terms::has_version(), "R5", subject)) {
      r.version = *ver;
      if (*ver != r.uri.version) {
        error("R5", subject, "dcterms:hasVersion \"" + *ver + "\" differs from URI version \"" +
                                 r.uri.version + "\"");
      }
    }
    if (auto mod = single_literal(s, terms::modified(), "R6", subject)) {
      r.modified = *mod;
      if (!uri::is_valid_date(*mod)) {
        error("R6", subject, "dcterms:modified \"" + *mod + "\" is not a YYYY-MM-DD date");
      }
    }

    auto creators = g_.objects(s, terms::creator());
    if (creators.empty()) {
      warning("W5", subject, "dc:creator is missing");
    } else if (const auto* c = std::get_if<Literal>(&creators.front())) {
      r.creator = c->lexical();
      if (creators.size() > 1) warning("W5", subject, "more than one dc:creator; using the first");
    } else {
      warning("W5", subject, "dc:creator is not a literal");
    }

    load_jurisdiction(s, subject, r);
    load_matches(s, subject, r);
    load_permissions(s, subject, r);
    return r;
  }

  void load_jurisdiction(const Term& s, const std::string& subject, StatementRecord& r) {
    auto objs = g_.objects(s, terms::coverage());
    if (objs.size() > 1) {
      error("R10", subject, "more than one dcterms:coverage");
    } else if (objs.size() == 1) {
      const auto* l = std::get_if<Literal>(&objs.front());
      if (!l || !uri::is_valid_jurisdiction(l->lexical())) {
        error("R10", subject, "dcterms:coverage must be an ISO 3166-1 alpha-2 literal");
      } else {
        r.jurisdiction = l->lexical();
      }
    }
    if (r.jurisdiction != r.uri.jurisdiction) {
      error("R10", subject, "jurisdiction asserted in data (" + r.jurisdiction.value_or("none") +
                                ") differs from URI (" + r.uri.jurisdiction.value_or("none") + ")");
    }
  }

  void load_matches(const Term& s, const std::string& subject, StatementRecord& r) {
    for (auto rel : {MatchRelation::kClose, MatchRelation::kExact, MatchRelation::kRelated}) {
      for (const auto& o : g_.objects(s, terms::match(rel))) {
        const auto* target = std::get_if<Iri>(&o);
        if (!target) {
          error("R7", subject, "skos:" + std::string(to_string(rel)) + " target must be an IRI");
          continue;
        }
        if (uri::in_base_namespace(target->value(), cfg_)) {
          error("R7", subject, "skos:" + std::string(to_string(rel)) + " target " +
                                   target->value() + " is inside the local namespace");
          continue;
        }
        r.matches.push_back({rel, *target});
      }
    }
    std::sort(r.matches.begin(), r.matches.end());
  }

  std::optional<Iri> single_iri(const Term& node, const Iri& p, const std::string& subject) {
    auto objs = g_.objects(node, p);
    if (objs.size() != 1 || !rdf::is_iri(objs.front())) {
      error("R8", subject, rdf::compact_or_full(p.value()) + " must have exactly one IRI value, found " +
                               std::to_string(objs.size()) + " value(s)");
      return std::nullopt;
    }
    return std::get<Iri>(objs.front());
  }

  void load_permissions(const Term& s, const std::string& subject, StatementRecord& r) {
    for (const auto& odrl : odrl_namespaces()) {
      for (const auto& perm : g_.objects(s, rdf::ns::iri(odrl, "permission"))) {
        if (rdf::is_literal(perm)) {
          error("R8", subject, "odrl:permission must be a node, not a literal");
          continue;
        }
        auto action = single_iri(perm, rdf::ns::iri(odrl, "action"), subject);
        PermissionSpec spec{odrl, action.value_or(Iri(odrl + "use")), {}};
        bool ok = action.has_value();
        for (const auto& c : g_.objects(perm, rdf::ns::iri(odrl, "constraint"))) {
          if (rdf::is_literal(c)) {
            error("R8", subject, "odrl:constraint must be a node, not a literal");
            ok = false;
            continue;
          }
          auto op = single_iri(c, rdf::ns::iri(odrl, "operator"), subject);
          auto purpose = single_iri(c, rdf::ns::iri(odrl, "purpose"), subject);
          if (op && purpose) {
            spec.constraints.push_back({*op, *purpose});
          } else {
            ok = false;
          }
        }
        if (ok) {
          std::sort(spec.constraints.begin(), spec.constraints.end());
          r.permissions.push_back(std::move(spec));
        }
      }
    }
    std::sort(r.permissions.begin(), r.permissions.end());
  }

  const rdf::Graph& g_;
  const uri::NamespaceConfig& cfg_;
  const LoadOptions& options_;
  LoadResult result_;
};

}  // namespace

LoadResult load_vocabulary(const rdf::Graph& g, const uri::NamespaceConfig& cfg,
                           const LoadOptions& options) {
  return Loader(g, cfg, options).run();
}

const StatementRecord* lookup_statement(const Vocabulary& v, std::string_view uri,
                                        const uri::NamespaceConfig& cfg) {
  try {
    auto parsed = uri::parse_statement_uri(uri, cfg).without_validity();
    auto it = v.statements.find(uri::build_statement_uri(parsed, cfg));
    return it == v.statements.end() ? nullptr : &it->second;
  } catch (const uri::UriError&) {
    return nullptr;
  }
}

}  // namespace rsvocab::vocab
