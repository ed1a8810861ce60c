#include "rsvocab/vocab/object_check.hpp"

#include <algorithm>

#include "rsvocab/rdf/namespaces.hpp"

namespace rsvocab::vocab {

std::string_view to_string(ReferenceClass c) {
  switch (c) {
    case ReferenceClass::kResolved: return "RESOLVED";
    case ReferenceClass::kUnknown: return "UNKNOWN";
    case ReferenceClass::kMalformed: return "MALFORMED";
    case ReferenceClass::kExternal: return "EXTERNAL";
    case ReferenceClass::kFreeText: return "FREE_TEXT";
  }
  return "";
}

std::map<ReferenceClass, std::size_t> ReferenceReport::counts() const {
  std::map<ReferenceClass, std::size_t> out;
  for (const auto& r : references) ++out[r.classification];
  return out;
}

bool ReferenceReport::ok() const {
  auto c = counts();
  return c[ReferenceClass::kUnknown] == 0 && c[ReferenceClass::kMalformed] == 0;
}

ReferenceReport check_object_references(const rdf::Graph& objects, const Vocabulary& v,
                                        const uri::NamespaceConfig& cfg) {
  const std::vector<rdf::Iri> predicates{rdf::ns::iri(rdf::ns::kEdm, "rights"),
                                         rdf::ns::iri(rdf::ns::kDcterms, "rights"),
                                         rdf::ns::iri(rdf::ns::kDc, "rights")};
  ReferenceReport report;
  for (const auto& t : objects) {
    if (std::find(predicates.begin(), predicates.end(), t.predicate()) == predicates.end()) {
      continue;
    }
    ObjectReference ref{rdf::to_string(t.subject()), rdf::compact_or_full(t.predicate().value()),
                        "", ReferenceClass::kExternal};
    if (const auto* l = std::get_if<rdf::Literal>(&t.object())) {
      ref.value = l->lexical();
      ref.classification = ReferenceClass::kFreeText;
    } else if (const auto* iri = std::get_if<rdf::Iri>(&t.object())) {
      ref.value = iri->value();
      try {
        uri::parse_statement_uri(iri->value(), cfg);
        ref.classification = lookup_statement(v, iri->value(), cfg) ? ReferenceClass::kResolved
                                                                    : ReferenceClass::kUnknown;
      } catch (const uri::UriError&) {
        ref.classification = uri::in_base_namespace(iri->value(), cfg)
                                 ? ReferenceClass::kMalformed
                                 : ReferenceClass::kExternal;
      }
    } else {
      // Blank-node rights values name nothing resolvable.
      continue;
    }
    report.references.push_back(std::move(ref));
  }
  return report;
}

}  // namespace rsvocab::vocab
