#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "rsvocab/vocab/vocabulary.hpp"

namespace rsvocab::vocab {

enum class ReferenceClass { kResolved, kUnknown, kMalformed, kExternal, kFreeText };

std::string_view to_string(ReferenceClass c);

struct ObjectReference {
  std::string subject;    // N-Triples form of the described object
  std::string predicate;  // compact form, e.g. "edm:rights"
  std::string value;      // IRI or literal text
  ReferenceClass classification;
};

struct ReferenceReport {
  std::vector<ObjectReference> references;

  std::map<ReferenceClass, std::size_t> counts() const;
  /// No UNKNOWN or MALFORMED references.
  bool ok() const;
};

/// Classifies every edm:rights / dcterms:rights / dc:rights value in
/// `objects`. IRIs are RESOLVED, UNKNOWN (well-formed, no record),
/// MALFORMED (under the namespace base but not a statement URI) or
/// EXTERNAL; literal values are FREE_TEXT.
ReferenceReport check_object_references(const rdf::Graph& objects, const Vocabulary& v,
                                        const uri::NamespaceConfig& cfg);

}  // namespace rsvocab::vocab
