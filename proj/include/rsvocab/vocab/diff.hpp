#pragma once

#include <string>
#include <vector>

#include "rsvocab/vocab/vocabulary.hpp"

namespace rsvocab::vocab {

struct Change {
  std::string statement;  // statement name, e.g. "ic-edu"
  std::string uri;        // canonical URI of the statement
  std::string property;   // e.g. "skos:definition@en"
  std::string old_value;
  std::string new_value;
};

struct VersionReport {
  std::vector<Change> violations;
  std::vector<Change> infos;

  bool ok() const noexcept { return violations.empty(); }
  bool empty() const noexcept { return violations.empty() && infos.empty(); }
};

/// Compares two vocabularies statement by statement. Human-readable text
/// (prefLabel, definition, scopeNote) that changes without a version bump
/// is a violation, or an info when `allow_editorial` is set. Changes to
/// machine-readable properties are infos. Statements that moved to a new
/// version, and added or removed statements, are infos.
VersionReport diff_versions(const Vocabulary& old_vocab, const Vocabulary& new_vocab,
                            bool allow_editorial);

}  // namespace rsvocab::vocab
