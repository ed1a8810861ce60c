#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "rsvocab/rdf/term.hpp"

namespace rsvocab::rdf {

class Triple {
 public:
  /// Throws std::invalid_argument if subject is a literal.
  Triple(Term subject, Iri predicate, Term object);

  const Term& subject() const noexcept { return subject_; }
  const Iri& predicate() const noexcept { return predicate_; }
  const Term& object() const noexcept { return object_; }

  friend auto operator<=>(const Triple&, const Triple&) = default;
  friend bool operator==(const Triple&, const Triple&) = default;

 private:
  Term subject_;
  Iri predicate_;
  Term object_;
};

/// Duplicate-free set of triples, iterated in sorted order.
class Graph {
 public:
  using const_iterator = std::set<Triple>::const_iterator;

  Graph() = default;
  Graph(std::initializer_list<Triple> triples) : triples_(triples) {}

  /// Returns false when the triple was already present.
  bool insert(Triple t) { return triples_.insert(std::move(t)).second; }
  void merge(const Graph& other) {
    triples_.insert(other.triples_.begin(), other.triples_.end());
  }
  bool erase(const Triple& t) { return triples_.erase(t) > 0; }
  bool contains(const Triple& t) const { return triples_.count(t) > 0; }

  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }
  const_iterator begin() const noexcept { return triples_.begin(); }
  const_iterator end() const noexcept { return triples_.end(); }

  /// Triples with the given subject, in sorted order.
  std::vector<Triple> with_subject(const Term& subject) const;
  /// Objects of (subject, predicate, *), in sorted order.
  std::vector<Term> objects(const Term& subject, const Iri& predicate) const;
  /// Distinct subjects, in sorted order.
  std::vector<Term> subjects() const;
  std::vector<BlankNode> blank_nodes() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::set<Triple> triples_;
};

/// Mints fresh blank-node labels b0, b1, ... scoped to one document.
class BlankNodeFactory {
 public:
  explicit BlankNodeFactory(std::string prefix = "b") : prefix_(std::move(prefix)) {}
  BlankNode next() { return BlankNode(prefix_ + std::to_string(counter_++)); }

 private:
  std::string prefix_;
  std::size_t counter_ = 0;
};

}  // namespace rsvocab::rdf
