#pragma once

#include <map>
#include <string>
#include <vector>

#include "rsvocab/rdf/graph.hpp"

namespace rsvocab::rdf::detail {

/// Label-independent sort keys for blank nodes, so that serializers order
/// tree-shaped structures the same way however the nodes were labelled.
/// A node's key is the sorted rendering of its outgoing triples, with nested
/// blank nodes expanded; nodes on a cycle fall back to their label.
class BlankNodeKeys {
 public:
  explicit BlankNodeKeys(const Graph& g);

  const std::string& key(const BlankNode& b) const;

  /// Total order: IRIs by value, blank nodes by (key, label), literals by value.
  bool less(const Term& a, const Term& b) const;

 private:
  std::string compute(const BlankNode& b, std::vector<BlankNode>& stack);

  const Graph& graph_;
  std::map<BlankNode, std::string> keys_;
};

}  // namespace rsvocab::rdf::detail
