#include "ordering.hpp"

#include <algorithm>

namespace rsvocab::rdf::detail {

BlankNodeKeys::BlankNodeKeys(const Graph& g) : graph_(g) {
  std::vector<BlankNode> stack;
  for (const auto& b : g.blank_nodes()) {
    if (!keys_.count(b)) keys_[b] = compute(b, stack);
  }
}

std::string BlankNodeKeys::compute(const BlankNode& b,
                                   std::vector<BlankNode>& stack) {
  if (auto it = keys_.find(b); it != keys_.end()) return it->second;
  if (std::find(stack.begin(), stack.end(), b) != stack.end()) {
    return "_:" + b.label();
  }
  stack.push_back(b);
  std::vector<std::string> parts;
  for (const auto& t : graph_.with_subject(b)) {
    std::string obj;
    if (const auto* nested = std::get_if<BlankNode>(&t.object())) {
      obj = compute(*nested, stack);
    } else {
      obj = to_string(t.object());
    }
    parts.push_back("<" + t.predicate().value() + "> " + obj);
  }
  stack.pop_back();
  std::sort(parts.begin(), parts.end());
  std::string key = "[";
  for (const auto& p : parts) key += p + ";";
  key += "]";
  // Only memoize keys that did not depend on a cycle fallback.
  if (key.find("_:") == std::string::npos) keys_[b] = key;
  return key;
}

const std::string& BlankNodeKeys::key(const BlankNode& b) const {
  static const std::string kEmpty;
  auto it = keys_.find(b);
  return it == keys_.end() ? kEmpty : it->second;
}

bool BlankNodeKeys::less(const Term& a, const Term& b) const {
  if (a.index() != b.index()) return a.index() < b.index();
  if (const auto* ba = std::get_if<BlankNode>(&a)) {
    const auto& bb = std::get<BlankNode>(b);
    const auto& ka = key(*ba);
    const auto& kb = key(bb);
    if (ka != kb) return ka < kb;
    return ba->label() < bb.label();
  }
  return a < b;
}

}  // namespace rsvocab::rdf::detail
