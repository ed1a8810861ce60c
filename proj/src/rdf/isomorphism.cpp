#include <algorithm>
#include <map>
#include <set>

#include "rsvocab/rdf/formats.hpp"

namespace rsvocab::rdf {

namespace {

// Colour refinement over blank nodes: start from degree signatures built
// from ground neighbours, then fold in neighbour colours for a few rounds.
// Candidates for a mapping must share the final colour.
std::map<BlankNode, std::string> refine(const Graph& g,
                                        const std::vector<BlankNode>& nodes) {
  std::map<BlankNode, std::string> colour;
  for (const auto& b : nodes) colour[b] = "";
  auto term_colour = [&](const Term& t) {
    if (const auto* b = std::get_if<BlankNode>(&t)) return "_(" + colour.at(*b) + ")";
    return to_string(t);
  };
  for (std::size_t round = 0; round <= nodes.size() && round < 8; ++round) {
    std::map<BlankNode, std::vector<std::string>> sig;
    for (const auto& t : g) {
      if (const auto* s = std::get_if<BlankNode>(&t.subject())) {
        sig[*s].push_back("out " + t.predicate().value() + " " + term_colour(t.object()));
      }
      if (const auto* o = std::get_if<BlankNode>(&t.object())) {
        std::string self = t.subject() == t.object() ? "self" : term_colour(t.subject());
        sig[*o].push_back("in " + t.predicate().value() + " " + self);
      }
    }
    std::map<BlankNode, std::string> next;
    for (const auto& b : nodes) {
      auto& parts = sig[b];
      std::sort(parts.begin(), parts.end());
      std::string c;
      for (const auto& p : parts) c += p + "|";
      next[b] = std::move(c);
    }
    // Compress to short ids so colours do not grow exponentially.
    std::map<std::string, std::string> ids;
    for (const auto& [b, c] : next) ids.emplace(c, "");
    std::size_t id = 0;
    for (auto& [c, short_id] : ids) short_id = std::to_string(id++);
    for (auto& [b, c] : next) c = ids.at(c);
    colour = std::move(next);
  }
  return colour;
}

class Matcher {
 public:
  Matcher(const Graph& a, const Graph& b) : a_(a), b_(b) {}

  bool run() {
    if (a_.size() != b_.size()) return false;
    auto na = a_.blank_nodes();
    auto nb = b_.blank_nodes();
    if (na.size() != nb.size()) return false;
    if (na.size() > kMaxIsomorphismBlankNodes) {
      throw ResourceLimitError("graph has " + std::to_string(na.size()) +
                               " blank nodes; isomorphism check supports at most " +
                               std::to_string(kMaxIsomorphismBlankNodes));
    }
    for (const auto& t : a_) {
      if (!is_blank(t.subject()) && !is_blank(t.object()) && !b_.contains(t)) return false;
    }
    if (na.empty()) return true;

    // Both graphs are refined with a shared colour dictionary so that ids
    // are comparable: refine the disjoint union.
    Graph joint;
    for (const auto& t : a_) joint.insert(relabel(t, "a"));
    for (const auto& t : b_) joint.insert(relabel(t, "b"));
    std::vector<BlankNode> all;
    for (const auto& n : na) all.emplace_back("a" + n.label());
    for (const auto& n : nb) all.emplace_back("b" + n.label());
    auto colour = refine(joint, all);

    std::map<std::string, int> balance;
    for (const auto& n : na) ++balance[colour.at(BlankNode("a" + n.label()))];
    for (const auto& n : nb) --balance[colour.at(BlankNode("b" + n.label()))];
    for (const auto& [c, v] : balance) {
      if (v != 0) return false;
    }
    for (const auto& n : na) {
      const auto& c = colour.at(BlankNode("a" + n.label()));
      std::vector<BlankNode> cands;
      for (const auto& m : nb) {
        if (colour.at(BlankNode("b" + m.label())) == c) cands.push_back(m);
      }
      candidates_[n] = std::move(cands);
    }
    order_ = na;
    std::sort(order_.begin(), order_.end(), [this](const BlankNode& x, const BlankNode& y) {
      return candidates_[x].size() < candidates_[y].size();
    });
    for (const auto& t : a_) {
      if (const auto* s = std::get_if<BlankNode>(&t.subject())) touching_[*s].push_back(t);
      if (const auto* o = std::get_if<BlankNode>(&t.object())) {
        if (!(t.subject() == t.object())) touching_[*o].push_back(t);
      }
    }
    return search(0);
  }

 private:
  static Triple relabel(const Triple& t, const std::string& side) {
    auto r = [&](const Term& x) -> Term {
      if (const auto* b = std::get_if<BlankNode>(&x)) return BlankNode(side + b->label());
      return x;
    };
    return Triple(r(t.subject()), t.predicate(), r(t.object()));
  }

  std::optional<Term> mapped(const Term& x) const {
    if (const auto* b = std::get_if<BlankNode>(&x)) {
      auto it = mapping_.find(*b);
      if (it == mapping_.end()) return std::nullopt;
      return Term(it->second);
    }
    return x;
  }

  bool consistent(const BlankNode& n) const {
    for (const auto& t : touching_.at(n)) {
      auto s = mapped(t.subject());
      auto o = mapped(t.object());
      if (s && o && !b_.contains(Triple(*s, t.predicate(), *o))) return false;
    }
    return true;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    const auto& n = order_[depth];
    for (const auto& cand : candidates_[n]) {
      if (used_.count(cand)) continue;
      mapping_.emplace(n, cand);
      used_.insert(cand);
      if ((!touching_.count(n) || consistent(n)) && search(depth + 1)) return true;
      mapping_.erase(n);
      used_.erase(cand);
    }
    return false;
  }

  const Graph& a_;
  const Graph& b_;
  std::map<BlankNode, std::vector<BlankNode>> candidates_;
  std::map<BlankNode, std::vector<Triple>> touching_;
  std::vector<BlankNode> order_;
  std::map<BlankNode, BlankNode> mapping_;
  std::set<BlankNode> used_;
};

}  // namespace

bool graphs_isomorphic(const Graph& a, const Graph& b) { return Matcher(a, b).run(); }

}  // namespace rsvocab::rdf
