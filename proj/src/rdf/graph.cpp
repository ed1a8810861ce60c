#include "rsvocab/rdf/graph.hpp"

#include <algorithm>

#include "rsvocab/rdf/formats.hpp"
#include "rsvocab/rdf/namespaces.hpp"

namespace rsvocab::rdf {

Triple::Triple(Term subject, Iri predicate, Term object)
    : subject_(std::move(subject)),
      predicate_(std::move(predicate)),
      object_(std::move(object)) {
  if (is_literal(subject_)) {
    throw std::invalid_argument("literal in subject position");
  }
}

std::vector<Triple> Graph::with_subject(const Term& subject) const {
  std::vector<Triple> out;
  for (const auto& t : triples_) {
    if (t.subject() == subject) out.push_back(t);
  }
  return out;
}

std::vector<Term> Graph::objects(const Term& subject, const Iri& predicate) const {
  std::vector<Term> out;
  for (const auto& t : triples_) {
    if (t.subject() == subject && t.predicate() == predicate) {
      out.push_back(t.object());
    }
  }
  return out;
}

std::vector<Term> Graph::subjects() const {
  std::vector<Term> out;
  for (const auto& t : triples_) {
    if (out.empty() || !(out.back() == t.subject())) out.push_back(t.subject());
  }
  return out;
}

std::vector<BlankNode> Graph::blank_nodes() const {
  std::set<BlankNode> seen;
  for (const auto& t : triples_) {
    if (const auto* b = std::get_if<BlankNode>(&t.subject())) seen.insert(*b);
    if (const auto* b = std::get_if<BlankNode>(&t.object())) seen.insert(*b);
  }
  return {seen.begin(), seen.end()};
}

bool is_safe_local_name(std::string_view local) {
  if (local.empty()) return false;
  auto ok = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
           (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
  };
  if (!std::all_of(local.begin(), local.end(), ok)) return false;
  return local.front() != '-' && local.front() != '.' && local.back() != '.';
}

std::optional<std::pair<std::string_view, std::string>> compact(
    std::string_view iri) {
  const Prefix* best = nullptr;
  for (const auto& p : kNamespaceTable) {
    if (iri.starts_with(p.iri) && (!best || p.iri.size() > best->iri.size())) {
      best = &p;
    }
  }
  if (!best) return std::nullopt;
  std::string local(iri.substr(best->iri.size()));
  if (!is_safe_local_name(local)) return std::nullopt;
  return std::make_pair(best->name, std::move(local));
}

std::string compact_or_full(std::string_view iri) {
  if (auto c = compact(iri)) return std::string(c->first) + ":" + c->second;
  return std::string(iri);
}

}  // namespace rsvocab::rdf
