#include <algorithm>
#include <deque>
#include <map>

#include <nlohmann/json.hpp>

#include "ordering.hpp"
#include "rsvocab/rdf/formats.hpp"
#include "rsvocab/rdf/namespaces.hpp"

namespace rsvocab::rdf {

namespace {

using nlohmann::json;

class JsonLdWriter {
 public:
  explicit JsonLdWriter(const Graph& g) : graph_(g), keys_(g) {}

  std::string write() {
    json doc = json::object();
    json context = json::object();
    for (const auto& p : kNamespaceTable) context[std::string(p.name)] = p.iri;
    doc["@context"] = std::move(context);
    if (graph_.empty()) return doc.dump(2) + "\n";

    std::vector<Term> iri_subjects;
    std::vector<BlankNode> blank_subjects;
    for (const auto& s : graph_.subjects()) {
      if (is_iri(s)) {
        iri_subjects.push_back(s);
      } else {
        blank_subjects.push_back(std::get<BlankNode>(s));
      }
    }

    json nodes = json::array();
    for (const auto& s : iri_subjects) nodes.push_back(node(s));
    // Blank nodes reached from IRI subjects are numbered first, in the order
    // they are referenced; unreferenced blank subjects follow in key order.
    std::size_t emitted = 0;
    auto drain = [&] {
      while (emitted < order_.size()) {
        const BlankNode b = order_[emitted++];
        if (!graph_.with_subject(b).empty()) nodes.push_back(node(b));
      }
    };
    drain();
    std::sort(blank_subjects.begin(), blank_subjects.end(),
              [this](const BlankNode& a, const BlankNode& b) {
                return keys_.less(a, b);
              });
    for (const auto& b : blank_subjects) {
      if (!numbers_.count(b)) {
        id_for(b);
        drain();
      }
    }
    doc["@graph"] = std::move(nodes);
    return doc.dump(2) + "\n";
  }

 private:
  std::string id_for(const BlankNode& b) {
    auto it = numbers_.find(b);
    if (it == numbers_.end()) {
      it = numbers_.emplace(b, "_:b" + std::to_string(numbers_.size())).first;
      order_.push_back(b);
    }
    return it->second;
  }

  json node(const Term& subject) {
    json n = json::object();
    if (const auto* iri = std::get_if<Iri>(&subject)) {
      n["@id"] = iri->value();
    } else {
      n["@id"] = id_for(std::get<BlankNode>(subject));
    }
    auto triples = graph_.with_subject(subject);
    std::stable_sort(triples.begin(), triples.end(),
                     [this](const Triple& a, const Triple& b) {
                       if (a.predicate() != b.predicate()) {
                         return a.predicate() < b.predicate();
                       }
                       return keys_.less(a.object(), b.object());
                     });
    const Iri type = ns::rdf_type();
    for (const auto& t : triples) {
      if (t.predicate() == type && !is_literal(t.object())) {
        if (const auto* iri = std::get_if<Iri>(&t.object())) {
          n["@type"].push_back(compact_or_full(iri->value()));
        } else {
          n["@type"].push_back(id_for(std::get<BlankNode>(t.object())));
        }
        continue;
      }
      n[compact_or_full(t.predicate().value())].push_back(value(t.object()));
    }
    return n;
  }

  json value(const Term& t) {
    if (const auto* iri = std::get_if<Iri>(&t)) return json{{"@id", iri->value()}};
    if (const auto* b = std::get_if<BlankNode>(&t)) return json{{"@id", id_for(*b)}};
    const auto& l = std::get<Literal>(t);
    if (l.language()) return json{{"@value", l.lexical()}, {"@language", *l.language()}};
    if (l.datatype()) return json{{"@value", l.lexical()}, {"@type", l.datatype()->value()}};
    return l.lexical();
  }

  const Graph& graph_;
  detail::BlankNodeKeys keys_;
  std::map<BlankNode, std::string> numbers_;
  std::vector<BlankNode> order_;
};

}  // namespace

std::string serialize_jsonld(const Graph& g) { return JsonLdWriter(g).write(); }

}  // namespace rsvocab::rdf
