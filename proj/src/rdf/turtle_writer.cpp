#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ordering.hpp"
#include "rsvocab/rdf/formats.hpp"
#include "rsvocab/rdf/namespaces.hpp"

namespace rsvocab::rdf {

std::string escape_turtle_string(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

namespace {

std::string iri_token(const Iri& iri) {
  if (auto c = compact(iri.value())) return std::string(c->first) + ":" + c->second;
  return "<" + iri.value() + ">";
}

class TurtleWriter {
 public:
  explicit TurtleWriter(const Graph& g) : graph_(g), keys_(g) {
    for (const auto& t : g) {
      if (const auto* b = std::get_if<BlankNode>(&t.object())) {
        ++refs_[*b];
        referrer_.insert_or_assign(*b, t.subject());
      }
    }
    for (const auto& [b, count] : refs_) {
      if (count == 1 && !(referrer_.at(b) == Term(b))) inline_.insert(b);
    }
    break_inline_cycles();
  }

  std::string write() {
    for (const auto& p : kNamespaceTable) {
      out_ << "@prefix " << p.name << ": <" << p.iri << "> .\n";
    }
    std::vector<Term> roots;
    for (const auto& s : graph_.subjects()) {
      if (const auto* b = std::get_if<BlankNode>(&s); b && inline_.count(*b)) continue;
      roots.push_back(s);
    }
    std::sort(roots.begin(), roots.end(),
              [this](const Term& a, const Term& b) { return keys_.less(a, b); });
    for (const auto& root : roots) {
      out_ << "\n" << subject_token(root);
      predicate_list(root, 1);
      out_ << " .\n";
    }
    return out_.str();
  }

 private:
  // Inline candidates whose chain of referrers never reaches a root form a
  // cycle; demote one node per cycle to a labelled root.
  void break_inline_cycles() {
    for (;;) {
      std::optional<BlankNode> stuck;
      for (const auto& b : inline_) {
        Term cur = b;
        std::set<BlankNode> seen;
        bool reaches_root = false;
        while (true) {
          const auto* cb = std::get_if<BlankNode>(&cur);
          if (!cb || !inline_.count(*cb)) {
            reaches_root = true;
            break;
          }
          if (!seen.insert(*cb).second) break;
          cur = referrer_.at(*cb);
        }
        if (!reaches_root && (!stuck || keys_.less(b, *stuck))) stuck = b;
      }
      if (!stuck) return;
      inline_.erase(*stuck);
    }
  }

  std::string label_for(const BlankNode& b) {
    auto it = labels_.find(b);
    if (it == labels_.end()) {
      it = labels_.emplace(b, "_:b" + std::to_string(labels_.size())).first;
    }
    return it->second;
  }

  std::string subject_token(const Term& t) {
    if (const auto* iri = std::get_if<Iri>(&t)) return iri_token(*iri);
    return label_for(std::get<BlankNode>(t));
  }

  void predicate_list(const Term& subject, int depth) {
    auto triples = graph_.with_subject(subject);
    std::map<Iri, std::vector<Term>> by_pred;
    for (const auto& t : triples) by_pred[t.predicate()].push_back(t.object());
    std::vector<Iri> preds;
    const Iri type = ns::rdf_type();
    if (by_pred.count(type)) preds.push_back(type);
    for (const auto& [p, _] : by_pred) {
      if (!(p == type)) preds.push_back(p);
    }
    std::string indent(static_cast<std::size_t>(depth) * 4, ' ');
    bool first = true;
    for (const auto& p : preds) {
      auto& objs = by_pred[p];
      std::sort(objs.begin(), objs.end(),
                [this](const Term& a, const Term& b) { return keys_.less(a, b); });
      if (first) {
        out_ << " ";
      } else {
        out_ << " ;\n" << indent;
      }
      first = false;
      out_ << (p == type ? std::string("a") : iri_token(p)) << " ";
      for (std::size_t i = 0; i < objs.size(); ++i) {
        if (i > 0) out_ << " ,\n" << indent << "    ";
        object(objs[i], depth);
      }
    }
  }

  void object(const Term& t, int depth) {
    if (const auto* iri = std::get_if<Iri>(&t)) {
      out_ << iri_token(*iri);
    } else if (const auto* b = std::get_if<BlankNode>(&t)) {
      if (!inline_.count(*b)) {
        out_ << label_for(*b);
      } else if (graph_.with_subject(*b).empty()) {
        out_ << "[]";
      } else {
        out_ << "[";
        std::string inner(static_cast<std::size_t>(depth + 1) * 4, ' ');
        out_ << "\n" << inner;
        // predicate_list writes a leading space before the first predicate.
        std::ostringstream saved;
        saved.swap(out_);
        predicate_list(*b, depth + 1);
        std::string body = out_.str();
        out_.swap(saved);
        out_ << body.substr(1) << "\n"
             << std::string(static_cast<std::size_t>(depth) * 4, ' ') << "]";
      }
    } else {
      const auto& l = std::get<Literal>(t);
      out_ << "\"" << escape_turtle_string(l.lexical()) << "\"";
      if (l.language()) out_ << "@" << *l.language();
      if (l.datatype()) out_ << "^^" << iri_token(*l.datatype());
    }
  }

  const Graph& graph_;
  detail::BlankNodeKeys keys_;
  std::map<BlankNode, int> refs_;
  std::map<BlankNode, Term> referrer_;
  std::set<BlankNode> inline_;
  std::map<BlankNode, std::string> labels_;
  std::ostringstream out_;
};

}  // namespace

std::string serialize_turtle(const Graph& g) { return TurtleWriter(g).write(); }

}  // namespace rsvocab::rdf
