#include "rsvocab/vocab/diff.hpp"

#include <set>

namespace rsvocab::vocab {

namespace {

std::string render(const std::vector<Match>& ms) {
  std::string out;
  for (const auto& m : ms) {
    if (!out.empty()) out += ", ";
    out += std::string(to_string(m.relation)) + " <" + m.target.value() + ">";
  }
  return out;
}

std::string render(const std::vector<PermissionSpec>& ps) {
  std::string out;
  for (const auto& p : ps) {
    if (!out.empty()) out += "; ";
    out += "action <" + p.action.value() + ">";
    for (const auto& c : p.constraints) {
      out += " [<" + c.op.value() + "> <" + c.purpose.value() + ">]";
    }
  }
  return out;
}

// Identity of a statement across versions: name plus jurisdiction.
std::string lineage(const StatementRecord& r) {
  return r.uri.name + "/" + r.uri.jurisdiction.value_or("");
}

}  // namespace

VersionReport diff_versions(const Vocabulary& old_vocab, const Vocabulary& new_vocab,
                            bool allow_editorial) {
  VersionReport report;

  auto text_changes = [&](const StatementRecord& a, const char* prop, const LangMap& before,
                          const LangMap& after, const std::string& key) {
    std::set<std::string> langs;
    for (const auto& [l, _] : before) langs.insert(l);
    for (const auto& [l, _] : after) langs.insert(l);
    for (const auto& l : langs) {
      auto ob = before.find(l);
      auto nb = after.find(l);
      std::string ov = ob == before.end() ? "" : ob->second;
      std::string nv = nb == after.end() ? "" : nb->second;
      if (ob != before.end() && nb != after.end() && ov == nv) continue;
      Change c{a.uri.name, key, std::string(prop) + "@" + l, ov, nv};
      (allow_editorial ? report.infos : report.violations).push_back(std::move(c));
    }
  };

  std::set<std::string> old_lineages;
  std::set<std::string> new_lineages;
  for (const auto& [k, r] : old_vocab.statements) old_lineages.insert(lineage(r));
  for (const auto& [k, r] : new_vocab.statements) new_lineages.insert(lineage(r));

  for (const auto& [key, a] : old_vocab.statements) {
    auto it = new_vocab.statements.find(key);
    if (it == new_vocab.statements.end()) {
      bool superseded = new_lineages.count(lineage(a)) > 0;
      report.infos.push_back({a.uri.name, key, superseded ? "version" : "statement",
                              a.version, superseded ? "(new version present)" : "(removed)"});
      continue;
    }
    const auto& b = it->second;
    text_changes(a, "skos:prefLabel", a.pref_labels, b.pref_labels, key);
    text_changes(a, "skos:definition", a.definitions, b.definitions, key);
    text_changes(a, "skos:scopeNote", a.notes, b.notes, key);

    auto info = [&](const char* prop, std::string ov, std::string nv) {
      if (ov != nv) report.infos.push_back({a.uri.name, key, prop, std::move(ov), std::move(nv)});
    };
    info("skos:*Match", render(a.matches), render(b.matches));
    info("odrl:permission", render(a.permissions), render(b.permissions));
    info("dcterms:modified", a.modified, b.modified);
    info("dc:creator", a.creator.value_or(""), b.creator.value_or(""));
    info("dcterms:coverage", a.jurisdiction.value_or(""), b.jurisdiction.value_or(""));
  }
  for (const auto& [key, b] : new_vocab.statements) {
    if (old_vocab.statements.count(key)) continue;
    bool new_version = old_lineages.count(lineage(b)) > 0;
    report.infos.push_back({b.uri.name, key, new_version ? "version" : "statement", "",
                            new_version ? b.version : "(added)"});
  }
  return report;
}

}  // namespace rsvocab::vocab
