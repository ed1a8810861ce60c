#include "rsvocab/cli/commands.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "rsvocab/rdf/formats.hpp"
#include "rsvocab/site/generator.hpp"
#include "rsvocab/vocab/diff.hpp"
#include "rsvocab/vocab/object_check.hpp"

namespace rsvocab::cli {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

std::string plural(std::size_t n, std::string_view word) {
  return std::to_string(n) + " " + std::string(word) + (n == 1 ? "" : "s");
}

json findings_json(const std::vector<vocab::Finding>& fs) {
  json out = json::array();
  for (const auto& f : fs) out.push_back({{"rule", f.rule}, {"subject", f.subject}, {"message", f.message}});
  return out;
}

void print_report(const fs::path& file, const vocab::LoadResult& r, const CliConfig& cfg,
                  std::ostream& out) {
  const auto& rep = r.report;
  if (cfg.format == ReportFormat::kJson) {
    json j{{"file", file.string()},
           {"statements", r.vocabulary.statements.size()},
           {"errors", findings_json(rep.errors)},
           {"warnings", findings_json(rep.warnings)},
           {"accepted", rep.accepted()}};
    out << j.dump(2) << "\n";
    return;
  }
  out << file.string() << ": " << plural(r.vocabulary.statements.size(), "statement") << ", "
      << plural(rep.errors.size(), "error") << ", " << plural(rep.warnings.size(), "warning")
      << "\n";
  for (const auto& f : rep.errors) out << "error " << f.rule << " " << f.subject << ": " << f.message << "\n";
  for (const auto& f : rep.warnings) {
    out << "warning " << f.rule << " " << f.subject << ": " << f.message << "\n";
  }
}

json change_json(const vocab::Change& c) {
  return {{"statement", c.statement},
          {"uri", c.uri},
          {"property", c.property},
          {"old", c.old_value},
          {"new", c.new_value}};
}

void print_change(std::ostream& out, std::string_view kind, const vocab::Change& c) {
  out << kind << " " << c.uri << " " << c.property << ": ";
  if (c.old_value.empty()) {
    out << "added " << c.new_value;
  } else if (c.new_value.empty()) {
    out << "removed " << c.old_value;
  } else {
    out << c.old_value << " -> " << c.new_value;
  }
  out << "\n";
}

// Loads a file for commands that need a valid vocabulary. Validation
// errors are reported on `err`.
std::optional<vocab::Vocabulary> load_valid(const fs::path& file, const CliConfig& cfg,
                                            std::ostream& err) {
  auto r = load_vocabulary_file(file, cfg);
  if (r.report.accepted()) return std::move(r.vocabulary);
  err << file.string() << ": " << plural(r.report.errors.size(), "error") << "\n";
  for (const auto& f : r.report.errors) {
    err << "error " << f.rule << " " << f.subject << ": " << f.message << "\n";
  }
  return std::nullopt;
}

std::string default_language(const CliConfig& cfg) {
  return rdf::normalize_language_tag(cfg.default_language).value_or(cfg.default_language);
}

}  // namespace

void CliConfig::validate() const {
  if (!rdf::Iri::is_valid(base) || !(base.starts_with("http://") || base.starts_with("https://"))) {
    throw std::invalid_argument("base must be an http(s) IRI: " + base);
  }
  if (!rdf::normalize_language_tag(default_language)) {
    throw std::invalid_argument("malformed language tag: " + default_language);
  }
}

uri::NamespaceConfig CliConfig::namespace_config() const {
  return uri::NamespaceConfig::with_base(base);
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in || fs::is_directory(path)) throw InputError("cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw InputError("cannot read " + path.string());
  return ss.str();
}

vocab::LoadResult load_vocabulary_file(const fs::path& path, const CliConfig& cfg) {
  std::string text = read_file(path);
  rdf::Graph g;
  try {
    g = rdf::parse_turtle(text, "file://" + fs::absolute(path).string());
  } catch (const std::exception& e) {
    throw InputError(path.string() + ": " + e.what());
  }
  vocab::LoadOptions opts;
  opts.default_language = default_language(cfg);
  return vocab::load_vocabulary(g, cfg.namespace_config(), opts);
}

server::Snapshot load_snapshot(const fs::path& input, const CliConfig& cfg) {
  server::Snapshot snap;
  snap.cfg = cfg.namespace_config();
  snap.default_language = default_language(cfg);
  site::SiteOptions opts{snap.default_language};

  if (fs::is_directory(input)) {
    try {
      snap.manifest = site::read_site(input);
    } catch (const std::exception& e) {
      throw InputError(input.string() + ": " + e.what());
    }
    auto data = fs::path(snap.cfg.resource_segment) / "data.ttl";
    auto it = snap.manifest.entries.find(data.generic_string());
    if (it == snap.manifest.entries.end()) {
      throw InputError(input.string() + ": no " + data.generic_string() + " in site");
    }
    rdf::Graph g;
    try {
      g = rdf::parse_turtle(it->second.content);
    } catch (const std::exception& e) {
      throw InputError((input / data).string() + ": " + e.what());
    }
    auto r = vocab::load_vocabulary(g, snap.cfg, vocab::LoadOptions{snap.default_language});
    if (!r.report.accepted()) throw std::domain_error("site vocabulary does not validate");
    snap.vocabulary = std::move(r.vocabulary);
    return snap;
  }

  auto r = load_vocabulary_file(input, cfg);
  if (!r.report.accepted()) throw std::domain_error(input.string() + " does not validate");
  snap.vocabulary = std::move(r.vocabulary);
  snap.manifest = site::generate_site(snap.vocabulary, snap.cfg, opts);
  return snap;
}

int run_validate(const fs::path& file, const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  vocab::LoadResult r;
  try {
    r = load_vocabulary_file(file, cfg);
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kExitEnvironment;
  }
  print_report(file, r, cfg, out);
  return r.report.accepted() ? kExitOk : kExitDomainFailure;
}

int run_build(const fs::path& file, const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<vocab::Vocabulary> v;
  try {
    v = load_valid(file, cfg, err);
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kExitEnvironment;
  }
  if (!v) return kExitDomainFailure;

  site::SiteManifest m;
  try {
    m = site::generate_site(*v, cfg.namespace_config(),
                            site::SiteOptions{default_language(cfg)});
  } catch (const site::SiteError& e) {
    err << e.what() << "\n";
    return kExitDomainFailure;
  }
  try {
    site::write_site(m, cfg.out_dir);
  } catch (const std::exception& e) {
    err << "cannot write " << cfg.out_dir.string() << ": " << e.what() << "\n";
    return kExitEnvironment;
  }
  if (cfg.format == ReportFormat::kJson) {
    json files = json::array();
    for (const auto& [path, _] : m.entries) files.push_back(path);
    out << json{{"out", cfg.out_dir.string()}, {"written", m.entries.size()}, {"files", files}}.dump(2)
        << "\n";
  } else {
    out << plural(m.entries.size(), "file") << " written to " << cfg.out_dir.string() << "\n";
  }
  return kExitOk;
}

int run_diff(const fs::path& old_file, const fs::path& new_file, bool allow_editorial,
             const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  std::optional<vocab::Vocabulary> a, b;
  try {
    a = load_valid(old_file, cfg, err);
    b = load_valid(new_file, cfg, err);
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kExitEnvironment;
  }
  if (!a || !b) return kExitEnvironment;

  auto rep = vocab::diff_versions(*a, *b, allow_editorial);
  if (cfg.format == ReportFormat::kJson) {
    json j{{"violations", json::array()}, {"infos", json::array()}, {"ok", rep.ok()}};
    for (const auto& c : rep.violations) j["violations"].push_back(change_json(c));
    for (const auto& c : rep.infos) j["infos"].push_back(change_json(c));
    out << j.dump(2) << "\n";
  } else {
    out << plural(rep.violations.size(), "violation") << ", " << plural(rep.infos.size(), "info")
        << "\n";
    for (const auto& c : rep.violations) print_change(out, "violation", c);
    for (const auto& c : rep.infos) print_change(out, "info", c);
  }
  return rep.ok() ? kExitOk : kExitDomainFailure;
}

int run_check(const fs::path& objects_file, const fs::path& vocab_file, const CliConfig& cfg,
              std::ostream& out, std::ostream& err) {
  rdf::Graph objects;
  vocab::LoadResult r;
  try {
    std::string text = read_file(objects_file);
    try {
      objects = rdf::parse_turtle(text, "file://" + fs::absolute(objects_file).string());
    } catch (const std::exception& e) {
      throw InputError(objects_file.string() + ": " + e.what());
    }
    r = load_vocabulary_file(vocab_file, cfg);
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kExitEnvironment;
  }
  for (const auto& f : r.report.errors) {
    err << "warning: vocabulary " << f.rule << " " << f.subject << ": " << f.message << "\n";
  }

  auto rep = vocab::check_object_references(objects, r.vocabulary, cfg.namespace_config());
  auto counts = rep.counts();
  constexpr vocab::ReferenceClass kOrder[] = {
      vocab::ReferenceClass::kResolved, vocab::ReferenceClass::kUnknown,
      vocab::ReferenceClass::kMalformed, vocab::ReferenceClass::kExternal,
      vocab::ReferenceClass::kFreeText};
  if (cfg.format == ReportFormat::kJson) {
    json j{{"counts", json::object()}, {"references", json::array()}, {"ok", rep.ok()}};
    for (auto c : kOrder) j["counts"][std::string(vocab::to_string(c))] = counts[c];
    for (const auto& ref : rep.references) {
      j["references"].push_back({{"subject", ref.subject},
                                 {"predicate", ref.predicate},
                                 {"value", ref.value},
                                 {"class", std::string(vocab::to_string(ref.classification))}});
    }
    out << j.dump(2) << "\n";
  } else {
    for (auto c : kOrder) out << vocab::to_string(c) << " " << counts[c] << "\n";
    for (const auto& ref : rep.references) {
      out << vocab::to_string(ref.classification) << " " << ref.subject << " " << ref.predicate
          << " ";
      if (ref.classification == vocab::ReferenceClass::kFreeText) {
        out << '"' << rdf::escape_turtle_string(ref.value) << "\"\n";
      } else {
        out << ref.value << "\n";
      }
    }
  }
  return rep.ok() ? kExitOk : kExitDomainFailure;
}

int run_serve(const fs::path& input, const CliConfig& cfg, std::ostream& out, std::ostream& err,
              const std::atomic<bool>& stop, const std::function<void(int)>& on_bound) {
  std::shared_ptr<const server::Snapshot> snap;
  try {
    snap = std::make_shared<const server::Snapshot>(load_snapshot(input, cfg));
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kExitEnvironment;
  } catch (const std::exception& e) {
    err << e.what() << "\n";
    return kExitDomainFailure;
  }

  server::HttpServer srv(std::make_shared<server::SnapshotHolder>(snap));
  int port = 0;
  try {
    port = srv.bind(cfg.host, cfg.port);
  } catch (const server::BindError& e) {
    err << e.what() << "\n";
    return kExitEnvironment;
  }
  out << "listening on http://" << cfg.host << ":" << port << "/ ("
      << plural(snap->manifest.entries.size(), "document") << ")" << std::endl;
  if (on_bound) on_bound(port);

  std::thread worker([&] { srv.listen(); });
  while (!stop.load()) std::this_thread::sleep_for(std::chrono::milliseconds(50));
  srv.stop();
  worker.join();
  return kExitOk;
}

}  // namespace rsvocab::cli
