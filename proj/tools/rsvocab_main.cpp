// rsvocab: validate, build, diff, serve and check rights-statement vocabularies.

#include <atomic>
#include <csignal>
#include <iostream>

#include "CLI11.hpp"
#include "rsvocab/cli/commands.hpp"

namespace {

std::atomic<bool> g_stop{false};

void on_signal(int) { g_stop.store(true); }

}  // namespace

int main(int argc, char** argv) {
  using namespace rsvocab::cli;

  CliConfig cfg;
  CLI::App app{"Rights-statement vocabulary toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--base", cfg.base, "Namespace base IRI")->capture_default_str();
  app.add_option("--default-lang", cfg.default_language, "Default language tag")
      ->capture_default_str();
  std::map<std::string, ReportFormat> formats{{"text", ReportFormat::kText},
                                              {"json", ReportFormat::kJson}};
  app.add_option("--format", cfg.format, "Report format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));

  std::string file, other, out_dir, vocab_file;
  bool allow_editorial = false;

  auto* validate = app.add_subcommand("validate", "Check a vocabulary file");
  validate->add_option("file", file)->required();

  auto* build = app.add_subcommand("build", "Generate the static site");
  build->add_option("file", file)->required();
  build->add_option("--out", out_dir, "Output directory")->required();

  auto* diff = app.add_subcommand("diff", "Compare two vocabulary versions");
  diff->add_option("old", file)->required();
  diff->add_option("new", other)->required();
  diff->add_flag("--allow-editorial", allow_editorial,
                 "Report text edits without a version bump as infos");

  auto* serve = app.add_subcommand("serve", "Serve a site directory or vocabulary file");
  serve->add_option("path", file)->required();
  serve->add_option("--port", cfg.port, "Listen port (0 picks one)")
      ->check(CLI::Range(0, 65535))
      ->capture_default_str();
  serve->add_option("--host", cfg.host, "Listen address")->capture_default_str();

  auto* check = app.add_subcommand("check", "Classify rights references in object metadata");
  check->add_option("objects", file)->required();
  check->add_option("--vocab", vocab_file, "Vocabulary file")->required();

  try {
    app.parse(argc, argv);
    cfg.validate();
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? kExitOk : kExitEnvironment;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitEnvironment;
  }

  if (*validate) return run_validate(file, cfg, std::cout, std::cerr);
  if (*build) {
    cfg.out_dir = out_dir;
    return run_build(file, cfg, std::cout, std::cerr);
  }
  if (*diff) return run_diff(file, other, allow_editorial, cfg, std::cout, std::cerr);
  if (*check) return run_check(file, vocab_file, cfg, std::cout, std::cerr);
  if (*serve) {
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    return run_serve(file, cfg, std::cout, std::cerr, g_stop);
  }
  return kExitEnvironment;
}
