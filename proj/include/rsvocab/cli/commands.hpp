#pragma once

#include <atomic>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>

#include "rsvocab/server/http.hpp"
#include "rsvocab/vocab/vocabulary.hpp"

namespace rsvocab::cli {

enum class ReportFormat { kText, kJson };

/// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainFailure = 1;
inline constexpr int kExitEnvironment = 2;

struct CliConfig {
  std::string base = "http://rightsstatements.org";
  std::string default_language = "en";
  std::filesystem::path out_dir;
  std::string host = "127.0.0.1";
  int port = 8080;
  ReportFormat format = ReportFormat::kText;

  /// Throws std::invalid_argument on a malformed base or language tag.
  void validate() const;
  uri::NamespaceConfig namespace_config() const;
};

/// Reading or parsing an input failed (exit 2).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::filesystem::path& path);
/// Parses a Turtle file and loads it. Throws InputError on I/O or syntax.
vocab::LoadResult load_vocabulary_file(const std::filesystem::path& path, const CliConfig& cfg);

/// Builds the server snapshot from a site directory (written by build) or a
/// vocabulary file (built in memory). Throws InputError, or
/// std::domain_error if the vocabulary does not validate.
server::Snapshot load_snapshot(const std::filesystem::path& input, const CliConfig& cfg);

int run_validate(const std::filesystem::path& file, const CliConfig& cfg, std::ostream& out,
                 std::ostream& err);
int run_build(const std::filesystem::path& file, const CliConfig& cfg, std::ostream& out,
              std::ostream& err);
int run_diff(const std::filesystem::path& old_file, const std::filesystem::path& new_file,
             bool allow_editorial, const CliConfig& cfg, std::ostream& out, std::ostream& err);
int run_check(const std::filesystem::path& objects_file, const std::filesystem::path& vocab_file,
              const CliConfig& cfg, std::ostream& out, std::ostream& err);

/// Serves until `stop` becomes true. `on_bound` receives the bound port.
int run_serve(const std::filesystem::path& input, const CliConfig& cfg, std::ostream& out,
              std::ostream& err, const std::atomic<bool>& stop,
              const std::function<void(int)>& on_bound = {});

}  // namespace rsvocab::cli
