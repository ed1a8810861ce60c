#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <thread>

#include <nlohmann/json.hpp>

#include "httplib.h"
#include "rsvocab/cli/commands.hpp"
#include "support/fixtures.hpp"

using namespace rsvocab::cli;
using rsvocab::testing::fixture_path;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    tmp_ = fs::temp_directory_path() /
           ("rsvocab_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(tmp_);
    fs::create_directories(tmp_);
  }
  void TearDown() override { fs::remove_all(tmp_); }

  fs::path write(const std::string& name, const std::string& content) {
    auto p = tmp_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p;
  }

  template <typename F>
  Outcome run(F&& f) {
    std::ostringstream out, err;
    int code = f(out, err);
    return {code, out.str(), err.str()};
  }

  Outcome validate(const fs::path& p, CliConfig cfg = {}) {
    return run([&](auto& o, auto& e) { return run_validate(p, cfg, o, e); });
  }

  fs::path tmp_;
};

// Runs the installed binary; returns its exit status.
int run_binary(const std::string& args) {
  std::string cmd = std::string(RSVOCAB_CLI) + " " + args + " >/dev/null 2>&1";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_F(CliTest, ValidatePaperFixture) {
  auto r = validate(fixture_path("ic_edu.ttl"));
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("0 errors"), std::string::npos) << r.out;
}

TEST_F(CliTest, ValidateEmptyFile) {
  auto r = validate(write("empty.ttl", ""));
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("W0"), std::string::npos);
  EXPECT_NE(r.out.find("no rights statements"), std::string::npos);
}

TEST_F(CliTest, ValidateStrippedTag) {
  auto r = validate(fixture_path("mutation_untagged_label.ttl"));
  EXPECT_EQ(r.code, kExitDomainFailure);
  EXPECT_NE(r.out.find("error R2"), std::string::npos);
}

TEST_F(CliTest, ValidateIoAndSyntaxErrors) {
  EXPECT_EQ(validate(tmp_ / "missing.ttl").code, kExitEnvironment);
  EXPECT_EQ(validate(tmp_).code, kExitEnvironment);
  auto r = validate(write("bad.ttl", "<http://s> <http://p> \"open ."));
  EXPECT_EQ(r.code, kExitEnvironment);
  EXPECT_NE(r.err.find("bad.ttl"), std::string::npos);
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, JsonReportsParse) {
  CliConfig cfg;
  cfg.format = ReportFormat::kJson;
  for (const char* f : {"ic_edu.ttl", "vocabulary.ttl", "mutation_untagged_label.ttl"}) {
    auto r = validate(fixture_path(f), cfg);
    auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["accepted"].get<bool>(), r.code == kExitOk) << f;
  }
  auto d = run([&](auto& o, auto& e) {
    return run_diff(fixture_path("vocabulary.ttl"), fixture_path("mutation_definition_edit.ttl"), false, cfg, o, e);
  });
  EXPECT_EQ(nlohmann::json::parse(d.out)["violations"].size(), 1u);
  for (const char* f : {"europeana.ttl", "dpla.ttl", "ucsd.ttl", "ghost.ttl"}) {
    auto c = run([&](auto& o, auto& e) { return run_check(fixture_path(f), fixture_path("vocabulary.ttl"), cfg, o, e); });
    auto j = nlohmann::json::parse(c.out);
    EXPECT_EQ(j["ok"].get<bool>(), c.code == kExitOk) << f;
  }
  cfg.out_dir = tmp_ / "site";
  auto b = run([&](auto& o, auto& e) { return run_build(fixture_path("ic_edu.ttl"), cfg, o, e); });
  EXPECT_EQ(nlohmann::json::parse(b.out)["written"].get<int>(), 6);
}

TEST_F(CliTest, BuildWritesSixFiles) {
  CliConfig cfg;
  cfg.out_dir = tmp_ / "site";
  auto r = run([&](auto& o, auto& e) { return run_build(fixture_path("ic_edu.ttl"), cfg, o, e); });
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.out.find("6 files"), std::string::npos);
  int files = 0;
  for (const auto& e : fs::recursive_directory_iterator(cfg.out_dir)) files += e.is_regular_file();
  EXPECT_EQ(files, 6);
}

TEST_F(CliTest, BuildErrors) {
  CliConfig cfg;
  cfg.out_dir = write("not-a-dir", "x") / "site";
  EXPECT_EQ(run([&](auto& o, auto& e) { return run_build(fixture_path("ic_edu.ttl"), cfg, o, e); }).code,
            kExitEnvironment);
  cfg.out_dir = tmp_ / "site";
  EXPECT_EQ(run([&](auto& o, auto& e) {
              return run_build(fixture_path("mutation_untagged_label.ttl"), cfg, o, e);
            }).code,
            kExitDomainFailure);
}

TEST_F(CliTest, Diff) {
  CliConfig cfg;
  auto diff = [&](const char* a, const char* b, bool lenient) {
    return run([&](auto& o, auto& e) { return run_diff(fixture_path(a), fixture_path(b), lenient, cfg, o, e); });
  };
  EXPECT_EQ(diff("vocabulary.ttl", "vocabulary.ttl", false).code, kExitOk);
  auto strict = diff("vocabulary.ttl", "mutation_definition_edit.ttl", false);
  EXPECT_EQ(strict.code, kExitDomainFailure);
  EXPECT_NE(strict.out.find("violation http://rightsstatements.org/rs/pd/1.0/ skos:definition@en"),
            std::string::npos);
  auto lenient = diff("vocabulary.ttl", "mutation_definition_edit.ttl", true);
  EXPECT_EQ(lenient.code, kExitOk);
  EXPECT_NE(lenient.out.find("info "), std::string::npos);
  EXPECT_EQ(diff("vocabulary.ttl", "mutation_untagged_label.ttl", false).code, kExitEnvironment);
}

TEST_F(CliTest, Check) {
  CliConfig cfg;
  auto check = [&](const char* objects, const char* vocab) {
    return run([&](auto& o, auto& e) { return run_check(fixture_path(objects), fixture_path(vocab), cfg, o, e); });
  };
  auto dpla = check("dpla.ttl", "ic_edu.ttl");
  EXPECT_EQ(dpla.code, kExitOk);
  EXPECT_NE(dpla.out.find("RESOLVED 1\n"), std::string::npos);
  EXPECT_NE(dpla.out.find("FREE_TEXT 1\n"), std::string::npos);
  auto ucsd = check("ucsd.ttl", "ic_edu.ttl");
  EXPECT_EQ(ucsd.code, kExitOk);
  EXPECT_NE(ucsd.out.find("RESOLVED 1\n"), std::string::npos);
  auto ghost = check("ghost.ttl", "ic_edu.ttl");
  EXPECT_EQ(ghost.code, kExitDomainFailure);
  EXPECT_NE(ghost.out.find("UNKNOWN 1\n"), std::string::npos);
  EXPECT_EQ(run([&](auto& o, auto& e) {
              return run_check(write("bad.ttl", "garbage"), fixture_path("ic_edu.ttl"), cfg, o, e);
            }).code,
            kExitEnvironment);
}

TEST_F(CliTest, ServeVocabularyFileAndSiteDirectory) {
  CliConfig cfg;
  cfg.port = 0;
  cfg.out_dir = tmp_ / "site";
  ASSERT_EQ(run([&](auto& o, auto& e) { return run_build(fixture_path("vocabulary.ttl"), cfg, o, e); }).code,
            kExitOk);

  for (const fs::path& input : {fixture_path("vocabulary.ttl"), cfg.out_dir}) {
    std::atomic<bool> stop{false};
    std::promise<int> bound;
    std::ostringstream out, err;
    auto done = std::async(std::launch::async, [&] {
      return run_serve(input, cfg, out, err, stop, [&](int p) { bound.set_value(p); });
    });
    int port = bound.get_future().get();

    httplib::Client cli("127.0.0.1", port);
    auto res = cli.Get("/rs/ic-edu/1.0/", {{"Accept", "text/turtle"}});
    ASSERT_TRUE(res) << input;
    EXPECT_EQ(res->status, 303);
    EXPECT_EQ(res->get_header_value("Location"), "/rs/ic-edu/1.0/data.ttl");
    EXPECT_EQ(cli.Get("/unknown")->status, 404);
    auto head = cli.Head("/rs/index.en.html");
    EXPECT_EQ(head->status, 200);
    EXPECT_TRUE(head->body.empty());

    stop = true;
    EXPECT_EQ(done.get(), kExitOk);
    EXPECT_NE(out.str().find("listening on http://127.0.0.1:" + std::to_string(port)), std::string::npos);
  }
}

TEST_F(CliTest, ServeErrors) {
  CliConfig cfg;
  std::atomic<bool> stop{true};
  std::ostringstream out, err;
  EXPECT_EQ(run_serve(tmp_ / "missing.ttl", cfg, out, err, stop), kExitEnvironment);
  EXPECT_EQ(run_serve(fixture_path("mutation_untagged_label.ttl"), cfg, out, err, stop), kExitDomainFailure);

  httplib::Server blocker;
  int port = blocker.bind_to_any_port("127.0.0.1");
  cfg.port = port;
  EXPECT_EQ(run_serve(fixture_path("ic_edu.ttl"), cfg, out, err, stop), kExitEnvironment);
}

TEST_F(CliTest, ConfigValidation) {
  CliConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.default_language = "english";
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg.default_language = "en";
  cfg.base = "not an iri";
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST_F(CliTest, BinaryExitCodes) {
  auto f = [](const char* name) { return fixture_path(name).string(); };
  EXPECT_EQ(run_binary("validate " + f("ic_edu.ttl")), 0);
  EXPECT_EQ(run_binary("validate " + f("mutation_untagged_label.ttl")), 1);
  EXPECT_EQ(run_binary("--format json validate " + f("vocabulary.ttl")), 0);
  EXPECT_EQ(run_binary("validate " + f("vocabulary.ttl") + " --default-lang nl"), 1);
  EXPECT_EQ(run_binary("validate " + f("vocabulary.ttl") + " --default-lang 'not a tag'"), 2);
  EXPECT_EQ(run_binary("validate"), 2);
  EXPECT_EQ(run_binary("frobnicate"), 2);
  EXPECT_EQ(run_binary("--format yaml validate " + f("ic_edu.ttl")), 2);
  EXPECT_EQ(run_binary("diff " + f("vocabulary.ttl") + " " + f("mutation_definition_edit.ttl")), 1);
  EXPECT_EQ(run_binary("diff " + f("vocabulary.ttl") + " " + f("mutation_definition_edit.ttl") +
                       " --allow-editorial"),
            0);
  EXPECT_EQ(run_binary("check " + f("ghost.ttl") + " --vocab " + f("vocabulary.ttl")), 1);
  EXPECT_EQ(run_binary("--help"), 0);
}
