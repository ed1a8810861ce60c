#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "rsvocab/rdf/formats.hpp"
#include "rsvocab/vocab/vocabulary.hpp"

namespace rsvocab::testing {

inline std::filesystem::path fixture_path(const std::string& name) {
  return std::filesystem::path(RSVOCAB_FIXTURES) / name;
}

inline std::string read_fixture(const std::string& name) {
  std::ifstream in(fixture_path(name), std::ios::binary);
  if (!in) throw std::runtime_error("missing fixture " + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline rdf::Graph fixture_graph(const std::string& name) {
  return rdf::parse_turtle(read_fixture(name), "file://" + fixture_path(name).string());
}

inline vocab::Vocabulary fixture_vocabulary(const std::string& name) {
  auto r = vocab::load_vocabulary(fixture_graph(name), uri::NamespaceConfig{});
  if (!r.report.accepted()) {
    throw std::runtime_error(name + ": " + r.report.errors.front().rule + " " +
                             r.report.errors.front().message);
  }
  return r.vocabulary;
}

inline const std::string kIcEdu = "http://rightsstatements.org/rs/ic-edu/1.0/";

}  // namespace rsvocab::testing
