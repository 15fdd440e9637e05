#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "config.hpp"
#include "isocay/common/errors.hpp"
#include "manifest.hpp"

using namespace isocay;

namespace {
std::string temp_file(const std::string& name, const std::string& contents) {
  const auto p = std::filesystem::temp_directory_path() / ("isocay_test_" + name);
  std::ofstream(p) << contents;
  return p.string();
}
}  // namespace

TEST_CASE("byte counts") {
  CHECK(cli::parse_bytes("4096") == 4096);
  CHECK(cli::parse_bytes("2K") == 2048);
  CHECK(cli::parse_bytes("3G") == 3ull << 30);
  CHECK_THROWS_AS(cli::parse_bytes("lots"), PreconditionError);
  CHECK_THROWS_AS(cli::parse_bytes(""), PreconditionError);
}

TEST_CASE("config expansion puts file entries before command-line flags") {
  const auto path = temp_file("cfg", "# comment\nq = 5\n\nd=3\nkmax=4\n");
  const auto out = cli::expand_config({"isocay", "moments", "--config", path, "--kmax", "8"});
  const std::vector<std::string> expected = {"isocay", "moments", "--q=5", "--d=3", "--kmax=4", "--kmax", "8"};
  CHECK(out == expected);
  const auto bad = temp_file("badcfg", "q 5\n");
  CHECK_THROWS_AS(cli::read_config(bad), FormatError);
  CHECK_THROWS_AS(cli::expand_config({"isocay", "gens", "--config"}), PreconditionError);
}

TEST_CASE("manifest round trip") {
  cli::RunManifest m;
  m.tool_version = "1.0.0";
  m.args = {"graph", "--q", "5", "--out", "a b.txt"};
  m.params = "q=5 d=3";
  m.inputs = {{"in.gens", "0123456789abcdef"}};
  m.outputs = {{"a b.txt", "fedcba9876543210"}};
  m.threads = 2;
  m.seed = 7;
  m.peak_rss_kb = 1234;
  const auto path = (std::filesystem::temp_directory_path() / "isocay_test.manifest").string();
  cli::write_manifest(path, m);
  const auto r = cli::read_manifest(path);
  CHECK(r.args == m.args);
  CHECK(r.params == m.params);
  CHECK(r.inputs == m.inputs);
  CHECK(r.outputs == m.outputs);
  CHECK(r.threads == 2);
  CHECK(r.seed == std::optional<std::uint64_t>(7));
  CHECK(r.peak_rss_kb == 1234);
  CHECK_THROWS_AS(cli::read_manifest(temp_file("notmanifest", "hello=1\n")), FormatError);
}

TEST_CASE("file hashes") {
  const auto a = temp_file("h1", "abc");
  const auto b = temp_file("h2", "abd");
  CHECK(cli::file_hash(a) != cli::file_hash(b));
  CHECK(cli::file_hash(a) == cli::file_hash(a));
  CHECK(cli::file_hash(a).size() == 16);
}
