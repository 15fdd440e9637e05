#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace isocay::cli {

/// Written next to every output file as `<out>.manifest`.
struct RunManifest {
  std::string tool_version;
  std::vector<std::string> args;  // argv after config expansion, without the program name
  std::string params;             // resolved parameters, one line
  std::vector<std::pair<std::string, std::string>> inputs;   // path, hash
  std::vector<std::pair<std::string, std::string>> outputs;  // path, hash
  double wall_seconds = 0;
  std::uint64_t peak_rss_kb = 0;
  std::size_t threads = 0;
  std::optional<std::uint64_t> seed;
};

void write_manifest(const std::string& path, const RunManifest& m);
RunManifest read_manifest(const std::string& path);

/// FNV-1a-64 of the file contents, as 16 hex digits.
std::string file_hash(const std::string& path);
std::uint64_t peak_rss_kb();

}  // namespace isocay::cli
