#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace isocay::cli {

using KeyValues = std::vector<std::pair<std::string, std::string>>;

/// Line-oriented `key=value` file. Blank lines and lines starting with '#'
/// are skipped.
KeyValues read_config(const std::string& path);

/// Removes `--config FILE` from args and inserts the file's entries as
/// `--key=value` right after the subcommand, so that flags given on the
/// command line come later and win.
std::vector<std::string> expand_config(const std::vector<std::string>& args);

/// "4G", "512M", "64K" or a plain byte count.
std::uint64_t parse_bytes(const std::string& s);

}  // namespace isocay::cli
