#include "config.hpp"

#include <fstream>

#include "isocay/common/errors.hpp"
#include "isocay/common/text.hpp"

namespace isocay::cli {

KeyValues read_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open config file " + path);
  KeyValues out;
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    const auto t = text::trim(line);
    if (t.empty() || t.front() == '#') continue;
    const auto eq = t.find('=');
    if (eq == std::string_view::npos || eq == 0)
      throw FormatError(path + ":" + std::to_string(no) + ": expected key=value");
    out.emplace_back(std::string(text::trim(t.substr(0, eq))), std::string(text::trim(t.substr(eq + 1))));
  }
  return out;
}

std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::string path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config") {
      if (i + 1 == args.size()) throw PreconditionError("--config needs a file");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (path.empty()) return rest;
  // rest[0] is the program name, rest[1] the subcommand.
  std::vector<std::string> out(rest.begin(), rest.begin() + std::min<std::size_t>(2, rest.size()));
  for (const auto& [k, v] : read_config(path)) out.push_back("--" + k + "=" + v);
  if (rest.size() > 2) out.insert(out.end(), rest.begin() + 2, rest.end());
  return out;
}

std::uint64_t parse_bytes(const std::string& s) {
  if (s.empty()) throw PreconditionError("empty byte count");
  std::uint64_t mult = 1;
  std::string digits = s;
  switch (s.back()) {
    case 'K': case 'k': mult = 1ull << 10; break;
    case 'M': case 'm': mult = 1ull << 20; break;
    case 'G': case 'g': mult = 1ull << 30; break;
    case 'T': case 't': mult = 1ull << 40; break;
    default: break;
  }
  if (mult != 1) digits.pop_back();
  std::uint64_t v = 0;
  try {
    v = text::to_u64(digits);
  } catch (const FormatError&) {
    throw PreconditionError("bad byte count '" + s + "'");
  }
  if (v > ~0ull / mult) throw PreconditionError("byte count too large: " + s);
  return v * mult;
}

}  // namespace isocay::cli
