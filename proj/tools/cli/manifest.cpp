#include "manifest.hpp"

#include <sys/resource.h>

#include <fstream>
#include <iomanip>
#include <sstream>

#include "isocay/common/errors.hpp"
#include "isocay/common/hash.hpp"
#include "isocay/common/text.hpp"

namespace isocay::cli {

// Arguments may contain spaces or '=', so each one gets its own line and
// is stored verbatim after the first '='.
void write_manifest(const std::string& path, const RunManifest& m) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw PreconditionError("cannot write " + path);
  out << "manifest=1\n";
  out << "tool=isocay " << m.tool_version << '\n';
  for (const auto& a : m.args) out << "arg=" << a << '\n';
  out << "params=" << m.params << '\n';
  for (const auto& [p, h] : m.inputs) out << "input=" << h << ' ' << p << '\n';
  for (const auto& [p, h] : m.outputs) out << "output=" << h << ' ' << p << '\n';
  out << "threads=" << m.threads << '\n';
  if (m.seed) out << "seed=" << *m.seed << '\n';
  out << "wall_seconds=" << std::fixed << std::setprecision(3) << m.wall_seconds << '\n';
  out << "peak_rss_kb=" << m.peak_rss_kb << '\n';
  if (!out) throw ResourceError("write to " + path + " failed");
}

RunManifest read_manifest(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot open manifest " + path);
  RunManifest m;
  std::string line;
  bool header = false;
  auto file_entry = [&](const std::string& v) {
    const auto sp = v.find(' ');
    if (sp == std::string::npos) throw FormatError("bad file entry in manifest: " + v);
    return std::make_pair(v.substr(sp + 1), v.substr(0, sp));
  };
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw FormatError("bad manifest line: " + line);
    const std::string key = line.substr(0, eq), val = line.substr(eq + 1);
    if (key == "manifest") {
      if (val != "1") throw FormatError("unsupported manifest version");
      header = true;
    } else if (key == "tool") {
      m.tool_version = val;
    } else if (key == "arg") {
      m.args.push_back(val);
    } else if (key == "params") {
      m.params = val;
    } else if (key == "input") {
      m.inputs.push_back(file_entry(val));
    } else if (key == "output") {
      m.outputs.push_back(file_entry(val));
    } else if (key == "threads") {
      m.threads = text::to_u64(val);
    } else if (key == "seed") {
      m.seed = text::to_u64(val);
    } else if (key == "wall_seconds") {
      m.wall_seconds = std::stod(val);
    } else if (key == "peak_rss_kb") {
      m.peak_rss_kb = text::to_u64(val);
    }
  }
  if (!header || m.args.empty()) throw FormatError(path + " is not a run manifest");
  return m;
}

std::string file_hash(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreconditionError("cannot open " + path);
  Fnv1a64 h;
  char buf[1 << 16];
  while (in.read(buf, sizeof buf) || in.gcount() > 0)
    h.update(std::string_view(buf, static_cast<std::size_t>(in.gcount())));
  return hex64(h.digest());
}

std::uint64_t peak_rss_kb() {
  rusage ru{};
  getrusage(RUSAGE_SELF, &ru);
  return static_cast<std::uint64_t>(ru.ru_maxrss);
}

}  // namespace isocay::cli
