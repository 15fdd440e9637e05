#include <cstring>
#include <istream>
#include <iterator>
#include <ostream>

#include "isocay/cayley/cayley_graph.hpp"
#include "isocay/common/errors.hpp"
#include "isocay/common/hash.hpp"
#include "isocay/common/text.hpp"

namespace isocay::cayley {

namespace {

constexpr char kMagic[8] = {'I', 'S', 'O', 'C', 'A', 'Y', 'G', '1'};
constexpr std::uint32_t kVersion = 1;

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}
void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xFF));
}

class Reader {
 public:
  Reader(const std::string& s, std::size_t end) : s_(s), end_(end) {}
  std::uint64_t get(int bytes) {
    if (pos_ + bytes > end_) throw FormatError("graph file truncated");
    std::uint64_t v = 0;
    for (int i = 0; i < bytes; ++i) v |= std::uint64_t{static_cast<unsigned char>(s_[pos_ + i])} << (8 * i);
    pos_ += bytes;
    return v;
  }
  std::uint32_t u32() { return static_cast<std::uint32_t>(get(4)); }
  std::uint64_t u64() { return get(8); }
  std::size_t remaining() const { return end_ - pos_; }

 private:
  const std::string& s_;
  std::size_t end_;
  std::size_t pos_ = sizeof(kMagic);
};

void check_shape(const CayleyGraph& g) {
  if (g.n() == 0) throw FormatError("graph has no vertices");
  for (auto w : g.adj)
    if (w >= g.n()) throw FormatError("neighbor index out of range");
}

}  // namespace

void export_text(std::ostream& os, const CayleyGraph& g) {
  os << "version=1 n=" << g.n() << " r=" << g.r() << " q=" << g.q << " d=" << g.d << " symmetric=" << g.symmetric
     << " connected=" << g.connected << '\n';
  for (const auto& c : g.columns) os << "c " << c.gen << ' ' << c.color << '\n';
  for (const auto& v : g.vertices) os << "v " << v.hex() << '\n';
  for (std::size_t u = 0; u < g.n(); ++u)
    for (std::size_t c = 0; c < g.r(); ++c)
      os << "e " << u << ' ' << g.neighbor(u, c) << ' ' << g.columns[c].gen << ' ' << g.columns[c].color << '\n';
}

CayleyGraph import_text(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError("empty graph file");
  const auto kv = text::parse_kv(line);
  if (text::require(kv, "version") != "1") throw FormatError("unsupported graph file version");
  CayleyGraph g;
  const auto n = text::to_u64(text::require(kv, "n"));
  const auto r = text::to_u64(text::require(kv, "r"));
  g.q = static_cast<std::uint32_t>(text::to_u64(text::require(kv, "q")));
  g.d = static_cast<std::uint32_t>(text::to_u64(text::require(kv, "d")));
  g.symmetric = text::require(kv, "symmetric") == "1";
  g.connected = text::require(kv, "connected") == "1";
  if (n == 0 || n > 0xFFFFFFFFull || r > 0xFFFFFFFFull) throw FormatError("graph size out of range");
  g.vertices.reserve(n);
  g.adj.reserve(n * r);
  std::size_t edges = 0;
  while (std::getline(is, line)) {
    const auto tok = text::tokens(line);
    if (tok.empty()) continue;
    if (tok[0] == "c" && tok.size() == 3) {
      if (g.columns.size() >= r || !g.vertices.empty()) throw FormatError("unexpected column line");
      g.columns.push_back({static_cast<std::uint32_t>(text::to_u64(tok[1])), static_cast<std::uint32_t>(text::to_u64(tok[2]))});
    } else if (tok[0] == "v" && tok.size() == 2) {
      if (g.vertices.size() >= n || edges) throw FormatError("unexpected vertex line");
      g.vertices.push_back(PackedKey::from_hex(tok[1]));
    } else if (tok[0] == "e" && tok.size() == 5) {
      if (edges >= n * r) throw FormatError("too many edge lines");
      const auto u = text::to_u64(tok[1]);
      const auto c = edges % r;
      if (u != edges / r) throw FormatError("edge lines out of order");
      if (text::to_u64(tok[3]) != g.columns[c].gen || text::to_u64(tok[4]) != g.columns[c].color)
        throw FormatError("edge label does not match its column");
      g.adj.push_back(static_cast<std::uint32_t>(text::to_u64(tok[2])));
      ++edges;
    } else {
      throw FormatError("unrecognized graph line: " + line);
    }
  }
  if (g.columns.size() != r || g.vertices.size() != n || edges != n * r) throw FormatError("graph file truncated");
  check_shape(g);
  return g;
}

std::string to_binary_string(const CayleyGraph& g) {
  std::string out(kMagic, sizeof(kMagic));
  out.reserve(64 + g.r() * 8 + g.n() * 16 + g.adj.size() * 4);
  put_u32(out, kVersion);
  put_u32(out, static_cast<std::uint32_t>(g.n()));
  put_u32(out, static_cast<std::uint32_t>(g.r()));
  put_u32(out, g.q);
  put_u32(out, g.d);
  put_u32(out, (g.symmetric ? 1u : 0u) | (g.connected ? 2u : 0u));
  for (const auto& c : g.columns) {
    put_u32(out, c.gen);
    put_u32(out, c.color);
  }
  for (const auto& v : g.vertices) {
    put_u64(out, v.lo);
    put_u64(out, v.hi);
  }
  for (auto w : g.adj) put_u32(out, w);
  put_u64(out, fnv1a64(out));
  return out;
}

void export_binary(std::ostream& os, const CayleyGraph& g) {
  const std::string bytes = to_binary_string(g);
  os.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

CayleyGraph import_binary(std::istream& is) {
  const std::string s((std::istreambuf_iterator<char>(is)), std::istreambuf_iterator<char>());
  if (s.size() < sizeof(kMagic) + 8 || std::memcmp(s.data(), kMagic, sizeof(kMagic)) != 0)
    throw FormatError("not a binary graph file");
  const std::size_t body = s.size() - 8;
  std::uint64_t stored = 0;
  for (int i = 0; i < 8; ++i) stored |= std::uint64_t{static_cast<unsigned char>(s[body + i])} << (8 * i);
  if (fnv1a64(std::string_view(s.data(), body)) != stored) throw FormatError("graph file checksum mismatch");

  Reader in(s, body);
  if (in.u32() != kVersion) throw FormatError("unsupported graph file version");
  CayleyGraph g;
  const std::uint64_t n = in.u32();
  const std::uint64_t r = in.u32();
  g.q = in.u32();
  g.d = in.u32();
  const auto flags = in.u32();
  g.symmetric = flags & 1u;
  g.connected = flags & 2u;
  if (in.remaining() != r * 8 + n * 16 + n * r * 4) throw FormatError("graph file length does not match its header");
  for (std::uint64_t c = 0; c < r; ++c) {
    const auto gen = in.u32();
    g.columns.push_back({gen, in.u32()});
  }
  g.vertices.resize(n);
  for (auto& v : g.vertices) {
    v.lo = in.u64();
    v.hi = in.u64();
  }
  g.adj.resize(n * r);
  for (auto& w : g.adj) w = in.u32();
  check_shape(g);
  return g;
}

}  // namespace isocay::cayley
