#include "isocay/spectra/isomorphism.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>

#include "isocay/common/errors.hpp"
#include "isocay/common/parallel.hpp"

namespace isocay::spectra {

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct Csr {
  std::vector<std::uint64_t> off;
  std::vector<std::uint32_t> nb;
  std::size_t n() const { return off.size() - 1; }
  bool has_edge(std::uint32_t u, std::uint32_t v) const {
    return std::binary_search(nb.begin() + off[u], nb.begin() + off[u + 1], v);
  }
};

Csr to_csr(const cayley::CayleyGraph& g) {
  const auto lists = cayley::undirected_neighbors(g);
  Csr c;
  c.off.reserve(lists.size() + 1);
  c.off.push_back(0);
  for (const auto& l : lists) c.off.push_back(c.off.back() + l.size());
  c.nb.reserve(c.off.back());
  for (const auto& l : lists) c.nb.insert(c.nb.end(), l.begin(), l.end());
  return c;
}

using Colors = std::vector<std::uint64_t>;

// One refinement round: new color = hash(old color, multiset of neighbor
// colors). The multiset hash is a sum of mixed values, so it depends only
// on the neighborhood and never on the numbering.
void refine_round(const Csr& g, const Colors& in, Colors& out) {
  out.resize(in.size());
  parallel_for(
      g.n(),
      [&](std::size_t lo, std::size_t hi, std::size_t) {
        for (std::size_t v = lo; v < hi; ++v) {
          std::uint64_t s = 0;
          for (auto i = g.off[v]; i < g.off[v + 1]; ++i) s += mix(in[g.nb[i]]);
          out[v] = mix(in[v] * 0x2545F4914F6CDD1DULL ^ s);
        }
      },
      4096);
}

Colors sorted(const Colors& c) {
  Colors s = c;
  std::sort(s.begin(), s.end());
  return s;
}

std::size_t classes(const Colors& s_sorted) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < s_sorted.size(); ++i) k += i == 0 || s_sorted[i] != s_sorted[i - 1];
  return k;
}

bool csr_iso(const Csr& ga, const Csr& gb, const std::vector<std::uint32_t>& map) {
  if (ga.n() != gb.n() || map.size() != ga.n() || ga.nb.size() != gb.nb.size()) return false;
  std::vector<char> hit(gb.n(), 0);
  for (auto w : map) {
    if (w >= gb.n() || hit[w]) return false;
    hit[w] = 1;
  }
  for (std::uint32_t u = 0; u < ga.n(); ++u)
    for (auto i = ga.off[u]; i < ga.off[u + 1]; ++i)
      if (!gb.has_edge(map[u], map[ga.nb[i]])) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> histogram(const Colors& s_sorted) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> h;
  for (auto x : s_sorted) {
    if (h.empty() || h.back().first != x) h.emplace_back(x, 0);
    ++h.back().second;
  }
  return h;
}

// Refines both colorings with the same number of rounds until neither
// partition splits further. False as soon as the color multisets differ.
bool refine_pair(const Csr& ga, Colors& ca, const Csr& gb, Colors& cb) {
  Colors sa = sorted(ca), sb = sorted(cb);
  if (sa != sb) return false;
  std::size_t k = classes(sa);
  Colors na, nb;
  while (true) {
    refine_round(ga, ca, na);
    refine_round(gb, cb, nb);
    sa = sorted(na);
    sb = sorted(nb);
    if (sa != sb) return false;
    ca.swap(na);
    cb.swap(nb);
    const std::size_t k2 = classes(sa);
    if (k2 == k) return true;
    k = k2;
  }
}

struct LimitReached {};

class Search {
 public:
  Search(const Csr& ga, const Csr& gb, const IsoOptions& opt)
      : ga_(ga), gb_(gb), opt_(opt), start_(std::chrono::steady_clock::now()) {}

  bool run(Colors ca, Colors cb, std::uint32_t depth) {
    ++nodes;
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (nodes > opt_.node_limit || elapsed > opt_.time_limit_s) throw LimitReached{};
    if (!refine_pair(ga_, ca, gb_, cb)) return false;
    const auto h = histogram(sorted(ca));
    const auto target = std::min_element(h.begin(), h.end(), [](const auto& x, const auto& y) {
      const bool xs = x.second > 1, ys = y.second > 1;
      if (xs != ys) return xs;
      return x.second != y.second ? x.second < y.second : x.first < y.first;
    });
    if (target->second == 1) {  // discrete
      std::vector<std::pair<std::uint64_t, std::uint32_t>> inb;
      inb.reserve(cb.size());
      for (std::uint32_t w = 0; w < cb.size(); ++w) inb.emplace_back(cb[w], w);
      std::sort(inb.begin(), inb.end());
      std::vector<std::uint32_t> map(ca.size());
      for (std::uint32_t v = 0; v < ca.size(); ++v)
        map[v] = std::lower_bound(inb.begin(), inb.end(), std::make_pair(ca[v], std::uint32_t{0}))->second;
      if (!csr_iso(ga_, gb_, map)) return false;
      witness = std::move(map);
      return true;
    }
    const std::uint64_t cell = target->first;
    std::uint32_t v = 0;
    while (ca[v] != cell) ++v;
    const std::uint64_t marker = mix(0xC0FFEEULL + depth);
    for (std::uint32_t w = 0; w < cb.size(); ++w) {
      if (cb[w] != cell) continue;
      Colors na = ca, nb = cb;
      na[v] = mix(cell ^ marker);
      nb[w] = mix(cell ^ marker);
      if (run(std::move(na), std::move(nb), depth + 1)) return true;
    }
    return false;
  }

  std::uint64_t nodes = 0;
  std::vector<std::uint32_t> witness;

 private:
  const Csr& ga_;
  const Csr& gb_;
  IsoOptions opt_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

WLCertificate wl_certificate(const cayley::CayleyGraph& g) {
  const Csr c = to_csr(g);
  Colors col(c.n(), 1), next;
  WLCertificate cert;
  std::size_t k = 1;
  while (true) {
    refine_round(c, col, next);
    col.swap(next);
    ++cert.rounds;
    const auto s = sorted(col);
    const std::size_t k2 = classes(s);
    if (k2 == k) {
      cert.histogram = histogram(s);
      return cert;
    }
    k = k2;
  }
}

const char* iso_verdict_name(IsoVerdict v) {
  switch (v) {
    case IsoVerdict::Isomorphic: return "isomorphic";
    case IsoVerdict::NonIsomorphic: return "non-isomorphic";
    case IsoVerdict::Timeout: return "timeout";
  }
  return "?";
}

bool is_isomorphism(const cayley::CayleyGraph& a, const cayley::CayleyGraph& b, const std::vector<std::uint32_t>& map) {
  return a.n() == b.n() && csr_iso(to_csr(a), to_csr(b), map);
}

IsoResult find_isomorphism(const cayley::CayleyGraph& a, const cayley::CayleyGraph& b, const IsoOptions& opt) {
  const auto t0 = std::chrono::steady_clock::now();
  IsoResult res;
  auto finish = [&](IsoVerdict v) {
    res.verdict = v;
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
  };
  if (a.n() != b.n()) return finish(IsoVerdict::NonIsomorphic);
  const Csr ga = to_csr(a), gb = to_csr(b);
  if (ga.nb.size() != gb.nb.size()) return finish(IsoVerdict::NonIsomorphic);
  Search s(ga, gb, opt);
  try {
    const bool found = s.run(Colors(a.n(), 1), Colors(b.n(), 1), 0);
    res.nodes = s.nodes;
    if (found) res.witness = std::move(s.witness);
    return finish(found ? IsoVerdict::Isomorphic : IsoVerdict::NonIsomorphic);
  } catch (const LimitReached&) {
    res.nodes = s.nodes;
    return finish(IsoVerdict::Timeout);
  }
}

}  // namespace isocay::spectra
