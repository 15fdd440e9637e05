#include "isocay/cayley/cayley_graph.hpp"

#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <map>

#include "isocay/common/errors.hpp"
#include "isocay/common/parallel.hpp"
#include "isocay/forge/genset.hpp"

namespace isocay::cayley {

namespace {

constexpr std::size_t kBlock = 2048;

bool multiset_inverse_closed(const PglContext& ctx, const std::vector<ProjMat>& gens) {
  std::map<PackedKey, long> balance;
  for (const auto& g : gens) {
    ++balance[ctx.key(g)];
    --balance[ctx.key(ctx.inverse(g))];
  }
  return std::all_of(balance.begin(), balance.end(), [](const auto& kv) { return kv.second == 0; });
}

bool undirected_connected(const CayleyGraph& g) {
  const auto nb = undirected_neighbors(g);
  std::vector<char> seen(g.n(), 0);
  std::vector<std::uint32_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (auto w : nb[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == g.n();
}

}  // namespace

CayleyGraph bfs_build(const PglContext& ctx, const std::vector<ProjMat>& gens, const std::vector<std::uint32_t>& colors,
                      std::uint64_t max_vertices) {
  if (gens.empty()) throw PreconditionError("bfs_build needs at least one generator");
  if (colors.size() != gens.size()) throw PreconditionError("one color per generator expected");
  if (max_vertices == 0) throw PreconditionError("max_vertices must be positive");
  if (max_vertices > 0xFFFFFFFEull) max_vertices = 0xFFFFFFFEull;
  const std::size_t r = gens.size();

  CayleyGraph g;
  g.q = ctx.q();
  g.d = ctx.d();
  for (std::size_t c = 0; c < r; ++c) g.columns.push_back({static_cast<std::uint32_t>(c), colors[c]});
  g.symmetric = multiset_inverse_closed(ctx, gens);

  absl::flat_hash_map<PackedKey, std::uint32_t> index;
  std::vector<ProjMat> pending;  // matrices of vertices not yet expanded, in vertex order
  std::size_t pending_base = 0;  // vertex number of pending[0]
  const ProjMat id = ctx.identity();
  index.emplace(ctx.key(id), 0);
  g.vertices.push_back(ctx.key(id));
  pending.push_back(id);

  std::vector<ProjMat> prod;
  std::vector<PackedKey> keys;
  std::size_t next = 0;
  while (next < g.vertices.size()) {
    // Expand one block of consecutive vertices. Products are computed in
    // parallel; numbering is assigned sequentially in (vertex, column)
    // order, which is exactly the serial BFS discovery order.
    const std::size_t hi = std::min(g.vertices.size(), next + kBlock);
    const std::size_t cnt = hi - next;
    prod.resize(cnt * r);
    keys.resize(cnt * r);
    parallel_for(
        cnt,
        [&](std::size_t lo_i, std::size_t hi_i, std::size_t) {
          for (std::size_t i = lo_i; i < hi_i; ++i) {
            const ProjMat& x = pending[next + i - pending_base];
            for (std::size_t c = 0; c < r; ++c) {
              prod[i * r + c] = ctx.mul(x, gens[c]);
              keys[i * r + c] = ctx.key(prod[i * r + c]);
            }
          }
        },
        64);
    g.adj.resize(hi * r);
    for (std::size_t i = 0; i < cnt * r; ++i) {
      auto [it, fresh] = index.try_emplace(keys[i], static_cast<std::uint32_t>(g.vertices.size()));
      if (fresh) {
        if (g.vertices.size() >= max_vertices)
          throw ResourceError("Cayley graph exceeds max_vertices = " + std::to_string(max_vertices));
        g.vertices.push_back(keys[i]);
        pending.push_back(prod[i]);
      }
      g.adj[next * r + i] = it->second;
    }
    next = hi;
    // Drop expanded matrices once enough have accumulated.
    if (next - pending_base > (1u << 16)) {
      pending.erase(pending.begin(), pending.begin() + static_cast<std::ptrdiff_t>(next - pending_base));
      pending_base = next;
    }
  }
  g.connected = true;  // closure of a finite group under right multiplication
  return g;
}

CayleyGraph bfs_build(const forge::GenSet& gens, std::uint64_t max_vertices) {
  return bfs_build(*gens.params.pgl, gens.projs(), gens.colors(), max_vertices);
}

CayleyGraph colored_subgraph(const CayleyGraph& g, const std::set<std::uint32_t>& colors) {
  if (colors.empty()) throw PreconditionError("colored_subgraph needs a nonempty color set");
  for (auto c : colors) {
    const bool present = std::any_of(g.columns.begin(), g.columns.end(), [&](const GenColumn& x) { return x.color == c; });
    if (!present) throw PreconditionError("color " + std::to_string(c) + " does not occur in the graph");
  }
  std::vector<std::size_t> keep;
  for (std::size_t c = 0; c < g.r(); ++c)
    if (colors.count(g.columns[c].color)) keep.push_back(c);
  CayleyGraph out;
  out.q = g.q;
  out.d = g.d;
  out.vertices = g.vertices;
  for (auto c : keep) out.columns.push_back(g.columns[c]);
  out.adj.resize(g.n() * keep.size());
  for (std::size_t v = 0; v < g.n(); ++v)
    for (std::size_t k = 0; k < keep.size(); ++k) out.adj[v * keep.size() + k] = g.neighbor(v, keep[k]);
  if (g.symmetric) {
    const auto inv = inverse_columns(g);
    out.symmetric = true;
    // Closed iff the multiset of kept columns maps onto itself; compare
    // multiplicities of generator targets at vertex 0.
    std::map<std::uint32_t, long> balance;
    for (auto c : keep) {
      ++balance[g.neighbor(0, c)];
      if (inv[c] == kNoColumn) {
        out.symmetric = false;
        break;
      }
      // g_c^{-1} as a vertex: the neighbor of 0 along the inverse column.
      --balance[g.neighbor(0, inv[c])];
    }
    if (out.symmetric)
      out.symmetric = std::all_of(balance.begin(), balance.end(), [](const auto& kv) { return kv.second == 0; });
  } else {
    out.symmetric = is_regular_symmetric(out);
  }
  out.connected = undirected_connected(out);
  return out;
}

std::vector<std::uint32_t> inverse_columns(const CayleyGraph& g) {
  std::vector<std::uint32_t> inv(g.r(), kNoColumn);
  if (g.n() == 0) return inv;
  for (std::size_t c = 0; c < g.r(); ++c) {
    const auto x = g.neighbor(0, c);
    for (std::size_t c2 = 0; c2 < g.r(); ++c2)
      if (g.neighbor(x, c2) == 0) {
        inv[c] = static_cast<std::uint32_t>(c2);
        break;
      }
  }
  return inv;
}

bool is_regular_symmetric(const CayleyGraph& g) {
  const std::size_t r = g.r();
  std::vector<std::uint32_t> rows = g.adj;
  for (std::size_t v = 0; v < g.n(); ++v) std::sort(rows.begin() + v * r, rows.begin() + (v + 1) * r);
  for (std::size_t v = 0; v < g.n(); ++v) {
    const auto b = rows.begin() + v * r, e = b + r;
    for (auto it = b; it != e;) {
      const auto w = *it;
      const auto run = std::upper_bound(it, e, w);
      const auto wb = rows.begin() + std::size_t{w} * r;
      const auto [lo, hi] = std::equal_range(wb, wb + r, static_cast<std::uint32_t>(v));
      if (run - it != hi - lo) return false;
      it = run;
    }
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> undirected_neighbors(const CayleyGraph& g) {
  std::vector<std::vector<std::uint32_t>> nb(g.n());
  for (std::size_t v = 0; v < g.n(); ++v)
    for (std::size_t c = 0; c < g.r(); ++c) {
      const auto w = g.neighbor(v, c);
      if (w == v) continue;
      nb[v].push_back(w);
      nb[w].push_back(static_cast<std::uint32_t>(v));
    }
  for (auto& l : nb) {
    std::sort(l.begin(), l.end());
    l.erase(std::unique(l.begin(), l.end()), l.end());
  }
  return nb;
}

}  // namespace isocay::cayley
