#include <algorithm>
#include <iterator>

#include "isocay/cayley/cayley_graph.hpp"
#include "isocay/common/errors.hpp"

namespace isocay::cayley {

namespace {

struct CliqueCounter {
  const std::vector<std::vector<std::uint32_t>>& up;  // neighbors with larger index
  std::vector<std::uint64_t>& counts;
  std::uint32_t max_size;
  std::uint64_t budget;
  std::uint64_t work = 0;

  // cand: common forward neighbors of the current clique of size `size`.
  void extend(const std::vector<std::uint32_t>& cand, std::uint32_t size) {
    counts[size] += cand.size();  // each candidate completes a clique of size+1
    if (size + 1 >= max_size) return;
    std::vector<std::uint32_t> next;
    for (auto w : cand) {
      next.clear();
      const auto& nw = up[w];
      work += cand.size() + nw.size();
      if (work > budget) throw ResourceError("clique_cells work budget exceeded");
      std::set_intersection(cand.begin(), cand.end(), nw.begin(), nw.end(), std::back_inserter(next));
      if (!next.empty()) extend(next, size + 1);
    }
  }
};

}  // namespace

CellCounts clique_cells(const CayleyGraph& g, std::uint32_t max_dim, std::uint64_t budget) {
  if (g.d != 0 && max_dim > g.d) throw PreconditionError("max_dim exceeds d");
  const auto nb = undirected_neighbors(g);
  std::vector<std::vector<std::uint32_t>> up(g.n());
  for (std::size_t v = 0; v < g.n(); ++v)
    up[v].assign(std::upper_bound(nb[v].begin(), nb[v].end(), static_cast<std::uint32_t>(v)), nb[v].end());

  CellCounts out;
  out.counts.assign(max_dim + 1, 0);
  out.counts[0] = g.n();
  if (max_dim == 0) return out;
  CliqueCounter cc{up, out.counts, max_dim + 1, budget};
  for (std::size_t v = 0; v < g.n(); ++v)
    if (!up[v].empty()) cc.extend(up[v], 1);
  return out;
}

}  // namespace isocay::cayley
