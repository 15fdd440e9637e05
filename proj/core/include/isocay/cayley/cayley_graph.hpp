#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "isocay/cayley/proj_mat.hpp"

namespace isocay::forge {
struct GenSet;
}

namespace isocay::cayley {

/// One out-edge slot per generator: neighbor(v, c) = v * gens[c].
struct GenColumn {
  std::uint32_t gen = 0;
  std::uint32_t color = 0;
  friend bool operator==(const GenColumn&, const GenColumn&) = default;
};

class CayleyGraph {
 public:
  std::uint32_t q = 0;
  std::uint32_t d = 0;
  std::vector<PackedKey> vertices;      // vertex 0 is the identity
  std::vector<GenColumn> columns;
  std::vector<std::uint32_t> adj;       // n * r neighbor indices, row per vertex
  bool symmetric = false;               // generator multiset closed under inverses
  bool connected = true;                // underlying undirected graph

  std::size_t n() const { return vertices.size(); }
  std::size_t r() const { return columns.size(); }
  std::uint32_t neighbor(std::size_t v, std::size_t c) const { return adj[v * columns.size() + c]; }

  friend bool operator==(const CayleyGraph& a, const CayleyGraph& b) {
    return a.q == b.q && a.d == b.d && a.vertices == b.vertices && a.columns == b.columns && a.adj == b.adj &&
           a.symmetric == b.symmetric && a.connected == b.connected;
  }
};

/// BFS closure from the identity, right-multiplying by generators in
/// order. Vertex numbers follow discovery order, so the result does not
/// depend on the thread count. ResourceError beyond max_vertices.
CayleyGraph bfs_build(const PglContext& ctx, const std::vector<ProjMat>& gens, const std::vector<std::uint32_t>& colors,
                      std::uint64_t max_vertices);
CayleyGraph bfs_build(const forge::GenSet& gens, std::uint64_t max_vertices);

/// Keeps only the generator columns whose color is in `colors`.
CayleyGraph colored_subgraph(const CayleyGraph& g, const std::set<std::uint32_t>& colors);

/// Column index of the inverse generator for each column, kNoColumn when
/// the inverse is not among the columns. Derived from the adjacency of
/// vertex 0: column c' inverts c iff 0 -c-> x -c'-> 0 for every start.
inline constexpr std::uint32_t kNoColumn = 0xFFFFFFFFu;
std::vector<std::uint32_t> inverse_columns(const CayleyGraph& g);
bool is_regular_symmetric(const CayleyGraph& g);

/// Number of complete subgraphs on i+1 vertices, i = 0..max_dim, of the
/// undirected simple graph underlying g.
struct CellCounts {
  std::vector<std::uint64_t> counts;
};
CellCounts clique_cells(const CayleyGraph& g, std::uint32_t max_dim, std::uint64_t budget = 2'000'000'000ull);

/// Sorted neighbor lists of the undirected simple graph (loops dropped).
std::vector<std::vector<std::uint32_t>> undirected_neighbors(const CayleyGraph& g);

/// Text: `version=1 n= r= q= d=` header, `c <gen> <color>` per column,
/// `v <hex>` per vertex, `e u v gen color` per directed edge.
void export_text(std::ostream& os, const CayleyGraph& g);
CayleyGraph import_text(std::istream& is);
/// Binary: magic "ISOCAYG1", little-endian u32 fields, column records,
/// 16-byte keys, n*r u32 neighbors, trailing FNV-1a-64 of all prior bytes.
void export_binary(std::ostream& os, const CayleyGraph& g);
CayleyGraph import_binary(std::istream& is);
std::string to_binary_string(const CayleyGraph& g);

}  // namespace isocay::cayley
