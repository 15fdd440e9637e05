#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "isocay/cayley/cayley_graph.hpp"

namespace isocay::spectra {

/// Stable 1-WL coloring of the undirected simple graph. Colors are hashes
/// computed from neighborhood multisets only, so they do not depend on the
/// vertex numbering.
struct WLCertificate {
  std::uint32_t rounds = 0;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> histogram;  // (color, count), sorted
  friend bool operator==(const WLCertificate&, const WLCertificate&) = default;
};
WLCertificate wl_certificate(const cayley::CayleyGraph& g);

struct IsoOptions {
  std::uint64_t node_limit = 100'000;
  double time_limit_s = 600;
};

enum class IsoVerdict { Isomorphic, NonIsomorphic, Timeout };
const char* iso_verdict_name(IsoVerdict v);

struct IsoResult {
  IsoVerdict verdict = IsoVerdict::Timeout;
  std::vector<std::uint32_t> witness;  // witness[v of a] = vertex of b
  std::uint64_t nodes = 0;
  double seconds = 0;
};

/// Individualization-refinement search on the underlying undirected simple
/// graphs. A witness is checked edge by edge before it is returned.
IsoResult find_isomorphism(const cayley::CayleyGraph& a, const cayley::CayleyGraph& b, const IsoOptions& opt = {});

/// Whether `map` sends the undirected simple graph of a onto that of b.
bool is_isomorphism(const cayley::CayleyGraph& a, const cayley::CayleyGraph& b, const std::vector<std::uint32_t>& map);

}  // namespace isocay::spectra
