#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "isocay/cayley/cayley_graph.hpp"
#include "isocay/common/bigint.hpp"

namespace isocay::forge {
struct GenSet;
}

namespace isocay::spectra {

enum class Strategy { GroupDp, BallMitm };
const char* strategy_name(Strategy s);
Strategy parse_strategy(std::string_view s);

/// N_k = number of length-k words over the generator multiset whose
/// product is the identity. N[0] = 1.
struct MomentSeq {
  std::uint64_t genset_hash = 0;
  std::string colors = "all";  // "all" or a comma list
  std::vector<BigInt> N;

  std::uint32_t K() const { return N.empty() ? 0 : static_cast<std::uint32_t>(N.size() - 1); }
  friend bool operator==(const MomentSeq& a, const MomentSeq& b) {
    return a.genset_hash == b.genset_hash && a.colors == b.colors && a.N == b.N;
  }
};

struct MomentOptions {
  std::optional<std::set<std::uint32_t>> colors;
  std::uint64_t memory_budget = 4ull << 30;
  /// group-dp enumerates the whole group; larger groups abort.
  std::uint64_t max_vertices = 10'000'000;
};

MomentSeq walk_moments(const forge::GenSet& gens, std::uint32_t K, Strategy strategy, const MomentOptions& opt = {});

/// Word counts on a prebuilt Cayley graph of the whole group. `columns`
/// selects the letters (indices into g.columns, repeats allowed).
std::vector<BigInt> group_dp_moments(const cayley::CayleyGraph& g, std::uint32_t K,
                                     const std::vector<std::uint32_t>& columns);
/// Words whose i-th letter has color pattern[i mod pattern.size()].
std::vector<BigInt> pattern_moments(const cayley::CayleyGraph& g, std::uint32_t K,
                                    const std::vector<std::uint32_t>& pattern);
/// N_k = sum_g c_a(g) c_b(g^{-1}), a = ceil(k/2), b = k - a, with c_a the
/// length-a word counts kept in hash maps keyed by packed matrices.
std::vector<BigInt> ball_mitm_moments(const cayley::PglContext& ctx, const std::vector<cayley::ProjMat>& gens,
                                      std::uint32_t K, std::uint64_t memory_budget);

/// `version=1 genset=<hex> colors=<list|all> K=<int>` then `k N_k` lines.
void write_moments(std::ostream& os, const MomentSeq& m);
MomentSeq read_moments(std::istream& is);

}  // namespace isocay::spectra
