#include "isocay/spectra/moments.hpp"

#include <absl/container/flat_hash_map.h>

#include <functional>
#include <istream>
#include <ostream>

#include "isocay/common/errors.hpp"
#include "isocay/common/hash.hpp"
#include "isocay/common/parallel.hpp"
#include "isocay/common/text.hpp"
#include "isocay/forge/genset.hpp"
#include "isocay/forge/genset_io.hpp"

namespace isocay::spectra {

namespace {

using u128 = unsigned __int128;

u128 add_checked(u128 a, u128 b) {
  const u128 s = a + b;
  if (s < a) throw ResourceError("walk count overflows 128 bits; reduce K");
  return s;
}

std::uint64_t add_checked64(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t s = a + b;
  if (s < a) throw ResourceError("ball count overflows 64 bits; reduce K");
  return s;
}

BigInt to_big(u128 v) {
  BigInt out = static_cast<std::uint64_t>(v >> 64);
  out <<= 64;
  out += static_cast<std::uint64_t>(v);
  return out;
}

// One DP step: next[y] = sum over letters c of cur[y * g_c^{-1}] when every
// letter has an inverse column (parallel pull), else a serial push.
void dp_step(const cayley::CayleyGraph& g, const std::vector<std::uint32_t>& letters,
             const std::vector<std::uint32_t>& inv, const std::vector<u128>& cur, std::vector<u128>& next) {
  const std::size_t r = g.r();
  bool pull = true;
  for (auto c : letters) pull = pull && inv[c] != cayley::kNoColumn;
  if (pull) {
    parallel_for(
        g.n(),
        [&](std::size_t lo, std::size_t hi, std::size_t) {
          for (std::size_t y = lo; y < hi; ++y) {
            u128 acc = 0;
            const std::uint32_t* row = g.adj.data() + y * r;
            for (auto c : letters) acc = add_checked(acc, cur[row[inv[c]]]);
            next[y] = acc;
          }
        },
        4096);
  } else {
    std::fill(next.begin(), next.end(), u128{0});
    for (std::size_t v = 0; v < g.n(); ++v) {
      if (cur[v] == 0) continue;
      for (auto c : letters) {
        auto& slot = next[g.neighbor(v, c)];
        slot = add_checked(slot, cur[v]);
      }
    }
  }
}

std::vector<BigInt> run_dp(const cayley::CayleyGraph& g, std::uint32_t K,
                           const std::function<const std::vector<std::uint32_t>&(std::uint32_t)>& letters_at) {
  if (g.n() == 0) throw PreconditionError("empty graph");
  const auto inv = cayley::inverse_columns(g);
  std::vector<u128> cur(g.n(), 0), next(g.n(), 0);
  cur[0] = 1;
  std::vector<BigInt> N{BigInt(1)};
  for (std::uint32_t k = 1; k <= K; ++k) {
    dp_step(g, letters_at(k - 1), inv, cur, next);
    cur.swap(next);
    N.push_back(to_big(cur[0]));
  }
  return N;
}

using Ball = absl::flat_hash_map<cayley::PackedKey, std::uint64_t>;
constexpr std::uint64_t kBytesPerEntry = 32;
constexpr std::size_t kJoinBlock = 8192;

template <class Fn>
void for_blocks(const Ball& m, Fn&& fn) {
  std::vector<std::pair<cayley::PackedKey, std::uint64_t>> block;
  block.reserve(kJoinBlock);
  for (const auto& kv : m) {
    block.emplace_back(kv.first, kv.second);
    if (block.size() == kJoinBlock) {
      fn(block);
      block.clear();
    }
  }
  if (!block.empty()) fn(block);
}

}  // namespace

const char* strategy_name(Strategy s) { return s == Strategy::GroupDp ? "group-dp" : "ball-mitm"; }

Strategy parse_strategy(std::string_view s) {
  if (s == "group-dp") return Strategy::GroupDp;
  if (s == "ball-mitm") return Strategy::BallMitm;
  throw PreconditionError("unknown strategy '" + std::string(s) + "' (group-dp or ball-mitm)");
}

std::vector<BigInt> group_dp_moments(const cayley::CayleyGraph& g, std::uint32_t K,
                                     const std::vector<std::uint32_t>& columns) {
  for (auto c : columns)
    if (c >= g.r()) throw PreconditionError("column index out of range");
  return run_dp(g, K, [&](std::uint32_t) -> const std::vector<std::uint32_t>& { return columns; });
}

std::vector<BigInt> pattern_moments(const cayley::CayleyGraph& g, std::uint32_t K,
                                    const std::vector<std::uint32_t>& pattern) {
  if (pattern.empty()) throw PreconditionError("empty color pattern");
  std::vector<std::vector<std::uint32_t>> by_pos(pattern.size());
  for (std::size_t i = 0; i < pattern.size(); ++i)
    for (std::size_t c = 0; c < g.r(); ++c)
      if (g.columns[c].color == pattern[i]) by_pos[i].push_back(static_cast<std::uint32_t>(c));
  return run_dp(g, K, [&](std::uint32_t step) -> const std::vector<std::uint32_t>& {
    return by_pos[step % by_pos.size()];
  });
}

std::vector<BigInt> ball_mitm_moments(const cayley::PglContext& ctx, const std::vector<cayley::ProjMat>& gens,
                                      std::uint32_t K, std::uint64_t memory_budget) {
  const std::uint32_t A = (K + 1) / 2;
  std::vector<Ball> balls(1);
  balls[0].emplace(ctx.key(ctx.identity()), 1);
  std::uint64_t entries = 1;
  auto check_budget = [&](std::uint64_t extra) {
    if ((entries + extra) * kBytesPerEntry > memory_budget)
      throw ResourceError("ball-mitm needs more than the memory budget of " + std::to_string(memory_budget) +
                          " bytes at radius " + std::to_string(balls.size() - 1));
  };
  const std::size_t r = gens.size();
  std::vector<cayley::PackedKey> keys;
  for (std::uint32_t a = 1; a <= A; ++a) {
    Ball nb;
    for_blocks(balls[a - 1], [&](const std::vector<std::pair<cayley::PackedKey, std::uint64_t>>& block) {
      keys.resize(block.size() * r);
      parallel_for(
          block.size(),
          [&](std::size_t lo, std::size_t hi, std::size_t) {
            for (std::size_t i = lo; i < hi; ++i) {
              const auto x = ctx.decode(block[i].first);
              for (std::size_t c = 0; c < r; ++c) keys[i * r + c] = ctx.key(ctx.mul(x, gens[c]));
            }
          },
          256);
      for (std::size_t i = 0; i < block.size(); ++i)
        for (std::size_t c = 0; c < r; ++c) {
          auto& slot = nb[keys[i * r + c]];
          slot = add_checked64(slot, block[i].second);
        }
      check_budget(nb.size());
    });
    entries += nb.size();
    balls.push_back(std::move(nb));
  }

  std::vector<BigInt> N(K + 1);
  std::vector<cayley::PackedKey> inv_keys;
  for (std::uint32_t k = 0; k <= K; ++k) {
    const std::uint32_t a = (k + 1) / 2, b = k - a;
    u128 total = 0;
    for_blocks(balls[b], [&](const std::vector<std::pair<cayley::PackedKey, std::uint64_t>>& block) {
      inv_keys.resize(block.size());
      parallel_for(
          block.size(),
          [&](std::size_t lo, std::size_t hi, std::size_t) {
            for (std::size_t i = lo; i < hi; ++i) inv_keys[i] = ctx.key(ctx.inverse(ctx.decode(block[i].first)));
          },
          256);
      for (std::size_t i = 0; i < block.size(); ++i)
        if (auto it = balls[a].find(inv_keys[i]); it != balls[a].end())
          total = add_checked(total, u128{block[i].second} * it->second);
    });
    N[k] = to_big(total);
  }
  return N;
}

MomentSeq walk_moments(const forge::GenSet& gens, std::uint32_t K, Strategy strategy, const MomentOptions& opt) {
  if (gens.gens.empty()) throw PreconditionError("walk_moments needs generators");
  MomentSeq out;
  out.genset_hash = forge::genset_fingerprint(gens);
  std::vector<std::uint32_t> selected;
  if (opt.colors) {
    if (opt.colors->empty()) throw PreconditionError("empty color set");
    out.colors.clear();
    for (auto c : *opt.colors) out.colors += (out.colors.empty() ? "" : ",") + std::to_string(c);
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (opt.colors->count(gens.gens[i].color)) selected.push_back(static_cast<std::uint32_t>(i));
    if (selected.empty()) throw PreconditionError("no generator has the requested colors");
  } else {
    for (std::size_t i = 0; i < gens.size(); ++i) selected.push_back(static_cast<std::uint32_t>(i));
  }

  if (strategy == Strategy::GroupDp) {
    const std::uint64_t per_vertex = 4 * gens.size() + 16 * 2 + 40;
    const std::uint64_t cap = std::min<std::uint64_t>(opt.max_vertices, opt.memory_budget / per_vertex);
    const auto g = cayley::bfs_build(gens, cap);
    out.N = group_dp_moments(g, K, selected);
  } else {
    const auto all = gens.projs();
    std::vector<cayley::ProjMat> letters;
    for (auto i : selected) letters.push_back(all[i]);
    out.N = ball_mitm_moments(*gens.params.pgl, letters, K, opt.memory_budget);
  }
  return out;
}

void write_moments(std::ostream& os, const MomentSeq& m) {
  os << "version=1 genset=" << hex64(m.genset_hash) << " colors=" << m.colors << " K=" << m.K() << '\n';
  for (std::size_t k = 0; k < m.N.size(); ++k) os << k << ' ' << m.N[k].str() << '\n';
}

MomentSeq read_moments(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError("empty moment file");
  const auto kv = text::parse_kv(line);
  if (text::require(kv, "version") != "1") throw FormatError("unsupported moment file version");
  MomentSeq m;
  const auto& h = text::require(kv, "genset");
  try {
    std::size_t used = 0;
    m.genset_hash = std::stoull(h, &used, 16);
    if (used != h.size()) throw FormatError("bad genset hash");
  } catch (const std::logic_error&) {
    throw FormatError("bad genset hash");
  }
  m.colors = text::require(kv, "colors");
  const auto K = text::to_u64(text::require(kv, "K"));
  while (std::getline(is, line)) {
    const auto tok = text::tokens(line);
    if (tok.empty()) continue;
    if (tok.size() != 2 || text::to_u64(tok[0]) != m.N.size()) throw FormatError("moment lines out of order");
    const std::string digits(tok[1]);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw FormatError("moment is not a nonnegative integer");
    m.N.emplace_back(digits);
  }
  if (m.N.size() != K + 1) throw FormatError("moment file truncated");
  return m;
}

}  // namespace isocay::spectra
