#include <absl/container/flat_hash_map.h>

#include <algorithm>
#include <map>

#include "isocay/common/parallel.hpp"
#include "isocay/ff/qbinomial.hpp"
#include "isocay/forge/genset.hpp"

namespace isocay::forge {

using cayley::PackedKey;
using cayley::ProjMat;

namespace {

std::uint64_t ipow(std::uint64_t b, std::uint32_t e) {
  std::uint64_t r = 1;
  for (std::uint32_t i = 0; i < e; ++i) r *= b;
  return r;
}

/// Lifts multiplied by 1+t: for Omega they have polynomial coefficients,
/// which keeps the verification products free of gcd computations.
std::vector<cyc::CycElem> scaled_lifts(const GenSet& omega) {
  std::vector<cyc::CycElem> out;
  const auto& opt = omega.params.alg->one_plus_t();
  for (const auto& g : omega.gens) {
    if (!g.lift) throw PreconditionError("Omega generators need global lifts");
    out.push_back(g.lift->scaled(opt));
  }
  return out;
}

/// Product stack over consecutive words in lex order; recomputes only the
/// levels after the first letter that changed.
class LiftStack {
 public:
  LiftStack(const std::vector<cyc::CycElem>& lifts, std::size_t len) : lifts_(lifts), len_(len) {}

  /// Returns the first level that was recomputed.
  std::size_t load(const std::uint32_t* word) {
    std::size_t p = 0;
    if (!stack_.empty())
      while (p < len_ && prev_[p] == word[p]) ++p;
    if (stack_.empty()) stack_.reserve(len_);
    stack_.erase(stack_.begin() + static_cast<std::ptrdiff_t>(p), stack_.end());
    for (std::size_t i = p; i < len_; ++i)
      stack_.push_back(i == 0 ? lifts_[word[0]] : stack_[i - 1] * lifts_[word[i]]);
    prev_.assign(word, word + len_);
    return p;
  }
  const cyc::CycElem& at(std::size_t level) const { return stack_[level]; }

 private:
  const std::vector<cyc::CycElem>& lifts_;
  std::size_t len_;
  std::vector<cyc::CycElem> stack_;
  std::vector<std::uint32_t> prev_;
};

}  // namespace

std::vector<std::uint32_t> identity_word_candidates(const GenSet& omega, std::uint64_t memory_budget) {
  if (omega.kind != GenKind::Omega) throw PreconditionError("identity words are searched over an Omega set");
  const GenParams& p = omega.params;
  const auto& ctx = *p.pgl;
  const std::uint32_t d = p.d;
  const std::uint32_t a = (d + 1) / 2, b = d - a;
  const auto n = static_cast<std::uint32_t>(omega.gens.size());
  const auto gens = omega.projs();

  const std::uint64_t suffix_words = ipow(n, b);
  if (suffix_words * 72 > memory_budget)
    throw ResourceError("suffix table of " + std::to_string(suffix_words) + " words exceeds the memory budget");

  // suffix map: product -> codes of suffix words (ascending = lex order)
  absl::flat_hash_map<PackedKey, std::vector<std::uint64_t>> suffix;
  suffix.reserve(suffix_words);
  {
    std::vector<std::uint32_t> w(b, 0);
    std::vector<ProjMat> st(b);
    std::size_t from = 0;
    for (std::uint64_t code = 0; code < suffix_words; ++code) {
      for (std::size_t i = from; i < b; ++i) st[i] = i == 0 ? gens[w[0]] : ctx.mul(st[i - 1], gens[w[i]]);
      suffix[ctx.key(st[b - 1])].push_back(code);
      // advance odometer (last letter fastest)
      std::size_t i = b;
      while (i > 0 && ++w[i - 1] == n) w[--i] = 0;
      from = i == 0 ? 0 : i - 1;
    }
  }

  std::vector<std::vector<std::uint32_t>> parts(n);
  parallel_for(n, [&](std::size_t lo, std::size_t hi, std::size_t) {
    std::vector<std::uint32_t> w(a, 0);
    std::vector<ProjMat> st(a);
    for (std::size_t j1 = lo; j1 < hi; ++j1) {
      auto& out = parts[j1];
      std::fill(w.begin(), w.end(), 0);
      w[0] = static_cast<std::uint32_t>(j1);
      st[0] = gens[j1];
      std::size_t from = 1;
      while (true) {
        for (std::size_t i = from; i < a; ++i) st[i] = ctx.mul(st[i - 1], gens[w[i]]);
        const auto it = suffix.find(ctx.key(ctx.inverse(st[a - 1])));
        if (it != suffix.end()) {
          for (auto code : it->second) {
            out.insert(out.end(), w.begin(), w.end());
            std::vector<std::uint32_t> sw(b);
            for (std::size_t k = b; k-- > 0;) {
              sw[k] = static_cast<std::uint32_t>(code % n);
              code /= n;
            }
            out.insert(out.end(), sw.begin(), sw.end());
          }
        }
        std::size_t i = a;
        while (i > 1 && ++w[i - 1] == n) w[--i] = 0;
        if (i <= 1) break;
        from = i - 1;
      }
    }
  });
  std::size_t total = 0;
  for (const auto& part : parts) total += part.size();
  if (total * sizeof(std::uint32_t) > memory_budget)
    throw ResourceError("identity-word candidates exceed the memory budget");
  std::vector<std::uint32_t> words;
  words.reserve(total);
  for (auto& part : parts) words.insert(words.end(), part.begin(), part.end());
  return words;
}

bool verify_word_globally(const GenSet& omega, const std::vector<std::uint32_t>& word) {
  const auto lifts = scaled_lifts(omega);
  cyc::CycElem prod = lifts.at(word.at(0));
  for (std::size_t i = 1; i < word.size(); ++i) prod = prod * lifts.at(word[i]);
  return prod.is_central_scalar();
}

GenSet build_omega_hat(const GenSet& omega, const OmegaHatOptions& opt) {
  if (omega.kind != GenKind::Omega) throw PreconditionError("build_omega_hat expects an Omega set");
  const GenParams& p = omega.params;
  const auto& ctx = *p.pgl;
  const std::uint32_t d = p.d;
  OmegaHatStats stats;

  const std::vector<std::uint32_t> words = identity_word_candidates(omega, opt.memory_budget);
  const std::size_t count = words.size() / d;
  stats.candidates = count;

  const auto lifts = scaled_lifts(omega);
  std::vector<std::uint8_t> ok(count, 0);
  parallel_for(
      count,
      [&](std::size_t lo, std::size_t hi, std::size_t) {
        LiftStack st(lifts, d);
        for (std::size_t w = lo; w < hi; ++w) {
          st.load(&words[w * d]);
          ok[w] = st.at(d - 1).is_central_scalar() ? 1 : 0;
        }
      },
      256);
  for (auto f : ok) stats.verified += f;
  stats.rejected = stats.candidates - stats.verified;

  // Class representatives: first occurrence in lex order is the lex-smallest prefix.
  struct Rep {
    std::uint32_t color;
    std::vector<std::uint32_t> witness;
  };
  std::vector<Rep> reps;
  absl::flat_hash_map<PackedKey, std::uint32_t> rep_of;
  {
    const auto gens = omega.projs();
    std::vector<ProjMat> st(d);
    const std::uint32_t* prev = nullptr;
    for (std::size_t w = 0; w < count; ++w) {
      if (!ok[w]) continue;
      const std::uint32_t* word = &words[w * d];
      std::size_t from = 0;
      if (prev)
        while (from < d - 1 && prev[from] == word[from]) ++from;
      for (std::size_t i = from; i + 1 < d; ++i) {
        st[i] = i == 0 ? gens[word[0]] : ctx.mul(st[i - 1], gens[word[i]]);
        const auto key = ctx.key(st[i]);
        if (!rep_of.contains(key)) {
          rep_of.emplace(key, static_cast<std::uint32_t>(reps.size()));
          reps.push_back({static_cast<std::uint32_t>(i + 1), std::vector<std::uint32_t>(word, word + i + 1)});
        }
      }
      prev = word;
    }
  }

  std::vector<cyc::CycElem> rep_scaled;
  rep_scaled.reserve(reps.size());
  for (const auto& r : reps) {
    cyc::CycElem prod = lifts[r.witness[0]];
    for (std::size_t i = 1; i < r.witness.size(); ++i) prod = prod * lifts[r.witness[i]];
    rep_scaled.push_back(std::move(prod));
  }

  if (opt.check_prefix_classes) {
    std::vector<std::size_t> verified_idx;
    for (std::size_t w = 0; w < count; ++w)
      if (ok[w]) verified_idx.push_back(w);
    std::vector<std::uint64_t> conflicts(thread_count() + 1, 0);
    const auto gens = omega.projs();
    parallel_for(
        verified_idx.size(),
        [&](std::size_t lo, std::size_t hi, std::size_t worker) {
          LiftStack st(lifts, d - 1);
          std::vector<ProjMat> fin(d);
          for (std::size_t k = lo; k < hi; ++k) {
            const std::uint32_t* word = &words[verified_idx[k] * d];
            const std::size_t from = st.load(word);
            for (std::size_t i = 0; i + 1 < d; ++i) {
              fin[i] = i == 0 ? gens[word[0]] : ctx.mul(fin[i - 1], gens[word[i]]);
              if (i < from) continue;
              const auto r = rep_of.at(ctx.key(fin[i]));
              if (std::equal(reps[r].witness.begin(), reps[r].witness.end(), word) && reps[r].color == i + 1) continue;
              if (!cyc::projectively_equal(st.at(i), rep_scaled[r])) ++conflicts[worker];
            }
          }
        },
        256);
    for (auto c : conflicts) stats.prefix_conflicts += c;
  }

  // Order by color, then witness word.
  std::vector<std::uint32_t> order(reps.size());
  for (std::uint32_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    if (reps[x].color != reps[y].color) return reps[x].color < reps[y].color;
    return reps[x].witness < reps[y].witness;
  });

  GenSet out;
  out.params = p;
  out.kind = GenKind::OmegaHat;
  absl::flat_hash_map<PackedKey, std::uint32_t> index;
  for (std::uint32_t r : order) {
    const Rep& rep = reps[r];
    ff::FqMatrix exact = omega.gens[rep.witness[0]].matrix;
    for (std::size_t i = 1; i < rep.witness.size(); ++i) exact = exact * omega.gens[rep.witness[i]].matrix;
    cyc::CycElem lift = rep_scaled[r].scaled(p.alg->one_plus_t().pow(-static_cast<long long>(rep.color)));
    Generator g{exact, ctx.from_matrix(exact), std::move(lift), rep.witness[0], rep.color, kNoPartner, false,
                rep.witness};
    const auto c = color_of(g, d);
    if (c != rep.color)
      throw VerificationError("reduced-norm color " + std::to_string(c) + " differs from prefix length " +
                              std::to_string(rep.color));
    index.emplace(ctx.key(g.proj), static_cast<std::uint32_t>(out.gens.size()));
    out.gens.push_back(std::move(g));
  }
  for (auto& g : out.gens) {
    const auto it = index.find(ctx.key(ctx.inverse(g.proj)));
    if (it == index.end()) throw VerificationError("Omega-hat is not closed under inverses");
    g.inv = it->second;
  }

  std::vector<std::uint64_t> sizes(d, 0);
  for (const auto& g : out.gens) ++sizes[g.color];
  for (std::uint32_t l = 1; l < d; ++l) {
    const BigInt expected = ff::gaussian_binomial(d, l, p.q);
    if (BigInt(sizes[l]) != expected)
      throw VerificationError("color class " + std::to_string(l) + " has " + std::to_string(sizes[l]) +
                              " elements, expected " + expected.str());
  }
  out.stats = stats;
  return out;
}

}  // namespace isocay::forge
