#include <algorithm>
#include <numeric>

#include "isocay/forge/genset.hpp"

namespace isocay::forge {

std::uint32_t family_order(std::uint64_t q, std::uint32_t d) {
  if (d < 2) throw PreconditionError("family_order needs d >= 2");
  if (std::gcd<std::uint64_t>(q, d) != 1) throw PreconditionError("q must be invertible modulo d");
  std::uint64_t x = q % d;
  for (std::uint32_t m = 1; m <= d; ++m) {
    if (x == 1 || x == d - 1) return m;
    x = x * q % d;
  }
  throw VerificationError("order of q modulo d not found");  // unreachable: q^phi(d) = 1
}

namespace {
std::vector<cayley::PackedKey> sorted_keys(const GenSet& g) {
  std::vector<cayley::PackedKey> k;
  for (const auto& x : g.gens) k.push_back(g.params.pgl->key(x.proj));
  std::sort(k.begin(), k.end());
  return k;
}
}  // namespace

FamilyResult family(const GenParams& params, const GenSet& base, bool compare_omega_hat) {
  if (base.kind != GenKind::OmegaBar && base.kind != GenKind::OmegaHat)
    throw PreconditionError("family expects an OmegaBar or OmegaHat base");
  if (base.params.s != params.s || base.params.q != params.q || base.params.d != params.d)
    throw PreconditionError("family parameters do not match the base set");
  const std::uint32_t d = params.d;
  FamilyResult res;
  res.m = family_order(params.q, d);
  const GenSet omega = build_omega(params);
  std::uint64_t e = 1;
  for (std::uint32_t i = 0; i < res.m; ++i, e *= params.q) {
    const auto si = static_cast<std::uint32_t>(e * params.s % d);
    res.sigma_exponents.push_back(si);
    const GenParams pi = params.with_s(si);
    const GenSet omega_i = build_omega(pi);
    for (std::size_t j = 0; j < omega.gens.size(); ++j)
      if (!(omega.gens[j].matrix.pow(static_cast<std::int64_t>(e)) == omega_i.gens[j].matrix))
        throw VerificationError("(b_j^(" + std::to_string(params.s) + "))^" + std::to_string(e) + " != b_j^(" +
                                std::to_string(si) + ") at j=" + std::to_string(j));

    GenSet powered = base;
    powered.params = pi;
    powered.diagnostics.clear();
    powered.stats.reset();
    for (auto& g : powered.gens) {
      g.matrix = g.matrix.pow(static_cast<std::int64_t>(e));
      g.proj = pi.pgl->from_matrix(g.matrix);
      if (e != 1) g.lift.reset();  // lift^e lives in the algebra for s, not s_i
      g.color = static_cast<std::uint32_t>(e * g.color % d);
    }

    if (base.kind == GenKind::OmegaBar) {
      const bool same = sorted_keys(powered) == sorted_keys(symmetrize(omega_i));
      if (!same) throw VerificationError("powered OmegaBar differs from the independently built set for s=" + std::to_string(si));
      res.matches_independent.push_back(true);
    } else if (compare_omega_hat) {
      const bool same = sorted_keys(powered) == sorted_keys(build_omega_hat(omega_i));
      res.matches_independent.push_back(same);
      res.notes.push_back("set " + std::to_string(i) + " (s=" + std::to_string(si) + "): element-wise power " +
                          (same ? "equals" : "differs from") + " the independently built Omega-hat");
    } else {
      res.matches_independent.push_back(false);
      res.notes.push_back("set " + std::to_string(i) + ": Omega-hat comparison skipped");
    }
    res.sets.push_back(std::move(powered));
  }
  return res;
}

}  // namespace isocay::forge
