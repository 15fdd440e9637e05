#include <numeric>
#include <unordered_map>

#include "isocay/forge/genset.hpp"

namespace isocay::forge {

using cayley::PackedKey;
using cayley::PackedKeyHash;

const char* kind_name(GenKind k) {
  switch (k) {
    case GenKind::Omega: return "omega";
    case GenKind::OmegaBar: return "omegabar";
    case GenKind::OmegaHat: return "omegahat";
  }
  return "?";
}

GenKind parse_kind(std::string_view s) {
  if (s == "omega") return GenKind::Omega;
  if (s == "omegabar") return GenKind::OmegaBar;
  if (s == "omegahat") return GenKind::OmegaHat;
  throw FormatError("unknown generator set kind '" + std::string(s) + "'");
}

bool GenSet::inverse_closed() const {
  for (std::size_t i = 0; i < gens.size(); ++i) {
    const auto p = gens[i].inv;
    if (p == kNoPartner || p >= gens.size() || gens[p].inv != i) return false;
  }
  return true;
}

std::vector<std::uint32_t> GenSet::colors() const {
  std::vector<std::uint32_t> c;
  for (const auto& g : gens) c.push_back(g.color);
  return c;
}

std::vector<cayley::ProjMat> GenSet::projs() const {
  std::vector<cayley::ProjMat> c;
  for (const auto& g : gens) c.push_back(g.proj);
  return c;
}

GenSet build_omega(const GenParams& p) {
  GenSet out;
  out.params = p;
  out.kind = GenKind::Omega;
  const auto& E = *p.E;
  const auto one_minus_zinv = cyc::CycElem::one(p.alg) - cyc::CycElem::z_inverse(p.alg);
  const ff::FqMatrix b = cyc::specialize(one_minus_zinv, p.alpha);
  const ff::FqMatrix theta = ff::regular_rep(E, p.u);
  const ff::FqMatrix theta_inv = theta.inverse();
  ff::FqMatrix tj = ff::FqMatrix::identity(p.F, p.d), tj_inv = tj;
  ff::ExtField::Elem uj = 1;
  std::unordered_map<PackedKey, std::uint32_t, PackedKeyHash> seen;
  for (std::uint64_t j = 0; j < p.n; ++j) {
    Generator g{tj * b * tj_inv, {}, conj_by_unit(one_minus_zinv, uj), static_cast<std::uint32_t>(j), 1, kNoPartner,
                false, {}};
    if (!(cyc::specialize(*g.lift, p.alpha) == g.matrix))
      throw VerificationError("specialized lift differs from theta^j b theta^-j at j=" + std::to_string(j));
    g.proj = p.pgl->from_matrix(g.matrix);
    const auto [it, fresh] = seen.emplace(p.pgl->key(g.proj), static_cast<std::uint32_t>(j));
    if (!fresh)
      throw VerificationError("Omega elements " + std::to_string(it->second) + " and " + std::to_string(j) +
                              " coincide in PGL_d(F_q): the quotient is too small");
    out.gens.push_back(std::move(g));
    tj = tj * theta;
    tj_inv = theta_inv * tj_inv;
    uj = E.mul(uj, p.u);
  }
  if (p.d == 2) {
    // color 1 = d - 1, so inverses can land inside Omega itself
    for (auto& g : out.gens) {
      const auto it = seen.find(p.pgl->key(p.pgl->inverse(g.proj)));
      if (it != seen.end()) g.inv = it->second;
    }
  }
  return out;
}

GenSet symmetrize(const GenSet& omega) {
  if (omega.kind == GenKind::OmegaBar) return omega;
  if (omega.kind != GenKind::Omega) throw PreconditionError("symmetrize expects an Omega set");
  const GenParams& p = omega.params;
  GenSet out;
  out.params = p;
  out.kind = GenKind::OmegaBar;
  std::unordered_map<PackedKey, std::uint32_t, PackedKeyHash> index;
  for (const auto& g : omega.gens) {
    Generator h = g;
    h.inv = kNoPartner;
    index.emplace(p.pgl->key(h.proj), static_cast<std::uint32_t>(out.gens.size()));
    out.gens.push_back(std::move(h));
  }
  const std::size_t n = omega.gens.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& g = omega.gens[i];
    const cayley::ProjMat inv = p.pgl->inverse(g.proj);
    const auto key = p.pgl->key(inv);
    const auto it = index.find(key);
    if (it != index.end()) {
      out.diagnostics.push_back("inverse of Omega element " + std::to_string(i) + " coincides with element " +
                                std::to_string(it->second));
      out.gens[i].inv = it->second;
      out.gens[it->second].inv = static_cast<std::uint32_t>(i);
      continue;
    }
    Generator h{g.matrix.inverse(), inv, g.lift ? std::optional(g.lift->inverse()) : std::nullopt, g.j,
                (p.d - g.color) % p.d, static_cast<std::uint32_t>(i), true, {}};
    const auto idx = static_cast<std::uint32_t>(out.gens.size());
    out.gens[i].inv = idx;
    index.emplace(key, idx);
    out.gens.push_back(std::move(h));
  }
  if (out.gens.size() != 2 * n)
    out.diagnostics.push_back("symmetrized set has " + std::to_string(out.gens.size()) + " elements, expected " +
                              std::to_string(2 * n));
  return out;
}

std::uint32_t color_of(const Generator& g, std::uint32_t d) {
  if (!g.lift) throw PreconditionError("color_of needs a global lift");
  const auto nrd = cyc::reduced_norm(*g.lift);
  const int v = ff::valuation(nrd, ff::Place<ff::Field>::zero());
  const int dd = static_cast<int>(d);
  return static_cast<std::uint32_t>(((v % dd) + dd) % dd);
}

PslStatus psl_check(const cayley::PglContext& ctx, const cayley::ProjMat& m) {
  const auto& F = *ctx.field();
  const auto det = ctx.det(m);
  if (det == 0) throw PreconditionError("singular matrix");
  const std::uint64_t g = std::gcd<std::uint64_t>(ctx.d(), F.order() - 1);
  return F.pow(det, static_cast<std::int64_t>((F.order() - 1) / g)) == 1 ? PslStatus::InPsl : PslStatus::InPglOnly;
}

std::uint64_t expected_index(const GenParams& p) {
  const auto& F = *p.F;
  const auto x = F.div(p.gamma, F.add(1, p.gamma));
  const std::uint64_t g = std::gcd<std::uint64_t>(p.d, F.order() - 1);
  const auto e = static_cast<std::int64_t>((F.order() - 1) / g);
  for (std::uint64_t k = 1;; ++k)
    if (F.pow(F.pow(x, static_cast<std::int64_t>(k)), e) == 1) return k;
}

}  // namespace isocay::forge
