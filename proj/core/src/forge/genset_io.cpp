#include "isocay/forge/genset_io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

#include "isocay/common/errors.hpp"
#include "isocay/common/hash.hpp"
#include "isocay/common/text.hpp"

namespace isocay::forge {

namespace {

std::string join_field_coeffs(const std::vector<std::uint32_t>& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) out += (i ? "," : "") + std::to_string(c[i]);
  return out;
}

}  // namespace

void write_genset(std::ostream& os, const GenSet& g) {
  const GenParams& p = g.params;
  const auto& F = *p.F;
  os << "version=1 kind=" << kind_name(g.kind) << " q=" << p.q << " d=" << p.d << " s=" << p.s
     << " alpha=" << F.format(p.alpha, ':') << " p=" << F.characteristic() << " f=" << F.degree()
     << " bmod=" << join_field_coeffs(F.modulus()) << " mod=";
  const auto& em = p.E->modulus();
  for (std::size_t i = 0; i < em.size(); ++i) os << (i ? "," : "") << F.format(em[i], ':');
  os << " u=" << p.E->format(p.u) << '\n';
  const std::uint32_t dd = p.d * p.d;
  for (std::size_t i = 0; i < g.gens.size(); ++i) {
    const Generator& x = g.gens[i];
    os << "idx=" << i << " j=" << x.j << " color=" << x.color << " inv=";
    if (x.inv == kNoPartner) os << '-';
    else os << x.inv;
    os << " mat=";
    for (std::uint32_t k = 0; k < dd; ++k) os << (k ? ";" : "") << F.format(x.matrix.data()[k], ',');
    if (!x.word.empty()) {
      os << " word=";
      for (std::size_t k = 0; k < x.word.size(); ++k) os << (k ? "," : "") << x.word[k];
    }
    os << '\n';
  }
}

std::string genset_to_string(const GenSet& g) {
  std::ostringstream os;
  write_genset(os, g);
  return os.str();
}

std::uint64_t genset_fingerprint(const GenSet& g) { return fnv1a64(genset_to_string(g)); }

namespace {

GenSet parse_genset(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw FormatError("empty generator file");
  const auto kv = text::parse_kv(line);
  if (text::require(kv, "version") != "1") throw FormatError("unsupported generator file version");
  const GenKind kind = parse_kind(text::require(kv, "kind"));
  const auto q = text::to_u64(text::require(kv, "q"));
  const auto d = static_cast<std::uint32_t>(text::to_u64(text::require(kv, "d")));
  const auto s = static_cast<std::uint32_t>(text::to_u64(text::require(kv, "s")));
  const auto pch = static_cast<std::uint32_t>(text::to_u64(text::require(kv, "p")));
  const auto f = static_cast<std::uint32_t>(text::to_u64(text::require(kv, "f")));
  std::vector<std::uint32_t> bmod;
  for (auto part : text::split(text::require(kv, "bmod"), ',')) bmod.push_back(static_cast<std::uint32_t>(text::to_u64(part)));
  auto F = ff::Field::create(pch, f, bmod);
  if (F->order() != q) throw FormatError("header q does not match the field");
  std::vector<ff::Field::Elem> emod;
  for (auto part : text::split(text::require(kv, "mod"), ',')) emod.push_back(F->parse_elem(part, ':'));
  auto E = ff::ExtField::create(F, d, std::move(emod));
  const auto alpha = F->parse_elem(text::require(kv, "alpha"), ':');
  const auto u = E->parse_elem(text::require(kv, "u"));

  GenSet g;
  g.params = GenParams::make(q, d, s, alpha, E, u);
  g.kind = kind;
  const GenParams& p = g.params;
  const auto zinv_term = cyc::CycElem::one(p.alg) - cyc::CycElem::z_inverse(p.alg);
  std::vector<cyc::CycElem> omega_lifts;
  if (kind == GenKind::OmegaHat) {
    ff::ExtField::Elem uj = 1;
    for (std::uint64_t j = 0; j < p.n; ++j, uj = E->mul(uj, p.u)) omega_lifts.push_back(conj_by_unit(zinv_term, uj));
  }

  while (std::getline(is, line)) {
    if (text::trim(line).empty()) continue;
    const auto gk = text::parse_kv(line);
    if (text::to_u64(text::require(gk, "idx")) != g.gens.size()) throw FormatError("generator indices out of order");
    const auto& inv_s = text::require(gk, "inv");
    const auto entries = text::split(text::require(gk, "mat"), ';');
    if (entries.size() != d * d) throw FormatError("matrix has the wrong number of entries");
    ff::FqMatrix m(F, d);
    for (std::uint32_t k = 0; k < d * d; ++k) m.at(k / d, k % d) = F->parse_elem(entries[k], ',');
    Generator x{m, p.pgl->from_matrix(m), std::nullopt,
                static_cast<std::uint32_t>(text::to_u64(text::require(gk, "j"))),
                static_cast<std::uint32_t>(text::to_u64(text::require(gk, "color"))),
                inv_s == "-" ? kNoPartner : static_cast<std::uint32_t>(text::to_u64(inv_s)), false, {}};
    if (x.j >= p.n) throw FormatError("conjugation index out of range");
    if (const auto it = gk.find("word"); it != gk.end())
      for (auto part : text::split(it->second, ',')) {
        x.word.push_back(static_cast<std::uint32_t>(text::to_u64(part)));
        if (x.word.back() >= p.n) throw FormatError("word letter out of range");
      }
    switch (kind) {
      case GenKind::Omega:
      case GenKind::OmegaBar: {
        x.inverted = kind == GenKind::OmegaBar && g.gens.size() >= p.n;
        cyc::CycElem lift = conj_by_unit(zinv_term, E->pow(p.u, x.j));
        x.lift = x.inverted ? lift.inverse() : lift;
        break;
      }
      case GenKind::OmegaHat: {
        if (x.word.empty()) throw FormatError("omegahat generator without a word");
        cyc::CycElem lift = omega_lifts[x.word[0]];
        for (std::size_t k = 1; k < x.word.size(); ++k) lift = lift * omega_lifts[x.word[k]];
        x.lift = lift;
        break;
      }
    }
    if (!(cyc::specialize(*x.lift, p.alpha) == x.matrix))
      throw VerificationError("generator " + std::to_string(g.gens.size()) + " does not match its global lift");
    g.gens.push_back(std::move(x));
  }
  for (const auto& x : g.gens)
    if (x.inv != kNoPartner && x.inv >= g.gens.size()) throw FormatError("inverse partner out of range");
  return g;
}

}  // namespace

GenSet read_genset(std::istream& is) {
  // Bad field data in a file is a format problem, not a caller error.
  try {
    return parse_genset(is);
  } catch (const PreconditionError& e) {
    throw FormatError(std::string("invalid generator file: ") + e.what());
  } catch (const ArithmeticError& e) {
    throw FormatError(std::string("invalid generator file: ") + e.what());
  }
}

}  // namespace isocay::forge
