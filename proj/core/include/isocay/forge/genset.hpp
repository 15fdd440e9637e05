#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "isocay/cayley/proj_mat.hpp"
#include "isocay/cyc/cyclic_algebra.hpp"
#include "isocay/ff/fq_matrix.hpp"
#include "isocay/forge/gen_params.hpp"

namespace isocay::forge {

enum class GenKind { Omega, OmegaBar, OmegaHat };
const char* kind_name(GenKind k);
GenKind parse_kind(std::string_view s);

inline constexpr std::uint32_t kNoPartner = 0xFFFFFFFFu;

struct Generator {
  ff::FqMatrix matrix;            // exact representative, = specialize(lift)
  cayley::ProjMat proj;           // canonical projective class
  std::optional<cyc::CycElem> lift;
  std::uint32_t j = 0;            // conjugation index (first letter for products)
  std::uint32_t color = 0;
  std::uint32_t inv = kNoPartner; // index of the projective inverse in the set
  bool inverted = false;          // inverse of an Omega element (OmegaBar only)
  std::vector<std::uint32_t> word;  // indices into Omega (OmegaHat only)
};

/// Counters reported by the identity-word search.
struct OmegaHatStats {
  std::uint64_t candidates = 0;        // finite-quotient identity words
  std::uint64_t verified = 0;          // globally central scalars
  std::uint64_t rejected = 0;          // finite collisions that failed globally
  std::uint64_t prefix_conflicts = 0;  // equal finite keys, different global classes
};

struct GenSet {
  GenParams params;
  GenKind kind = GenKind::Omega;
  std::vector<Generator> gens;
  std::vector<std::string> diagnostics;
  std::optional<OmegaHatStats> stats;

  std::size_t size() const { return gens.size(); }
  bool inverse_closed() const;
  std::vector<std::uint32_t> colors() const;
  std::vector<cayley::ProjMat> projs() const;
};

/// Omega: u^j (1 - z^{-1}) u^{-j} for j = 0..n-1 and their specializations.
GenSet build_omega(const GenParams& params);
/// Omega together with projective inverses; coincidences are reported in
/// diagnostics and skipped.
GenSet symmetrize(const GenSet& omega);

struct OmegaHatOptions {
  std::uint64_t memory_budget = 4ull << 30;
  /// Also compare each prefix with its class representative globally.
  bool check_prefix_classes = true;
};
/// Prefix products of globally verified length-d identity words over Omega.
GenSet build_omega_hat(const GenSet& omega, const OmegaHatOptions& opt = {});

/// Identity words found by the finite meet-in-the-middle join, in lex order,
/// flattened d letters per word. Exposed for testing.
std::vector<std::uint32_t> identity_word_candidates(const GenSet& omega, std::uint64_t memory_budget);
/// Whether the product of the lifts of the word is a central scalar.
bool verify_word_globally(const GenSet& omega, const std::vector<std::uint32_t>& word);

/// nu_0(reduced_norm(lift)) mod d.
std::uint32_t color_of(const Generator& g, std::uint32_t d);

/// Reduced row-echelon basis of the subspace of F_q^d attached to g.
struct Subspace {
  std::vector<std::vector<ff::Field::Elem>> basis;
  std::size_t dim() const { return basis.size(); }
  friend bool operator==(const Subspace& a, const Subspace& b) { return a.basis == b.basis; }
  friend bool operator<(const Subspace& a, const Subspace& b) { return a.basis < b.basis; }
};
Subspace attach_subspace(const Generator& g, const GenParams& params);

enum class PslStatus { InPsl, InPglOnly };
PslStatus psl_check(const cayley::PglContext& ctx, const cayley::ProjMat& m);
/// Order of gamma/(1+gamma) in F_q^x / (F_q^x)^d.
std::uint64_t expected_index(const GenParams& params);

/// Order of q in (Z/d)^x / {+-1}.
std::uint32_t family_order(std::uint64_t q, std::uint32_t d);

struct FamilyResult {
  std::uint32_t m = 0;
  std::vector<GenSet> sets;                  // set i: base with every matrix raised to q^i
  std::vector<std::uint32_t> sigma_exponents;  // q^i s mod d
  /// Per set: whether it equals the independently built set of the same kind
  /// for exponent q^i s (as sets of projective classes).
  std::vector<bool> matches_independent;
  std::vector<std::string> notes;
};
/// Verifies (b_j^{(s)})^{q^i} = b_j^{(q^i s)} exactly for every j (fatal on
/// mismatch). For an OmegaBar base the powered set must equal the
/// independently built one (fatal); for OmegaHat the comparison is reported.
FamilyResult family(const GenParams& params, const GenSet& base, bool compare_omega_hat = true);

}  // namespace isocay::forge
