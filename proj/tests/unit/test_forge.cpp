#include <doctest.h>

#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "isocay/common/errors.hpp"
#include "isocay/cyc/cyclic_algebra.hpp"
#include "isocay/forge/genset.hpp"
#include "isocay/forge/genset_io.hpp"
#include "isocay/suites/fixtures.hpp"
#include "isocay/suites/oracles.hpp"

using namespace isocay;
namespace fx = isocay::suites::fixtures;

namespace {
// Omega-hat for (q, d) = (5, 3) is small enough to rebuild in every test.
const forge::GenSet& hat53() {
  static const auto h = forge::build_omega_hat(forge::build_omega(forge::GenParams::make(5, 3, 1)));
  return h;
}
}  // namespace

TEST_CASE("parameters for the worked example") {
  const auto p = forge::GenParams::make(3, 5, 1, 1);
  CHECK(p.gamma == 1);
  CHECK(p.n == 121);
  CHECK(forge::expected_index(p) == 1);
  CHECK(forge::default_alpha(*p.F, 5) == 1);
  const auto p53 = forge::GenParams::make(5, 3, 1);
  CHECK(p53.alpha == p53.F->from_int(-2));
  CHECK_THROWS_AS(forge::GenParams::make(2, 3, 1), PreconditionError);
  CHECK_THROWS_AS(forge::GenParams::make(3, 5, 5), PreconditionError);
}

TEST_CASE("Omega and Omega-bar for (3, 5)") {
  const auto p = forge::GenParams::make(3, 5, 1, 1);
  const auto omega = forge::build_omega(p);
  REQUIRE(omega.size() == fx::kOmegaSize);
  CHECK(omega.gens[0].matrix == ff::FqMatrix::from_rows(p.F, fx::kB1));
  for (const auto& g : omega.gens) CHECK(forge::color_of(g, 5) == 1);
  const auto bar = forge::symmetrize(omega);
  CHECK(bar.size() == fx::kOmegaBarSize);
  CHECK(bar.inverse_closed());
  for (const auto& g : bar.gens) {
    CHECK(forge::color_of(g, 5) == (g.inverted ? 4u : 1u));
    CHECK(forge::psl_check(*p.pgl, g.proj) == forge::PslStatus::InPsl);
  }
}

TEST_CASE("Omega-bar for (5, 3) has 62 elements") {
  const auto bar = forge::symmetrize(forge::build_omega(forge::GenParams::make(5, 3, 1)));
  CHECK(bar.size() == 62);
  CHECK(bar.inverse_closed());
}

TEST_CASE("Omega-hat for (5, 3)") {
  const auto& h = hat53();
  CHECK(h.size() == 62);
  std::map<std::uint32_t, std::size_t> by_color;
  for (const auto& g : h.gens) ++by_color[g.color];
  CHECK(by_color[1] == 31);
  CHECK(by_color[2] == 31);
  REQUIRE(h.stats.has_value());
  CHECK(h.stats->rejected == 0);
  // Verified identity words correspond to complete flags of F_5^3.
  std::size_t flags = 0;
  for (const auto& line : suites::enumerate_subspaces(5, 3, 1))
    for (const auto& plane : suites::enumerate_subspaces(5, 3, 2)) {
      bool inside = false;
      for (std::uint32_t a = 0; a < 5 && !inside; ++a)
        for (std::uint32_t b = 0; b < 5 && !inside; ++b) {
          bool eq = true;
          for (std::size_t k = 0; k < 3; ++k) eq = eq && (a * plane[0][k] + b * plane[1][k]) % 5 == line[0][k];
          inside = eq;
        }
      flags += inside;
    }
  CHECK(flags == 186);
  CHECK(h.stats->verified == flags);
}

TEST_CASE("attach_subspace is a bijection onto proper subspaces for (5, 3)") {
  const auto& h = hat53();
  std::set<suites::Basis> oracle, got;
  for (std::uint32_t k = 1; k < 3; ++k)
    for (auto& b : suites::enumerate_subspaces(5, 3, k)) oracle.insert(b);
  for (const auto& g : h.gens) {
    const auto sub = forge::attach_subspace(g, h.params);
    CHECK(sub.dim() == 3 - g.color);
    got.insert(sub.basis);
  }
  CHECK(got == oracle);
}

TEST_CASE("family orders") {
  CHECK(forge::family_order(3, 5) == 2);
  CHECK(forge::family_order(3, 7) == 3);
  CHECK(forge::family_order(5, 3) == 1);
  CHECK(forge::family_order(4, 5) == 1);
  for (std::uint64_t q : {3u, 4u, 5u, 7u, 8u, 9u, 11u})
    for (std::uint32_t d = 2; d < 14; ++d)
      if (std::gcd<std::uint64_t>(q, d) == 1) CHECK(forge::family_order(q, d) == suites::family_order_oracle(q, d));
}

TEST_CASE("generator file round trip and rejection") {
  const auto& h = hat53();
  const auto text = forge::genset_to_string(h);
  std::istringstream in(text);
  const auto back = forge::read_genset(in);
  CHECK(forge::genset_to_string(back) == text);
  CHECK(forge::genset_fingerprint(back) == forge::genset_fingerprint(h));
  std::string broken = text;
  broken.replace(broken.find("mat=") + 4, 1, "9");
  std::istringstream bad(broken);
  CHECK_THROWS_AS(forge::read_genset(bad), FormatError);
}
