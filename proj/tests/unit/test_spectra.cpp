#include <doctest.h>

#include <cmath>
#include <sstream>

#include "isocay/common/errors.hpp"
#include "isocay/forge/genset.hpp"
#include "isocay/spectra/compare.hpp"
#include "isocay/suites/oracles.hpp"

using namespace isocay;

namespace {
struct Small {
  forge::GenSet bar;
  cayley::CayleyGraph g;
};
const Small& small52() {
  static const Small s = [] {
    auto b = forge::symmetrize(forge::build_omega(forge::GenParams::make(5, 2, 1)));
    auto g = cayley::bfs_build(b, 100'000);
    return Small{std::move(b), std::move(g)};
  }();
  return s;
}
std::vector<std::uint32_t> all_columns(const cayley::CayleyGraph& g) {
  std::vector<std::uint32_t> c(g.r());
  for (std::uint32_t i = 0; i < g.r(); ++i) c[i] = i;
  return c;
}
}  // namespace

TEST_CASE("strategy and mode names") {
  CHECK(spectra::parse_strategy("group-dp") == spectra::Strategy::GroupDp);
  CHECK(std::string(spectra::strategy_name(spectra::Strategy::BallMitm)) == "ball-mitm");
  CHECK_THROWS_AS(spectra::parse_strategy("dp"), PreconditionError);
  CHECK_THROWS_AS(spectra::parse_compare_mode("fast"), PreconditionError);
}

TEST_CASE("walk moments on a cycle") {
  // C_8 = circulant {1, 7}: closed walks of length 2k number binomial(2k, k).
  const auto g = suites::circulant_graph(8, {1, 7});
  const auto N = spectra::group_dp_moments(g, 6, all_columns(g));
  CHECK(N[0] == 1);
  CHECK(N[1] == 0);
  CHECK(N[2] == 2);
  CHECK(N[4] == 6);
  CHECK(N[6] == 20);
}

TEST_CASE("group-dp agrees with ball-mitm") {
  const auto& s = small52();
  const auto a = spectra::group_dp_moments(s.g, 8, all_columns(s.g));
  const auto b = spectra::ball_mitm_moments(*s.bar.params.pgl, s.bar.projs(), 8, 1ull << 28);
  CHECK(a == b);
  CHECK(a[2] == s.g.r());
  CHECK_THROWS_AS(spectra::ball_mitm_moments(*s.bar.params.pgl, s.bar.projs(), 8, 1000), ResourceError);
}

TEST_CASE("dense spectrum against moments") {
  const auto& s = small52();
  const auto sp = spectra::dense_spectrum(s.g);
  CHECK(sp.n == s.g.n());
  CHECK(std::abs(sp.values.front() - static_cast<double>(s.g.r())) < 1e-9);
  const auto N = spectra::group_dp_moments(s.g, 4, all_columns(s.g));
  for (std::uint32_t k = 0; k <= 4; ++k) {
    const double exact = static_cast<double>(N[k]) * static_cast<double>(s.g.n());
    CHECK(std::abs(spectra::power_sum(sp, k) - exact) <= 1e-6 * std::max(1.0, exact));
  }
  CHECK_THROWS_AS(spectra::dense_spectrum(s.g, std::nullopt, 10), ResourceError);
}

TEST_CASE("circulant spectrum matches the closed form") {
  const std::vector<std::uint32_t> S = {1, 3, 61, 63};
  const auto sp = spectra::dense_spectrum(suites::circulant_graph(64, S));
  const auto oracle = suites::circulant_spectrum_oracle(64, S);
  for (std::size_t i = 0; i < 64; ++i) CHECK(sp.values[i] == doctest::Approx(oracle[i]).epsilon(1e-9));
}

TEST_CASE("file round trips and comparisons") {
  const auto& s = small52();
  const auto m = spectra::walk_moments(s.bar, 6, spectra::Strategy::GroupDp);
  std::stringstream ms;
  spectra::write_moments(ms, m);
  const auto m2 = spectra::read_moments(ms);
  CHECK(m2 == m);
  CHECK(spectra::compare_moments(m, m2).verdict == "equal");
  auto m3 = m2;
  m3.N[4] += 1;
  const auto diff = spectra::compare_moments(m, m3);
  CHECK(diff.verdict == "different");
  CHECK(diff.to_text().find("first_difference=4") != std::string::npos);

  const auto sp = spectra::dense_spectrum(s.g);
  std::stringstream ss;
  spectra::write_spectrum(ss, sp);
  CHECK(spectra::compare_spectra(sp, spectra::read_spectrum(ss)).verdict == "equal");

  std::istringstream bad("version=1 genset=zz colors=all K=1\n0 1\n1 0\n");
  CHECK_THROWS_AS(spectra::read_moments(bad), FormatError);
  std::istringstream truncated("version=1 genset=00 colors=all K=3\n0 1\n1 0\n");
  CHECK_THROWS_AS(spectra::read_moments(truncated), FormatError);
}

TEST_CASE("WL and isomorphism search") {
  const auto a = suites::circulant_graph(64, {1, 63, 2, 62});
  const auto b = suites::circulant_graph(64, {1, 63, 3, 61});
  CHECK(spectra::compare_wl(a, a).verdict == "possibly-isomorphic");
  CHECK(spectra::compare_wl(a, b).verdict == "possibly-isomorphic");
  CHECK(spectra::compare_iso(a, b).verdict == "non-isomorphic");
  // x -> 3x is a unit multiplier on Z/64, so these two are isomorphic.
  const auto c = suites::circulant_graph(64, {1, 63, 2, 62});
  const auto d = suites::circulant_graph(64, {3, 61, 6, 58});
  const auto r = spectra::find_isomorphism(c, d);
  CHECK(r.verdict == spectra::IsoVerdict::Isomorphic);
  CHECK(spectra::is_isomorphism(c, d, r.witness));
  spectra::IsoOptions tiny;
  tiny.node_limit = 1;
  CHECK(spectra::find_isomorphism(a, a, tiny).verdict == spectra::IsoVerdict::Timeout);
}
