#include <doctest.h>

#include <map>
#include <sstream>

#include "isocay/cayley/cayley_graph.hpp"
#include "isocay/common/errors.hpp"
#include "isocay/ff/fq_matrix.hpp"
#include "isocay/forge/genset.hpp"
#include "isocay/suites/oracles.hpp"

using namespace isocay;

namespace {
const forge::GenSet& bar(std::uint64_t q, std::uint32_t d) {
  static std::map<std::pair<std::uint64_t, std::uint32_t>, forge::GenSet> cache;
  auto it = cache.find({q, d});
  if (it == cache.end())
    it = cache.emplace(std::make_pair(q, d), forge::symmetrize(forge::build_omega(forge::GenParams::make(q, d, 1))))
             .first;
  return it->second;
}
}  // namespace

TEST_CASE("projective canonical form") {
  const auto F = ff::Field::prime(5);
  const auto ctx = cayley::PglContext::create(F, 3);
  const auto m = ff::FqMatrix::from_rows(F, {{0, 2, 1}, {3, 1, 0}, {1, 1, 1}});
  const auto a = ctx->from_matrix(m), b = ctx->from_matrix(m.scaled(3));
  CHECK(a == b);
  CHECK(ctx->key(a) == ctx->key(b));
  CHECK(ctx->decode(ctx->key(a)) == a);
  CHECK(ctx->is_identity(ctx->mul(a, ctx->inverse(a))));
  CHECK(ctx->is_identity(ctx->from_matrix(ff::FqMatrix::identity(F, 3).scaled(4))));
  CHECK_THROWS_AS(ctx->from_matrix(ff::FqMatrix(F, 3)), ArithmeticError);
}

TEST_CASE("closure of a small cyclic group") {
  // regular_rep of a generator of F_9^x over F_3: the projective image is
  // cyclic of order (9 - 1) / (3 - 1) = 4.
  const auto E = ff::ExtField::standard(ff::Field::prime(3), 2);
  const auto ctx = cayley::PglContext::create(E->base_ptr(), 2);
  const auto u = ff::mult_generator(*E);
  const auto g = ctx->from_matrix(ff::regular_rep(*E, u));
  const auto graph = cayley::bfs_build(*ctx, {g}, {1}, 100);
  CHECK(graph.n() == 4);
  CHECK(graph.connected);
  CHECK_FALSE(graph.symmetric);
}

TEST_CASE("Cayley graph of Omega-bar for (5, 3)") {
  const auto& b = bar(5, 3);
  const auto g = cayley::bfs_build(b, 1'000'000);
  CHECK(g.n() == 372000);
  CHECK(g.r() == 62);
  CHECK(g.symmetric);
  CHECK(g.connected);
  CHECK(cayley::is_regular_symmetric(g));
  CHECK_THROWS_AS(cayley::bfs_build(b, 1000), ResourceError);
}

TEST_CASE("colored subgraphs") {
  const auto& b = bar(5, 2);
  const auto g = cayley::bfs_build(b, 100'000);
  CHECK(cayley::colored_subgraph(g, {1}) == g);
  CHECK_THROWS_AS(cayley::colored_subgraph(g, {}), PreconditionError);
  CHECK_THROWS_AS(cayley::colored_subgraph(g, {7}), PreconditionError);
}

TEST_CASE("clique cells") {
  const auto& b = bar(5, 2);
  const auto g = cayley::bfs_build(b, 100'000);
  const auto c = cayley::clique_cells(g, 2);
  CHECK(c.counts[0] == g.n());
  CHECK(c.counts[1] * 2 == g.n() * g.r());
  CHECK(c.counts[2] == suites::triangle_oracle(g));
  CHECK_THROWS_AS(cayley::clique_cells(g, 3), PreconditionError);
  CHECK_THROWS_AS(cayley::clique_cells(g, 2, 10), ResourceError);
}

TEST_CASE("graph files") {
  const auto g = cayley::bfs_build(bar(7, 2), 100'000);
  std::stringstream t, bin;
  cayley::export_text(t, g);
  cayley::export_binary(bin, g);
  CHECK(cayley::import_text(t) == g);
  CHECK(cayley::import_binary(bin) == g);

  std::string bytes = cayley::to_binary_string(g);
  bytes[bytes.size() / 2] ^= 0x40;
  std::istringstream corrupt(bytes);
  CHECK_THROWS_AS(cayley::import_binary(corrupt), FormatError);

  std::stringstream t2;
  cayley::export_text(t2, g);
  std::string text = t2.str();
  text.erase(text.rfind('e'));  // drop the last edge line
  std::istringstream cut(text);
  CHECK_THROWS_AS(cayley::import_text(cut), FormatError);
}
