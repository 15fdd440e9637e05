#include <doctest.h>

#include <sstream>

#include "isocay/common/errors.hpp"
#include "isocay/cyc/cyclic_algebra.hpp"
#include "isocay/cyc/serialize.hpp"
#include "isocay/ff/fq_matrix.hpp"
#include "isocay/suites/fixtures.hpp"

using namespace isocay;
namespace fx = isocay::suites::fixtures;

namespace {
std::shared_ptr<const ff::ExtField> f243() {
  return ff::ExtField::create(ff::Field::prime(3), 5, {2, 2, 0, 0, 0, 1});
}
cyc::BRat t_over_1_plus_t(const ff::Field& F) {
  return cyc::BRat(cyc::BPoly(&F, {0, 1}), cyc::BPoly(&F, {1, 1}));
}
}  // namespace

TEST_CASE("defining relations") {
  const auto E = f243();
  const auto alg = cyc::CycAlg::create(E, 1);
  const auto z = cyc::CycElem::z(alg);
  const auto a = cyc::CycElem::ext(alg, E->tau());
  CHECK(z * a == cyc::CycElem::ext(alg, alg->sigma(E->tau(), 1)) * z);
  CHECK(z.pow(5) == cyc::CycElem::scalar(alg, alg->one_plus_t()));
  const auto b = cyc::CycElem::one(alg) - cyc::CycElem::z_inverse(alg);
  CHECK((cyc::cyc_inv(b) * b).is_one());
  CHECK((z * cyc::CycElem::z_inverse(alg)).is_one());
}

TEST_CASE("reduced norms") {
  const auto E = f243();
  const auto alg = cyc::CycAlg::create(E, 2);
  const auto& F = E->base();
  CHECK(cyc::reduced_norm(cyc::CycElem::one(alg)).is_one());
  const auto b = cyc::CycElem::one(alg) - cyc::CycElem::z_inverse(alg);
  CHECK(cyc::reduced_norm(b) == t_over_1_plus_t(F));
  // (-1)^(d-1) (1+t) with d = 5.
  CHECK(cyc::reduced_norm(cyc::CycElem::z(alg)) == cyc::BRat(cyc::BPoly(&F, {1, 1})));
  const auto u = ff::mult_generator(*E);
  CHECK(cyc::reduced_norm(cyc::conj_by_unit(b, u)) == t_over_1_plus_t(F));
}

TEST_CASE("conjugation by a unit") {
  const auto E = f243();
  const auto alg = cyc::CycAlg::create(E, 1);
  const auto z = cyc::CycElem::z(alg);
  const auto u = E->tau();
  CHECK(cyc::conj_by_unit(z, E->one()) == z);
  CHECK(cyc::conj_by_unit(z, u) == cyc::CycElem::ext(alg, E->div(u, alg->sigma(u, 1))) * z);
}

TEST_CASE("to_matrix of z is the companion-style matrix") {
  const auto E = f243();
  const auto alg = cyc::CycAlg::create(E, 1);
  const auto m = cyc::to_matrix(cyc::CycElem::z(alg));
  for (std::size_t r = 0; r < 5; ++r)
    for (std::size_t c = 0; c < 5; ++c) {
      if (r == c + 1) CHECK(m.at(r, c).is_one());
      else if (r == 0 && c == 4) CHECK(m.at(r, c) == alg->one_plus_t());
      else CHECK(m.at(r, c).is_zero());
    }
  CHECK(cyc::to_matrix(cyc::CycElem::one(alg)) == cyc::GlobalMat::identity(E.get(), 5));
}

TEST_CASE("specialization gives the printed generators") {
  const auto E = f243();
  const auto F = E->base_ptr();
  for (std::uint32_t s : {1u, 2u}) {
    const auto alg = cyc::CycAlg::create(E, s);
    const auto b = cyc::CycElem::one(alg) - cyc::CycElem::z_inverse(alg);
    const auto expected = ff::FqMatrix::from_rows(F, s == 1 ? fx::kB1 : fx::kB2);
    CHECK(cyc::specialize(b, 1) == expected);
    CHECK(cyc::specialize(cyc::CycElem::one(alg), 1).is_identity());
  }
}

TEST_CASE("alpha admissibility") {
  const auto F3 = ff::Field::prime(3);
  CHECK(cyc::gamma_of(*F3, 1, 5) == 1);
  CHECK_NOTHROW(cyc::check_alpha(*F3, 1, 5));
  const auto F5 = ff::Field::prime(5);
  CHECK(cyc::gamma_of(*F5, F5->from_int(-2), 3) == F5->from_int(-2));
}

TEST_CASE("algebra element text round trip") {
  const auto E = f243();
  const auto alg = cyc::CycAlg::create(E, 2);
  const auto x = cyc::conj_by_unit(cyc::CycElem::one(alg) - cyc::CycElem::z_inverse(alg), E->tau());
  std::stringstream s;
  cyc::write_cyc_elem(s, x);
  const auto y = cyc::read_cyc_elem(s);
  std::stringstream a, b;
  cyc::write_cyc_elem(a, x);
  cyc::write_cyc_elem(b, y);
  CHECK(a.str() == b.str());
  std::istringstream bad("garbage\n");
  CHECK_THROWS_AS(cyc::read_cyc_elem(bad), FormatError);
}
