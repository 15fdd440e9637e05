#include <doctest.h>

#include "isocay/common/errors.hpp"
#include "isocay/ff/field.hpp"
#include "isocay/ff/fq_matrix.hpp"
#include "isocay/ff/qbinomial.hpp"
#include "isocay/ff/ratfunc.hpp"
#include "isocay/suites/fixtures.hpp"
#include "isocay/suites/oracles.hpp"

using namespace isocay;
namespace fx = isocay::suites::fixtures;

namespace {
std::shared_ptr<const ff::ExtField> f243() {
  return ff::ExtField::create(ff::Field::prime(3), 5, {2, 2, 0, 0, 0, 1});
}
}  // namespace

TEST_CASE("prime field arithmetic") {
  const auto F = ff::Field::prime(3);
  CHECK(F->add(2, 2) == 1);
  CHECK(F->mul(2, 2) == 1);
  CHECK(F->from_int(-2) == 1);
  CHECK(F->inv(2) == 2);
  CHECK_THROWS_AS(F->inv(0), ArithmeticError);
}

TEST_CASE("non-prime base field F_9") {
  const auto F = ff::Field::of_order(9);
  CHECK(F->order() == 9);
  CHECK(F->characteristic() == 3);
  for (ff::Field::Elem a = 1; a < 9; ++a) {
    CHECK(F->mul(a, F->inv(a)) == 1);
    CHECK(F->pow(a, 8) == 1);
  }
  CHECK_THROWS_AS(ff::Field::of_order(6), PreconditionError);
}

TEST_CASE("F_243 with t^5 = t + 1") {
  const auto E = f243();
  const auto t = E->tau();
  const std::vector<ff::Field::Elem> t_plus_1 = {1, 1, 0, 0, 0};
  CHECK(E->pow(t, 5) == E->from_digits(t_plus_1));
  CHECK(E->pow(t, fx::kOrderOfT) == E->one());
  CHECK(E->digits(E->pow(t, 11)) == fx::kT11);
  CHECK(E->pow(t, 11) != E->one());
}

TEST_CASE("frobenius_matrix and regular_rep reproduce the printed matrices") {
  const auto E = f243();
  const auto F = ff::Field::prime(3);
  const auto phi1 = ff::FqMatrix::from_rows(F, fx::kPhi1);
  CHECK(ff::frobenius_matrix(*E, 1) == phi1);
  CHECK(ff::frobenius_matrix(*E, 2) == phi1 * phi1);
  CHECK(ff::frobenius_matrix(*E, 0).is_identity());
  const auto theta = ff::FqMatrix::from_rows(F, fx::kTheta);
  CHECK(ff::regular_rep(*E, E->tau()) == theta);
  CHECK(ff::regular_rep(*E, E->one()).is_identity());
  CHECK(ff::regular_rep(*E, E->mul(E->tau(), E->tau())) == theta * theta);
}

TEST_CASE("multiplicative generator of F_{q^d}^x / F_q^x") {
  const auto E = f243();
  const auto u = ff::mult_generator(*E);
  CHECK(ff::generates_quotient(*E, u));
  CHECK(E->in_base(E->pow(u, 121)));
  CHECK_FALSE(E->in_base(E->pow(u, 11)));
}

TEST_CASE("valuations") {
  const auto F = ff::Field::prime(3);
  using R = ff::RatFunc<ff::Field>;
  using P = ff::Poly<ff::Field>;
  const R t = R::t(F.get());
  const P one_plus_t(F.get(), {1, 1});
  const R f = t * R(one_plus_t).inverse();
  CHECK(ff::valuation(t, ff::Place<ff::Field>::zero()) == 1);
  CHECK(ff::valuation(t, ff::Place<ff::Field>::infinity()) == -1);
  CHECK(ff::valuation(f, ff::Place<ff::Field>::zero()) == 1);
  CHECK(ff::valuation(f, ff::Place<ff::Field>::finite(one_plus_t)) == -1);
  CHECK(ff::valuation(R(F.get()), ff::Place<ff::Field>::zero()) == ff::kInfiniteValuation);
}

TEST_CASE("rational function arithmetic reduces") {
  const auto F = ff::Field::prime(5);
  using R = ff::RatFunc<ff::Field>;
  using P = ff::Poly<ff::Field>;
  const P a(F.get(), {1, 1}), b(F.get(), {4, 0, 1});  // 1 + t, t^2 - 1
  const R x(a, b);
  CHECK(x.den() == P(F.get(), {4, 1}));  // (1+t)/(t^2-1) = 1/(t-1)
  CHECK((x * x.inverse()).is_one());
  CHECK_THROWS_AS(R(F.get()).inverse(), ArithmeticError);
}

TEST_CASE("gaussian binomials") {
  CHECK(ff::gaussian_binomial(5, 1, 3) == 121);
  CHECK(ff::gaussian_binomial(5, 2, 3) == 1210);
  CHECK(ff::gaussian_binomial(5, 3, 3) == 1210);
  CHECK(ff::gaussian_binomial(5, 0, 3) == 1);
  CHECK_THROWS_AS(ff::gaussian_binomial(5, 6, 3), PreconditionError);
  CHECK(ff::pgl_order(3, 5) == 372000);
  CHECK(ff::pgl_order(5, 3) == suites::pgl_order_oracle(3, 5));
}

TEST_CASE("matrix inverse and determinant over F_3") {
  const auto F = ff::Field::prime(3);
  const auto b1 = ff::FqMatrix::from_rows(F, fx::kB1);
  CHECK((b1 * b1.inverse()).is_identity());
  CHECK(b1.det() != 0);
  CHECK(b1.pow(-1) == b1.inverse());
}
