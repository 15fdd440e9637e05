#pragma once

#include <concepts>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "isocay/common/errors.hpp"

namespace isocay::ff {

/// Arithmetic interface shared by Field and ExtField. Elements are integer
/// codes; zero is code 0 and one is code 1 in both.
template <class F>
concept FiniteField = requires(const F& f, typename F::Elem a, typename F::Elem b) {
  { f.add(a, b) } -> std::same_as<typename F::Elem>;
  { f.sub(a, b) } -> std::same_as<typename F::Elem>;
  { f.neg(a) } -> std::same_as<typename F::Elem>;
  { f.mul(a, b) } -> std::same_as<typename F::Elem>;
  { f.inv(a) } -> std::same_as<typename F::Elem>;
  { f.order() } -> std::convertible_to<std::uint64_t>;
};

/// F_q = F_p[x]/(m(x)) with q = p^f. An element's code is sum c_i p^i over
/// its coefficient vector (c_0..c_{f-1}) in the basis 1, x, ..., x^{f-1}.
///
/// Multiplication goes through exp/log tables, so q is capped at 2^16.
class Field {
 public:
  using Elem = std::uint32_t;
  static constexpr std::uint64_t kMaxOrder = 1u << 16;

  /// Validates that p is prime, the modulus is monic of degree f and
  /// irreducible over F_p (trial factoring).
  static std::shared_ptr<const Field> create(std::uint32_t p, std::uint32_t f,
                                             std::vector<std::uint32_t> modulus);
  static std::shared_ptr<const Field> prime(std::uint32_t p);
  /// Field of order q with the lexicographically first irreducible modulus
  /// (the modulus x when q is prime).
  static std::shared_ptr<const Field> of_order(std::uint64_t q);
  /// Parses `p=<int> f=<int> mod=<c0,...,cf>`.
  static std::shared_ptr<const Field> parse(std::string_view descriptor);

  std::string descriptor() const;

  std::uint32_t characteristic() const { return p_; }
  std::uint32_t degree() const { return f_; }
  std::uint64_t order() const { return q_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const { return neg_[a]; }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t e) const;

  /// Image of an integer under Z -> F_p -> F_q.
  Elem from_int(std::int64_t v) const;

  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(std::span<const std::uint32_t> digits) const;

  /// Fixed generator of the cyclic group F_q^x, and discrete log / exp with
  /// respect to it.
  Elem primitive() const { return primitive_; }
  std::uint32_t log(Elem a) const;
  Elem exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }

  /// Elements print as their F_p coefficient tuple joined by `sep`.
  std::string format(Elem a, char sep = ',') const;
  Elem parse_elem(std::string_view text, char sep = ',') const;

  bool same_as(const Field& other) const;

 private:
  Field(std::uint32_t p, std::uint32_t f, std::vector<std::uint32_t> modulus);

  std::uint32_t p_;
  std::uint32_t f_;
  std::uint64_t q_;
  std::vector<std::uint32_t> modulus_;
  Elem primitive_ = 0;
  std::vector<Elem> exp_;        // length 2(q-1) so log sums need no reduction
  std::vector<std::uint32_t> log_;
  std::vector<Elem> neg_;
  std::vector<Elem> add_table_;  // q*q entries when q <= 256
};

/// F_{q^d} = F_q[tau]/(M(tau)) over a base Field. Codes are sum c_i q^i over
/// the coordinate vector in the ordered basis 1, tau, ..., tau^{d-1}.
///
/// For q^d <= 2^21 multiplication uses exp/log tables; larger fields fall
/// back to polynomial arithmetic modulo M.
class ExtField {
 public:
  using Elem = std::uint64_t;
  using BaseElem = Field::Elem;

  static std::shared_ptr<const ExtField> create(std::shared_ptr<const Field> base, std::uint32_t d,
                                                std::vector<BaseElem> modulus);
  /// Default modulus: lambda^5 - lambda - 1 for (q, d) = (3, 5), otherwise
  /// the first monic irreducible in lexicographic order of the code
  /// sum c_i q^i of (c_0, ..., c_{d-1}).
  static std::shared_ptr<const ExtField> standard(std::shared_ptr<const Field> base,
                                                  std::uint32_t d);
  /// Parses a Field descriptor followed by ` d=<int> emod=<...>`.
  static std::shared_ptr<const ExtField> parse(std::string_view descriptor);

  std::string descriptor() const;

  const Field& base() const { return *base_; }
  const std::shared_ptr<const Field>& base_ptr() const { return base_; }
  std::uint32_t degree() const { return d_; }
  std::uint64_t order() const { return order_; }
  const std::vector<BaseElem>& modulus() const { return modulus_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  bool is_zero(Elem a) const { return a == 0; }
  /// The distinguished root tau of the modulus.
  Elem tau() const { return d_ == 1 ? from_digits(std::vector<BaseElem>{root_of_linear()}) : q_; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t e) const;
  /// a^{q^i}; i is taken modulo d, negative i allowed.
  Elem frobenius(Elem a, std::int64_t i) const;

  Elem embed(BaseElem c) const { return c; }
  bool in_base(Elem a) const { return a < q_; }
  BaseElem to_base(Elem a) const;

  std::vector<BaseElem> digits(Elem a) const;
  Elem from_digits(std::span<const BaseElem> digits) const;

  /// Elements print as d base elements joined by ',', each base element as
  /// its F_p tuple joined by ':'.
  std::string format(Elem a) const;
  Elem parse_elem(std::string_view text) const;

  bool same_as(const ExtField& other) const;

 private:
  ExtField(std::shared_ptr<const Field> base, std::uint32_t d, std::vector<BaseElem> modulus);
  Elem mul_slow(Elem a, Elem b) const;
  BaseElem root_of_linear() const;

  std::shared_ptr<const Field> base_;
  std::uint32_t d_;
  std::uint64_t q_;
  std::uint64_t order_;
  std::vector<BaseElem> modulus_;
  bool tabled_ = false;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

/// Value type carrying its field; arithmetic between elements of different
/// fields throws PreconditionError.
template <FiniteField F>
class Element {
 public:
  using Code = typename F::Elem;

  Element(std::shared_ptr<const F> field, Code code) : field_(std::move(field)), code_(code) {}

  const std::shared_ptr<const F>& field() const { return field_; }
  Code code() const { return code_; }
  bool is_zero() const { return code_ == 0; }

  friend Element operator+(const Element& a, const Element& b) {
    check(a, b);
    return {a.field_, a.field_->add(a.code_, b.code_)};
  }
  friend Element operator-(const Element& a, const Element& b) {
    check(a, b);
    return {a.field_, a.field_->sub(a.code_, b.code_)};
  }
  friend Element operator*(const Element& a, const Element& b) {
    check(a, b);
    return {a.field_, a.field_->mul(a.code_, b.code_)};
  }
  friend Element operator/(const Element& a, const Element& b) {
    check(a, b);
    return {a.field_, a.field_->div(a.code_, b.code_)};
  }
  Element operator-() const { return {field_, field_->neg(code_)}; }
  Element inverse() const { return {field_, field_->inv(code_)}; }
  Element pow(std::int64_t e) const {
    if (e < 0) return inverse().pow(-e);
    return {field_, field_->pow(code_, static_cast<std::uint64_t>(e))};
  }

  friend bool operator==(const Element& a, const Element& b) {
    return a.code_ == b.code_ && a.field_->same_as(*b.field_);
  }

 private:
  static void check(const Element& a, const Element& b) {
    if (a.field_ != b.field_ && !a.field_->same_as(*b.field_))
      throw PreconditionError("arithmetic between elements of different fields");
  }

  std::shared_ptr<const F> field_;
  Code code_;
};

using FieldElem = Element<Field>;
using ExtFieldElem = Element<ExtField>;

bool is_prime(std::uint64_t n);
/// Distinct prime factors in increasing order.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

}  // namespace isocay::ff
