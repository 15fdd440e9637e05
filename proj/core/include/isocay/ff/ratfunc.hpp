#pragma once

#include <climits>
#include <utility>
#include <vector>

#include "isocay/common/errors.hpp"
#include "isocay/ff/poly.hpp"

namespace isocay::ff {

/// Valuation of the zero function.
inline constexpr int kInfiniteValuation = INT_MAX;

/// A place of F(t): the t-adic place, the place at infinity, or the place
/// of a monic irreducible polynomial.
template <FiniteField F>
struct Place {
  enum class Kind { Zero, Infinity, Finite };
  Kind kind = Kind::Zero;
  std::vector<typename F::Elem> poly;  // Finite only: monic irreducible, low-to-high

  static Place zero() { return {Kind::Zero, {}}; }
  static Place infinity() { return {Kind::Infinity, {}}; }
  static Place finite(const Poly<F>& p) {
    if (p.degree() < 1 || p.lead() != 1) throw PreconditionError("finite place needs a monic polynomial of degree >= 1");
    if (!is_irreducible(p)) throw PreconditionError("finite place needs an irreducible polynomial");
    return {Kind::Finite, p.coeffs()};
  }
  int degree() const { return kind == Kind::Finite ? static_cast<int>(poly.size()) - 1 : 1; }
};

/// Reduced fraction num/den over a finite field: den monic, gcd 1, zero is 0/1.
template <FiniteField F>
class RatFunc {
 public:
  using Elem = typename F::Elem;
  using P = Poly<F>;

  explicit RatFunc(const F* field) : num_(field), den_(P::constant(field, 1)) {}
  RatFunc(P num) : num_(std::move(num)), den_(P::constant(num_.field(), 1)) {}
  RatFunc(P num, P den) : num_(std::move(num)), den_(std::move(den)) { reduce(); }

  static RatFunc constant(const F* field, Elem c) { return RatFunc(P::constant(field, c)); }
  static RatFunc t(const F* field) { return RatFunc(P::t(field)); }
  /// Trusts that (num, den) is already canonical.
  static RatFunc from_canonical(P num, P den) {
    RatFunc r(num.field());
    r.num_ = std::move(num);
    r.den_ = std::move(den);
    return r;
  }

  const F* field() const { return num_.field(); }
  const P& num() const { return num_; }
  const P& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_poly() const { return den_.is_one(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.is_poly() && b.is_poly()) return RatFunc(a.num_ + b.num_);
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
  RatFunc operator-() const { return from_canonical(-num_, den_); }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc(a.field());
    if (a.is_poly() && b.is_poly()) return RatFunc(a.num_ * b.num_);
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  RatFunc inverse() const {
    if (is_zero()) throw ArithmeticError("inverse of the zero rational function");
    return RatFunc(den_, num_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) { return a * b.inverse(); }
  RatFunc scaled(Elem c) const {
    if (c == 0) return RatFunc(field());
    return from_canonical(num_.scaled(c), den_);
  }
  RatFunc pow(long long e) const {
    if (e < 0) return inverse().pow(-e);
    RatFunc r = constant(field(), 1), b = *this;
    while (e > 0) {
      if (e & 1) r = r * b;
      b = b * b;
      e >>= 1;
    }
    return r;
  }

  /// Value at x; a pole is an ArithmeticError.
  Elem eval(Elem x) const {
    const Elem d = den_.eval(x);
    if (d == 0) throw ArithmeticError("rational function has a pole at the evaluation point");
    return field()->div(num_.eval(x), d);
  }

  /// Applies a field automorphism to every coefficient; the canonical form
  /// is preserved because automorphisms fix 1 and commute with gcd.
  template <class Fn>
  RatFunc map_automorphism(Fn&& fn) const {
    return from_canonical(num_.map(fn), den_.map(fn));
  }

  /// Writes this = t^v * (c + O(t)) and returns (v, c); c = 0 for zero.
  std::pair<int, Elem> leading_at_zero() const {
    if (is_zero()) return {kInfiniteValuation, 0};
    const int vn = num_.low_order();
    const int vd = den_.low_order();
    return {vn - vd, field()->div(num_[vn], den_[vd])};
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

 private:
  void reduce() {
    if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
    if (num_.is_zero()) {
      den_ = P::constant(field(), 1);
      return;
    }
    if (!den_.is_constant()) {
      P g = gcd(num_, den_);
      if (!g.is_one()) {
        num_ = num_ / g;
        den_ = den_ / g;
      }
    }
    const Elem li = field()->inv(den_.lead());
    if (li != 1) {
      num_ = num_.scaled(li);
      den_ = den_.scaled(li);
    }
  }

  P num_;
  P den_;
};

/// Multiplicity of the irreducible p in the nonzero polynomial f.
template <FiniteField F>
int multiplicity(Poly<F> f, const Poly<F>& p) {
  int m = 0;
  Poly<F> q(f.field()), r(f.field());
  while (!f.is_zero()) {
    Poly<F>::divmod(f, p, q, r);
    if (!r.is_zero()) break;
    f = std::move(q);
    ++m;
  }
  return m;
}

/// Order of vanishing at the place; kInfiniteValuation for zero.
template <FiniteField F>
int valuation(const RatFunc<F>& a, const Place<F>& v) {
  if (a.is_zero()) return kInfiniteValuation;
  switch (v.kind) {
    case Place<F>::Kind::Zero:
      return a.num().low_order() - a.den().low_order();
    case Place<F>::Kind::Infinity:
      return a.den().degree() - a.num().degree();
    case Place<F>::Kind::Finite: {
      const Poly<F> p(a.field(), v.poly);
      return multiplicity(a.num(), p) - multiplicity(a.den(), p);
    }
  }
  return 0;
}

/// Monic irreducible factors (without multiplicity) by trial division over
/// monic polynomials of increasing degree. Meant for small inputs.
template <FiniteField F>
std::vector<Poly<F>> irreducible_factors(Poly<F> f) {
  std::vector<Poly<F>> out;
  if (f.degree() < 1) return out;
  const F* field = f.field();
  f = f.monic();
  const std::uint64_t q = field->order();
  for (int k = 1; f.degree() >= 1; ++k) {
    if (2 * k > f.degree()) {
      out.push_back(f);
      break;
    }
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) count *= q;
    for (std::uint64_t code = 0; code < count && f.degree() >= 1; ++code) {
      std::vector<typename F::Elem> c(k + 1, 0);
      std::uint64_t x = code;
      for (int i = 0; i < k; ++i) {
        c[i] = static_cast<typename F::Elem>(x % q);
        x /= q;
      }
      c[k] = 1;
      const Poly<F> p(field, std::move(c));
      if (multiplicity(f, p) > 0) {
        out.push_back(p);
        while (multiplicity(f, p) > 0) f = f / p;
      }
    }
  }
  return out;
}

}  // namespace isocay::ff
