#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "isocay/common/errors.hpp"
#include "isocay/ff/field.hpp"

namespace isocay::ff {

/// Dense univariate polynomial in t over a finite field, coefficients
/// low-to-high with no trailing zeros. The field is observed, not owned:
/// whoever creates a Poly keeps its field alive.
template <FiniteField F>
class Poly {
 public:
  using Elem = typename F::Elem;

  explicit Poly(const F* field) : field_(field) {}
  Poly(const F* field, std::vector<Elem> coeffs) : field_(field), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const F* field, Elem c) { return Poly(field, {c}); }
  static Poly monomial(const F* field, Elem c, std::size_t k) {
    std::vector<Elem> v(k + 1, 0);
    v[k] = c;
    return Poly(field, std::move(v));
  }
  static Poly t(const F* field) { return monomial(field, 1, 1); }

  const F* field() const { return field_; }
  const std::vector<Elem>& coeffs() const { return c_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  Elem lead() const { return c_.empty() ? 0 : c_.back(); }
  Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Elem{0}; }
  /// Multiplicity of t as a factor (order of vanishing at 0); zero for the zero poly.
  int low_order() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (c_[i] != 0) return static_cast<int>(i);
    return 0;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    check(a, b);
    const F& f = *a.field_;
    std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.add(a[i], b[i]);
    return Poly(a.field_, std::move(r));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    check(a, b);
    const F& f = *a.field_;
    std::vector<Elem> r(std::max(a.c_.size(), b.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = f.sub(a[i], b[i]);
    return Poly(a.field_, std::move(r));
  }
  Poly operator-() const {
    std::vector<Elem> r(c_);
    for (auto& x : r) x = field_->neg(x);
    return Poly(field_, std::move(r));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    check(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.field_);
    const F& f = *a.field_;
    std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = f.add(r[i + j], f.mul(a.c_[i], b.c_[j]));
    }
    return Poly(a.field_, std::move(r));
  }
  Poly scaled(Elem s) const {
    if (s == 0) return Poly(field_);
    std::vector<Elem> r(c_);
    for (auto& x : r) x = field_->mul(x, s);
    return Poly(field_, std::move(r));
  }
  Poly monic() const {
    if (is_zero() || lead() == 1) return *this;
    return scaled(field_->inv(lead()));
  }
  /// Multiplication by t^k.
  Poly shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Elem> r(k, 0);
    r.insert(r.end(), c_.begin(), c_.end());
    return Poly(field_, std::move(r));
  }

  /// Euclidean division a = q*b + r with deg r < deg b.
  static void divmod(const Poly& a, const Poly& b, Poly& quot, Poly& rem) {
    check(a, b);
    if (b.is_zero()) throw ArithmeticError("polynomial division by zero");
    const F& f = *a.field_;
    std::vector<Elem> r(a.c_);
    const std::size_t db = b.c_.size() - 1;
    if (r.size() <= db) {
      quot = Poly(a.field_);
      rem = a;
      return;
    }
    std::vector<Elem> qv(r.size() - db, 0);
    const Elem lead_inv = f.inv(b.lead());
    for (std::size_t k = r.size(); k-- > db;) {
      const Elem c = f.mul(r[k], lead_inv);
      if (c == 0) continue;
      qv[k - db] = c;
      for (std::size_t i = 0; i <= db; ++i) r[k - db + i] = f.sub(r[k - db + i], f.mul(c, b.c_[i]));
    }
    r.resize(db);
    quot = Poly(a.field_, std::move(qv));
    rem = Poly(a.field_, std::move(r));
  }
  friend Poly operator/(const Poly& a, const Poly& b) {
    Poly q(a.field_), r(a.field_);
    divmod(a, b, q, r);
    return q;
  }
  friend Poly operator%(const Poly& a, const Poly& b) {
    Poly q(a.field_), r(a.field_);
    divmod(a, b, q, r);
    return r;
  }

  Elem eval(Elem x) const {
    const F& f = *field_;
    Elem acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = f.add(f.mul(acc, x), c_[i]);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<Elem> r(c_.size() - 1, 0);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      Elem acc = 0;
      for (std::size_t k = 0; k < i; ++k) acc = field_->add(acc, c_[i]);
      r[i - 1] = acc;
    }
    return Poly(field_, std::move(r));
  }

  /// Applies a coefficient map (e.g. a field automorphism).
  template <class Fn>
  Poly map(Fn&& fn) const {
    std::vector<Elem> r(c_);
    for (auto& x : r) x = fn(x);
    return Poly(field_, std::move(r));
  }

  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

 private:
  static void check(const Poly& a, const Poly& b) {
    if (a.field_ != b.field_ && !a.field_->same_as(*b.field_))
      throw PreconditionError("polynomial arithmetic across different fields");
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  const F* field_;
  std::vector<Elem> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
template <FiniteField F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <FiniteField F>
Poly<F> powmod(Poly<F> base, std::uint64_t e, const Poly<F>& m) {
  Poly<F> r = Poly<F>::constant(base.field(), 1) % m;
  base = base % m;
  while (e > 0) {
    if (e & 1) r = (r * base) % m;
    base = (base * base) % m;
    e >>= 1;
  }
  return r;
}

/// Irreducibility over the coefficient field: no common factor with
/// t^{Q^i} - t for i <= deg/2 (Q = field order).
template <FiniteField F>
bool is_irreducible(const Poly<F>& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const F* field = f.field();
  const Poly<F> m = f.monic();
  const Poly<F> t = Poly<F>::t(field);
  Poly<F> h = t;
  for (int i = 1; i <= n / 2; ++i) {
    h = powmod(h, field->order(), m);
    if (gcd(h - t, m).degree() != 0) return false;
  }
  return true;
}

}  // namespace isocay::ff
