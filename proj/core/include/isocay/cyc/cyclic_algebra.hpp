#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "isocay/ff/field.hpp"
#include "isocay/ff/fq_matrix.hpp"
#include "isocay/ff/ratfunc.hpp"

namespace isocay::cyc {

using EPoly = ff::Poly<ff::ExtField>;
using ERat = ff::RatFunc<ff::ExtField>;
using BPoly = ff::Poly<ff::Field>;
using BRat = ff::RatFunc<ff::Field>;

/// The cyclic algebra over F_{q^d}(t) generated by z with
/// z a = sigma(a) z and z^d = 1 + t, sigma = Frobenius^s.
class CycAlg {
 public:
  static std::shared_ptr<const CycAlg> create(std::shared_ptr<const ff::ExtField> E, std::uint32_t s);

  const ff::ExtField& ext() const { return *E_; }
  const std::shared_ptr<const ff::ExtField>& ext_ptr() const { return E_; }
  const ff::Field& base() const { return E_->base(); }
  std::uint32_t degree() const { return E_->degree(); }
  std::uint32_t s() const { return s_; }

  /// sigma^i applied coefficient-wise (t is fixed).
  ERat sigma(const ERat& a, std::int64_t i) const;
  ff::ExtField::Elem sigma(ff::ExtField::Elem a, std::int64_t i) const;

  const ERat& one_plus_t() const { return one_plus_t_; }
  ERat zero_rat() const { return ERat(E_.get()); }
  ERat const_rat(ff::ExtField::Elem c) const { return ERat::constant(E_.get(), c); }

 private:
  CycAlg(std::shared_ptr<const ff::ExtField> E, std::uint32_t s);

  std::shared_ptr<const ff::ExtField> E_;
  std::uint32_t s_;
  ERat one_plus_t_;
};

/// sum_j c_j z^j with c_j in F_{q^d}(t).
class CycElem {
 public:
  explicit CycElem(std::shared_ptr<const CycAlg> alg);
  CycElem(std::shared_ptr<const CycAlg> alg, std::vector<ERat> coeffs);

  static CycElem one(std::shared_ptr<const CycAlg> alg);
  static CycElem z(std::shared_ptr<const CycAlg> alg);
  /// z^{-1} = (1+t)^{-1} z^{d-1}.
  static CycElem z_inverse(std::shared_ptr<const CycAlg> alg);
  static CycElem scalar(std::shared_ptr<const CycAlg> alg, ERat c);
  static CycElem ext(std::shared_ptr<const CycAlg> alg, ff::ExtField::Elem c);

  const std::shared_ptr<const CycAlg>& alg() const { return alg_; }
  const std::vector<ERat>& coeffs() const { return c_; }
  const ERat& coeff(std::size_t j) const { return c_[j]; }
  bool is_zero() const;
  bool is_one() const;
  /// All coefficients polynomial in t.
  bool is_integral() const;
  /// c_1 = ... = c_{d-1} = 0 and c_0 a nonzero element of F_q(t).
  bool is_central_scalar() const;

  friend CycElem operator+(const CycElem& a, const CycElem& b);
  friend CycElem operator-(const CycElem& a, const CycElem& b);
  friend CycElem operator*(const CycElem& a, const CycElem& b);
  CycElem scaled(const ERat& c) const;
  CycElem pow(std::int64_t e) const;
  CycElem inverse() const;

  friend bool operator==(const CycElem& a, const CycElem& b) { return a.c_ == b.c_; }

 private:
  std::shared_ptr<const CycAlg> alg_;
  std::vector<ERat> c_;
};

inline CycElem cyc_mul(const CycElem& a, const CycElem& b) { return a * b; }
/// Solves x a = 1; ArithmeticError for a = 0.
inline CycElem cyc_inv(const CycElem& a) { return a.inverse(); }
/// u a u^{-1} for u in F_{q^d}^x.
CycElem conj_by_unit(const CycElem& a, ff::ExtField::Elem u);
/// a = lambda b for some lambda in F_q(t)^x.
bool projectively_equal(const CycElem& a, const CycElem& b);

/// Element of F_q(t) represented over F_{q^d}; VerificationError if some
/// coefficient lies outside F_q.
BRat descend(const ERat& a, const ff::Field& base);
ERat ascend(const BRat& a, const ff::ExtField& E);

/// d x d matrix over F_{q^d}(t).
class GlobalMat {
 public:
  GlobalMat(const ff::ExtField* E, std::size_t n);
  static GlobalMat identity(const ff::ExtField* E, std::size_t n);

  std::size_t size() const { return n_; }
  const ff::ExtField* field() const { return E_; }
  const ERat& at(std::size_t r, std::size_t c) const { return a_[r * n_ + c]; }
  ERat& at(std::size_t r, std::size_t c) { return a_[r * n_ + c]; }
  bool normalized() const { return normalized_; }

  friend GlobalMat operator*(const GlobalMat& a, const GlobalMat& b);
  friend GlobalMat operator+(const GlobalMat& a, const GlobalMat& b);
  GlobalMat scaled(const ERat& c) const;
  ERat det() const;
  /// Divides by the first nonzero entry in row-major order.
  GlobalMat normalize() const;
  bool is_zero() const;

  friend bool operator==(const GlobalMat& a, const GlobalMat& b) { return a.n_ == b.n_ && a.a_ == b.a_; }

 private:
  const ff::ExtField* E_;
  std::size_t n_;
  std::vector<ERat> a_;
  bool normalized_ = false;
};

/// Scalars of PGL are F_q(t)^x: equal canonical forms and a ratio that
/// descends to F_q(t).
bool projectively_equal(const GlobalMat& a, const GlobalMat& b);

/// c -> diag(c, sigma^{-1} c, ..., sigma^{-(d-1)} c), z -> ones at (j+1, j)
/// and 1+t at (0, d-1).
GlobalMat to_matrix(const CycElem& a);
/// det(to_matrix(a)), checked to lie in F_q(t).
BRat reduced_norm(const CycElem& a);

/// gamma = (1+alpha)^d - 1.
ff::Field::Elem gamma_of(const ff::Field& F, ff::Field::Elem alpha, std::uint32_t d);
/// Checks alpha, gamma not in {0, -1}.
void check_alpha(const ff::Field& F, ff::Field::Elem alpha, std::uint32_t d);

/// t -> gamma, c -> regular_rep(c(gamma)), z -> (1+alpha) frobenius_matrix(E, s).
ff::FqMatrix specialize(const CycElem& a, ff::Field::Elem alpha);

}  // namespace isocay::cyc
