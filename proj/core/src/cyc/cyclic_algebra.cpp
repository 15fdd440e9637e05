#include "isocay/cyc/cyclic_algebra.hpp"

#include <numeric>

namespace isocay::cyc {

using ff::ExtField;

CycAlg::CycAlg(std::shared_ptr<const ExtField> E, std::uint32_t s)
    : E_(std::move(E)), s_(s), one_plus_t_(EPoly(E_.get(), {1, 1})) {}

std::shared_ptr<const CycAlg> CycAlg::create(std::shared_ptr<const ExtField> E, std::uint32_t s) {
  if (!E) throw PreconditionError("cyclic algebra needs an extension field");
  const std::uint32_t d = E->degree();
  if (d < 2) throw PreconditionError("cyclic algebra needs d >= 2");
  if (s < 1 || s >= d || std::gcd(s, d) != 1) throw PreconditionError("sigma exponent s must satisfy 1 <= s < d, gcd(s, d) = 1");
  return std::shared_ptr<const CycAlg>(new CycAlg(std::move(E), s));
}

ExtField::Elem CycAlg::sigma(ExtField::Elem a, std::int64_t i) const {
  return E_->frobenius(a, static_cast<std::int64_t>(s_) * i);
}

ERat CycAlg::sigma(const ERat& a, std::int64_t i) const {
  const std::int64_t k = static_cast<std::int64_t>(s_) * i;
  if (k % static_cast<std::int64_t>(degree()) == 0) return a;
  return a.map_automorphism([&](ExtField::Elem c) { return E_->frobenius(c, k); });
}

CycElem::CycElem(std::shared_ptr<const CycAlg> alg)
    : alg_(std::move(alg)), c_(alg_->degree(), alg_->zero_rat()) {}

CycElem::CycElem(std::shared_ptr<const CycAlg> alg, std::vector<ERat> coeffs)
    : alg_(std::move(alg)), c_(std::move(coeffs)) {
  if (c_.size() != alg_->degree()) throw PreconditionError("cyclic algebra element needs exactly d coefficients");
}

CycElem CycElem::one(std::shared_ptr<const CycAlg> alg) { return ext(std::move(alg), 1); }

CycElem CycElem::z(std::shared_ptr<const CycAlg> alg) {
  CycElem r(alg);
  r.c_[1] = alg->const_rat(1);
  return r;
}

CycElem CycElem::z_inverse(std::shared_ptr<const CycAlg> alg) {
  CycElem r(alg);
  r.c_[alg->degree() - 1] = alg->one_plus_t().inverse();
  return r;
}

CycElem CycElem::scalar(std::shared_ptr<const CycAlg> alg, ERat c) {
  CycElem r(alg);
  r.c_[0] = std::move(c);
  return r;
}

CycElem CycElem::ext(std::shared_ptr<const CycAlg> alg, ExtField::Elem c) {
  CycElem r(alg);
  r.c_[0] = alg->const_rat(c);
  return r;
}

bool CycElem::is_zero() const {
  for (const auto& c : c_)
    if (!c.is_zero()) return false;
  return true;
}

bool CycElem::is_one() const {
  if (!c_[0].is_one()) return false;
  for (std::size_t j = 1; j < c_.size(); ++j)
    if (!c_[j].is_zero()) return false;
  return true;
}

bool CycElem::is_integral() const {
  for (const auto& c : c_)
    if (!c.is_poly()) return false;
  return true;
}

bool CycElem::is_central_scalar() const {
  if (c_[0].is_zero()) return false;
  for (std::size_t j = 1; j < c_.size(); ++j)
    if (!c_[j].is_zero()) return false;
  const auto& E = alg_->ext();
  for (auto x : c_[0].num().coeffs())
    if (!E.in_base(x)) return false;
  for (auto x : c_[0].den().coeffs())
    if (!E.in_base(x)) return false;
  return true;
}

namespace {
void check_alg(const CycElem& a, const CycElem& b) {
  if (a.alg() != b.alg() &&
      (a.alg()->s() != b.alg()->s() || !a.alg()->ext().same_as(b.alg()->ext())))
    throw PreconditionError("elements of different cyclic algebras");
}
}  // namespace

CycElem operator+(const CycElem& a, const CycElem& b) {
  check_alg(a, b);
  CycElem r(a.alg_);
  for (std::size_t j = 0; j < a.c_.size(); ++j) r.c_[j] = a.c_[j] + b.c_[j];
  return r;
}

CycElem operator-(const CycElem& a, const CycElem& b) {
  check_alg(a, b);
  CycElem r(a.alg_);
  for (std::size_t j = 0; j < a.c_.size(); ++j) r.c_[j] = a.c_[j] - b.c_[j];
  return r;
}

// (c_i z^i)(c'_j z^j) = c_i sigma^i(c'_j) z^{i+j}, with z^d = 1+t.
CycElem operator*(const CycElem& a, const CycElem& b) {
  check_alg(a, b);
  const CycAlg& A = *a.alg_;
  const std::size_t d = A.degree();
  CycElem r(a.alg_);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b.c_[j].is_zero()) continue;
      ERat term = a.c_[i] * A.sigma(b.c_[j], static_cast<std::int64_t>(i));
      std::size_t k = i + j;
      if (k >= d) {
        k -= d;
        term = term * A.one_plus_t();
      }
      r.c_[k] = r.c_[k] + term;
    }
  }
  return r;
}

CycElem CycElem::scaled(const ERat& c) const {
  CycElem r(alg_);
  for (std::size_t j = 0; j < c_.size(); ++j) r.c_[j] = c * c_[j];
  return r;
}

CycElem CycElem::pow(std::int64_t e) const {
  if (e < 0) return inverse().pow(-e);
  CycElem r = one(alg_), b = *this;
  while (e > 0) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

// x a = 1 is linear in x: (x a)_k = sum_i x_i sigma^i(a_{k-i}) [times 1+t on wrap].
CycElem CycElem::inverse() const {
  if (is_zero()) throw ArithmeticError("inverse of zero in the cyclic algebra");
  const CycAlg& A = *alg_;
  const std::size_t d = A.degree();
  std::vector<std::vector<ERat>> m(d, std::vector<ERat>(d + 1, A.zero_rat()));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (c_[j].is_zero()) continue;
      ERat v = A.sigma(c_[j], static_cast<std::int64_t>(i));
      std::size_t k = i + j;
      if (k >= d) {
        k -= d;
        v = v * A.one_plus_t();
      }
      m[k][i] = v;
    }
  m[0][d] = A.const_rat(1);
  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    while (piv < d && m[piv][col].is_zero()) ++piv;
    if (piv == d) throw ArithmeticError("cyclic algebra element is not invertible");
    std::swap(m[piv], m[col]);
    const ERat inv = m[col][col].inverse();
    for (std::size_t j = col; j <= d; ++j) m[col][j] = m[col][j] * inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col || m[r][col].is_zero()) continue;
      const ERat f = m[r][col];
      for (std::size_t j = col; j <= d; ++j) m[r][j] = m[r][j] - f * m[col][j];
    }
  }
  std::vector<ERat> x;
  x.reserve(d);
  for (std::size_t i = 0; i < d; ++i) x.push_back(m[i][d]);
  return CycElem(alg_, std::move(x));
}

CycElem conj_by_unit(const CycElem& a, ExtField::Elem u) {
  if (u == 0) throw PreconditionError("conjugation by zero");
  const CycAlg& A = *a.alg();
  const ExtField& E = A.ext();
  const auto uinv = E.inv(u);
  std::vector<ERat> c;
  c.reserve(A.degree());
  for (std::size_t j = 0; j < A.degree(); ++j)
    c.push_back(a.coeff(j).scaled(E.mul(u, A.sigma(uinv, static_cast<std::int64_t>(j)))));
  return CycElem(a.alg(), std::move(c));
}

BRat descend(const ERat& a, const ff::Field& base) {
  const auto& E = *a.field();
  std::vector<ff::Field::Elem> n, d;
  for (auto x : a.num().coeffs()) {
    if (!E.in_base(x)) throw VerificationError("rational function does not descend to F_q(t)");
    n.push_back(static_cast<ff::Field::Elem>(x));
  }
  for (auto x : a.den().coeffs()) {
    if (!E.in_base(x)) throw VerificationError("rational function does not descend to F_q(t)");
    d.push_back(static_cast<ff::Field::Elem>(x));
  }
  return BRat::from_canonical(BPoly(&base, std::move(n)), BPoly(&base, std::move(d)));
}

ERat ascend(const BRat& a, const ExtField& E) {
  std::vector<ExtField::Elem> n(a.num().coeffs().begin(), a.num().coeffs().end());
  std::vector<ExtField::Elem> d(a.den().coeffs().begin(), a.den().coeffs().end());
  return ERat::from_canonical(EPoly(&E, std::move(n)), EPoly(&E, std::move(d)));
}

namespace {
bool descends(const ERat& a) {
  const auto& E = *a.field();
  for (auto x : a.num().coeffs())
    if (!E.in_base(x)) return false;
  for (auto x : a.den().coeffs())
    if (!E.in_base(x)) return false;
  return true;
}
}  // namespace

bool projectively_equal(const CycElem& a, const CycElem& b) {
  check_alg(a, b);
  const std::size_t d = a.coeffs().size();
  std::size_t k = 0;
  while (k < d && a.coeff(k).is_zero()) ++k;
  if (k == d) return b.is_zero();
  if (b.coeff(k).is_zero()) return false;
  const ERat lambda = a.coeff(k) / b.coeff(k);
  if (!descends(lambda)) return false;
  for (std::size_t j = 0; j < d; ++j)
    if (!(a.coeff(j) == lambda * b.coeff(j))) return false;
  return true;
}

GlobalMat to_matrix(const CycElem& a) {
  const CycAlg& A = *a.alg();
  const std::size_t d = A.degree();
  GlobalMat m(&A.ext(), d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      const std::size_t j = (r + d - c) % d;
      const ERat& cj = a.coeff(j);
      if (cj.is_zero()) continue;
      ERat v = A.sigma(cj, -static_cast<std::int64_t>(r));
      if (r < c) v = v * A.one_plus_t();
      m.at(r, c) = std::move(v);
    }
  return m;
}

BRat reduced_norm(const CycElem& a) { return descend(to_matrix(a).det(), a.alg()->base()); }

ff::Field::Elem gamma_of(const ff::Field& F, ff::Field::Elem alpha, std::uint32_t d) {
  return F.sub(F.pow(F.add(1, alpha), d), 1);
}

void check_alpha(const ff::Field& F, ff::Field::Elem alpha, std::uint32_t d) {
  const auto minus_one = F.neg(1);
  if (alpha >= F.order()) throw PreconditionError("alpha is not an element of F_q");
  if (alpha == 0 || alpha == minus_one) throw PreconditionError("alpha must not be 0 or -1");
  const auto g = gamma_of(F, alpha, d);
  if (g == 0 || g == minus_one) throw PreconditionError("gamma = (1+alpha)^d - 1 must not be 0 or -1");
}

ff::FqMatrix specialize(const CycElem& a, ff::Field::Elem alpha) {
  const CycAlg& A = *a.alg();
  const ExtField& E = A.ext();
  const ff::Field& F = E.base();
  const std::uint32_t d = A.degree();
  check_alpha(F, alpha, d);
  const auto gamma = E.embed(gamma_of(F, alpha, d));
  const ff::FqMatrix zimg = ff::frobenius_matrix(E, A.s()).scaled(F.add(1, alpha));
  ff::FqMatrix result(E.base_ptr(), d);
  ff::FqMatrix zpow = ff::FqMatrix::identity(E.base_ptr(), d);
  for (std::uint32_t j = 0; j < d; ++j) {
    if (!a.coeff(j).is_zero()) {
      const auto v = a.coeff(j).eval(gamma);
      result = result + ff::regular_rep(E, v) * zpow;
    }
    zpow = zpow * zimg;
  }
  return result;
}

}  // namespace isocay::cyc
