#include "isocay/cyc/cyclic_algebra.hpp"

namespace isocay::cyc {

GlobalMat::GlobalMat(const ff::ExtField* E, std::size_t n) : E_(E), n_(n), a_(n * n, ERat(E)) {}

GlobalMat GlobalMat::identity(const ff::ExtField* E, std::size_t n) {
  GlobalMat m(E, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = ERat::constant(E, 1);
  return m;
}

GlobalMat operator*(const GlobalMat& a, const GlobalMat& b) {
  if (a.n_ != b.n_) throw PreconditionError("matrix size mismatch");
  const std::size_t n = a.n_;
  GlobalMat r(a.E_, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const ERat& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j)
        if (!b.at(k, j).is_zero()) r.at(i, j) = r.at(i, j) + x * b.at(k, j);
    }
  return r;
}

GlobalMat operator+(const GlobalMat& a, const GlobalMat& b) {
  if (a.n_ != b.n_) throw PreconditionError("matrix size mismatch");
  GlobalMat r(a.E_, a.n_);
  for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
  return r;
}

GlobalMat GlobalMat::scaled(const ERat& c) const {
  GlobalMat r(E_, n_);
  for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
  return r;
}

ERat GlobalMat::det() const {
  std::vector<ERat> m = a_;
  const std::size_t n = n_;
  ERat d = ERat::constant(E_, 1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv * n + col].is_zero()) ++piv;
    if (piv == n) return ERat(E_);
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[piv * n + j], m[col * n + j]);
      d = -d;
    }
    d = d * m[col * n + col];
    const ERat inv = m[col * n + col].inverse();
    for (std::size_t r = col + 1; r < n; ++r) {
      if (m[r * n + col].is_zero()) continue;
      const ERat f = m[r * n + col] * inv;
      for (std::size_t j = col; j < n; ++j) m[r * n + j] = m[r * n + j] - f * m[col * n + j];
    }
  }
  return d;
}

bool GlobalMat::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

GlobalMat GlobalMat::normalize() const {
  for (const auto& x : a_) {
    if (x.is_zero()) continue;
    GlobalMat r = scaled(x.inverse());
    r.normalized_ = true;
    return r;
  }
  throw PreconditionError("cannot normalize the zero matrix");
}

bool projectively_equal(const GlobalMat& a, const GlobalMat& b) {
  if (a.size() != b.size()) return false;
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (!(a.normalize() == b.normalize())) return false;
  std::size_t k = 0;
  while (a.at(k / a.size(), k % a.size()).is_zero()) ++k;
  const ERat ratio = a.at(k / a.size(), k % a.size()) / b.at(k / a.size(), k % a.size());
  const auto& E = *a.field();
  for (auto x : ratio.num().coeffs())
    if (!E.in_base(x)) return false;
  for (auto x : ratio.den().coeffs())
    if (!E.in_base(x)) return false;
  return true;
}

}  // namespace isocay::cyc
