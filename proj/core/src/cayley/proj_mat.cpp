#include "isocay/cayley/proj_mat.hpp"

#include <cmath>
#include <cstdio>

namespace isocay::cayley {

std::string PackedKey::hex() const {
  char buf[40];
  if (hi) std::snprintf(buf, sizeof buf, "%llx%016llx", static_cast<unsigned long long>(hi), static_cast<unsigned long long>(lo));
  else std::snprintf(buf, sizeof buf, "%llx", static_cast<unsigned long long>(lo));
  return buf;
}

PackedKey PackedKey::from_hex(std::string_view s) {
  if (s.empty() || s.size() > 32) throw FormatError("bad packed key");
  PackedKey k;
  for (char ch : s) {
    unsigned v;
    if (ch >= '0' && ch <= '9') v = ch - '0';
    else if (ch >= 'a' && ch <= 'f') v = ch - 'a' + 10;
    else throw FormatError("bad hex digit in packed key");
    k.hi = (k.hi << 4) | (k.lo >> 60);
    k.lo = (k.lo << 4) | v;
  }
  return k;
}

PglContext::PglContext(std::shared_ptr<const ff::Field> field, std::uint32_t d)
    : field_(std::move(field)), d_(d), q_(static_cast<std::uint32_t>(field_->order())), prime_(field_->degree() == 1) {
  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  inv_.resize(q_);
  neg_.resize(q_);
  for (std::uint32_t a = 0; a < q_; ++a) {
    neg_[a] = static_cast<std::uint8_t>(field_->neg(a));
    inv_[a] = a ? static_cast<std::uint8_t>(field_->inv(a)) : 0;
    for (std::uint32_t b = 0; b < q_; ++b) {
      add_[a * q_ + b] = static_cast<std::uint8_t>(field_->add(a, b));
      mul_[a * q_ + b] = static_cast<std::uint8_t>(field_->mul(a, b));
    }
  }
}

std::shared_ptr<const PglContext> PglContext::create(std::shared_ptr<const ff::Field> field, std::uint32_t d) {
  if (!field) throw PreconditionError("PGL context needs a field");
  if (field->order() > 256) throw PreconditionError("projective matrices support q <= 256");
  if (d < 2 || d > kMaxProjDim) throw PreconditionError("projective matrices support 2 <= d <= 8");
  if (static_cast<double>(d) * d * std::log2(static_cast<double>(field->order())) >= 128.0)
    throw PreconditionError("q^(d^2) does not fit the 128-bit packed encoding");
  return std::shared_ptr<const PglContext>(new PglContext(std::move(field), d));
}

ProjMat PglContext::identity() const {
  ProjMat m;
  for (std::uint32_t i = 0; i < d_; ++i) m.e[i * d_ + i] = 1;
  return m;
}

ProjMat PglContext::from_matrix(const ff::FqMatrix& a) const {
  if (a.size() != d_) throw PreconditionError("matrix size does not match the PGL context");
  if (a.det() == 0) throw ArithmeticError("singular matrix is not in PGL");
  ProjMat m;
  for (std::uint32_t i = 0; i < d_ * d_; ++i) m.e[i] = static_cast<std::uint8_t>(a.data()[i]);
  canonicalize(m);
  return m;
}

ff::FqMatrix PglContext::to_matrix(const ProjMat& m) const {
  ff::FqMatrix a(field_, d_);
  for (std::uint32_t i = 0; i < d_; ++i)
    for (std::uint32_t j = 0; j < d_; ++j) a.at(i, j) = m.e[i * d_ + j];
  return a;
}

void PglContext::canonicalize(ProjMat& a) const {
  const std::uint32_t n = d_ * d_;
  std::uint32_t k = 0;
  while (k < n && a.e[k] == 0) ++k;
  if (k == n || a.e[k] == 1) return;
  const std::uint8_t s = inv_[a.e[k]];
  for (std::uint32_t i = k; i < n; ++i) a.e[i] = mulf(a.e[i], s);
}

ProjMat PglContext::mul(const ProjMat& a, const ProjMat& b) const {
  ProjMat r;
  const std::uint32_t d = d_;
  if (prime_) {
    for (std::uint32_t i = 0; i < d; ++i)
      for (std::uint32_t j = 0; j < d; ++j) {
        std::uint32_t acc = 0;
        for (std::uint32_t k = 0; k < d; ++k) acc += std::uint32_t(a.e[i * d + k]) * b.e[k * d + j];
        r.e[i * d + j] = static_cast<std::uint8_t>(acc % q_);
      }
  } else {
    for (std::uint32_t i = 0; i < d; ++i)
      for (std::uint32_t j = 0; j < d; ++j) {
        std::uint8_t acc = 0;
        for (std::uint32_t k = 0; k < d; ++k) acc = add(acc, mulf(a.e[i * d + k], b.e[k * d + j]));
        r.e[i * d + j] = acc;
      }
  }
  canonicalize(r);
  return r;
}

ProjMat PglContext::inverse(const ProjMat& m) const {
  const std::uint32_t d = d_;
  ProjMat a = m;
  ProjMat r = identity();
  for (std::uint32_t col = 0; col < d; ++col) {
    std::uint32_t piv = col;
    while (piv < d && a.e[piv * d + col] == 0) ++piv;
    if (piv == d) throw ArithmeticError("singular matrix is not in PGL");
    if (piv != col)
      for (std::uint32_t j = 0; j < d; ++j) {
        std::swap(a.e[piv * d + j], a.e[col * d + j]);
        std::swap(r.e[piv * d + j], r.e[col * d + j]);
      }
    const std::uint8_t s = inv_[a.e[col * d + col]];
    for (std::uint32_t j = 0; j < d; ++j) {
      a.e[col * d + j] = mulf(a.e[col * d + j], s);
      r.e[col * d + j] = mulf(r.e[col * d + j], s);
    }
    for (std::uint32_t i = 0; i < d; ++i) {
      if (i == col) continue;
      const std::uint8_t c = neg_[a.e[i * d + col]];
      if (c == 0) continue;
      for (std::uint32_t j = 0; j < d; ++j) {
        a.e[i * d + j] = add(a.e[i * d + j], mulf(c, a.e[col * d + j]));
        r.e[i * d + j] = add(r.e[i * d + j], mulf(c, r.e[col * d + j]));
      }
    }
  }
  canonicalize(r);
  return r;
}

ProjMat PglContext::pow(const ProjMat& a, std::int64_t e) const {
  if (e < 0) return pow(inverse(a), -e);
  ProjMat r = identity(), b = a;
  while (e > 0) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

bool PglContext::is_identity(const ProjMat& a) const {
  ProjMat c = a;
  canonicalize(c);
  return c == identity();
}

std::uint32_t PglContext::det(const ProjMat& a) const { return to_matrix(a).det(); }

PackedKey PglContext::key(const ProjMat& a) const {
  unsigned __int128 v = 0;
  for (std::uint32_t i = d_ * d_; i-- > 0;) v = v * q_ + a.e[i];
  return {static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(v >> 64)};
}

ProjMat PglContext::decode(const PackedKey& k) const {
  unsigned __int128 v = (static_cast<unsigned __int128>(k.hi) << 64) | k.lo;
  ProjMat m;
  for (std::uint32_t i = 0; i < d_ * d_; ++i) {
    m.e[i] = static_cast<std::uint8_t>(v % q_);
    v /= q_;
  }
  if (v != 0) throw FormatError("packed key out of range");
  return m;
}

}  // namespace isocay::cayley
