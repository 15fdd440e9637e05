#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "isocay/ff/field.hpp"
#include "isocay/ff/fq_matrix.hpp"

namespace isocay::cayley {

/// Mixed-radix encoding sum e_i q^i of a canonical matrix's row-major
/// entries, as a 128-bit integer.
struct PackedKey {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;

  friend bool operator==(const PackedKey& a, const PackedKey& b) { return a.lo == b.lo && a.hi == b.hi; }
  friend bool operator<(const PackedKey& a, const PackedKey& b) { return a.hi != b.hi ? a.hi < b.hi : a.lo < b.lo; }
  std::size_t hash() const {
    std::uint64_t h = lo * 0x9E3779B97F4A7C15ULL ^ (hi + 0x632BE59BD9B4E019ULL + (lo >> 29));
    h ^= h >> 31;
    h *= 0xBF58476D1CE4E5B9ULL;
    h ^= h >> 29;
    return static_cast<std::size_t>(h);
  }
  template <class H>
  friend H AbslHashValue(H h, const PackedKey& k) {
    return H::combine(std::move(h), k.lo, k.hi);
  }
  std::string hex() const;
  static PackedKey from_hex(std::string_view s);
};

struct PackedKeyHash {
  std::size_t operator()(const PackedKey& k) const { return k.hash(); }
};

inline constexpr std::size_t kMaxProjDim = 8;

/// d x d matrix over F_q (q <= 256) stored as byte codes, row-major. Only
/// the first d*d entries are meaningful. Values produced by PglContext are
/// canonical: the first nonzero entry in row-major order is 1.
struct ProjMat {
  std::array<std::uint8_t, kMaxProjDim * kMaxProjDim> e{};
  friend bool operator==(const ProjMat& a, const ProjMat& b) { return a.e == b.e; }
};

/// Arithmetic in PGL_d(F_q) on canonical representatives.
class PglContext {
 public:
  /// Requires q <= 256, 2 <= d <= 8 and q^{d^2} < 2^128.
  static std::shared_ptr<const PglContext> create(std::shared_ptr<const ff::Field> field, std::uint32_t d);

  const std::shared_ptr<const ff::Field>& field() const { return field_; }
  std::uint32_t d() const { return d_; }
  std::uint32_t q() const { return q_; }

  ProjMat identity() const;
  /// Canonicalizes; ArithmeticError when singular.
  ProjMat from_matrix(const ff::FqMatrix& m) const;
  ff::FqMatrix to_matrix(const ProjMat& m) const;

  ProjMat mul(const ProjMat& a, const ProjMat& b) const;
  ProjMat inverse(const ProjMat& a) const;
  ProjMat pow(const ProjMat& a, std::int64_t e) const;
  bool is_identity(const ProjMat& a) const;
  /// Scales so that the first nonzero entry is 1.
  void canonicalize(ProjMat& a) const;
  /// Determinant of the stored representative.
  std::uint32_t det(const ProjMat& a) const;

  PackedKey key(const ProjMat& a) const;
  ProjMat decode(const PackedKey& k) const;

 private:
  PglContext(std::shared_ptr<const ff::Field> field, std::uint32_t d);
  std::uint8_t add(std::uint8_t a, std::uint8_t b) const { return add_[a * q_ + b]; }
  std::uint8_t mulf(std::uint8_t a, std::uint8_t b) const { return mul_[a * q_ + b]; }

  std::shared_ptr<const ff::Field> field_;
  std::uint32_t d_;
  std::uint32_t q_;
  bool prime_;
  std::vector<std::uint8_t> add_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> inv_;
  std::vector<std::uint8_t> neg_;
};

}  // namespace isocay::cayley
