#pragma once

#include <cstdint>

#include "isocay/common/bigint.hpp"

namespace isocay::ff {

/// Number of i-dimensional subspaces of F_q^d.
BigInt gaussian_binomial(std::uint32_t d, std::uint32_t i, std::uint64_t q);

/// |GL_d(F_q)|.
BigInt gl_order(std::uint32_t d, std::uint64_t q);
/// |PGL_d(F_q)| = |GL_d(F_q)| / (q-1).
BigInt pgl_order(std::uint32_t d, std::uint64_t q);

}  // namespace isocay::ff
