#include "isocay/ff/qbinomial.hpp"

#include "isocay/common/errors.hpp"

namespace isocay::ff {

BigInt gaussian_binomial(std::uint32_t d, std::uint32_t i, std::uint64_t q) {
  if (i > d) throw PreconditionError("gaussian_binomial needs 0 <= i <= d");
  if (q < 2) throw PreconditionError("gaussian_binomial needs q >= 2");
  BigInt num = 1, den = 1;
  BigInt qq = q;
  for (std::uint32_t k = 0; k < i; ++k) {
    num *= BigInt(pow(qq, d - k)) - 1;
    den *= BigInt(pow(qq, k + 1)) - 1;
  }
  return num / den;
}

BigInt gl_order(std::uint32_t d, std::uint64_t q) {
  BigInt r = 1;
  const BigInt qd = pow(BigInt(q), d);
  for (std::uint32_t k = 0; k < d; ++k) r *= qd - pow(BigInt(q), k);
  return r;
}

BigInt pgl_order(std::uint32_t d, std::uint64_t q) { return gl_order(d, q) / (q - 1); }

}  // namespace isocay::ff
