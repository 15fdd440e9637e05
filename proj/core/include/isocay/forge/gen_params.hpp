#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "isocay/cayley/proj_mat.hpp"
#include "isocay/cyc/cyclic_algebra.hpp"
#include "isocay/ff/field.hpp"

namespace isocay::forge {

/// Parameters of one generator construction. Everything derived (fields,
/// algebra, PGL context, gamma, n) is filled in by make().
struct GenParams {
  std::shared_ptr<const ff::Field> F;
  std::shared_ptr<const ff::ExtField> E;
  std::shared_ptr<const cyc::CycAlg> alg;
  std::shared_ptr<const cayley::PglContext> pgl;
  std::uint64_t q = 0;
  std::uint32_t d = 0;
  std::uint32_t s = 1;
  ff::Field::Elem alpha = 0;
  ff::Field::Elem gamma = 0;
  ff::ExtField::Elem u = 0;
  std::uint64_t n = 0;
  std::vector<std::string> warnings;

  /// alpha defaults to default_alpha(); the extension modulus to
  /// ExtField::standard(); u to mult_generator(). q = 2 is rejected.
  static GenParams make(std::uint64_t q, std::uint32_t d, std::uint32_t s,
                        std::optional<ff::Field::Elem> alpha = std::nullopt,
                        std::shared_ptr<const ff::ExtField> E = nullptr,
                        std::optional<ff::ExtField::Elem> u = std::nullopt);
  /// Same field, alpha and u with a different sigma exponent.
  GenParams with_s(std::uint32_t s) const;
  std::string describe() const;
};

/// 1 for (q, d) = (3, 5); -2 when it is admissible; otherwise the first
/// admissible code 1, 2, ...
ff::Field::Elem default_alpha(const ff::Field& F, std::uint32_t d);
/// Parses an alpha given as a signed integer (image of Z in F_q) or as an
/// F_p coordinate tuple "c0,c1,...".
ff::Field::Elem parse_alpha(const ff::Field& F, std::string_view text);

}  // namespace isocay::forge
