#pragma once

#include <cstdint>
#include <vector>

// Constants printed in the worked example (q = 3, d = 5, modulus
// lambda^5 - lambda - 1, basis 1, t, ..., t^4, alpha = 1). Entries are F_3
// residues, row-major.
namespace isocay::suites::fixtures {

using Rows = std::vector<std::vector<std::uint32_t>>;

inline const Rows kPhi1 = {
    {1, 0, 0, 1, 0}, {0, 0, 1, 1, 0}, {0, 0, 1, 0, 1}, {0, 1, 0, 0, 2}, {0, 0, 0, 1, 1}};

inline const Rows kTheta = {
    {0, 0, 0, 0, 1}, {1, 0, 0, 0, 1}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}, {0, 0, 0, 1, 0}};

inline const Rows kB1 = {
    {2, 1, 2, 0, 1}, {0, 2, 2, 1, 2}, {0, 2, 0, 0, 1}, {0, 2, 1, 1, 2}, {0, 1, 2, 0, 0}};

inline const Rows kB2 = {
    {2, 1, 1, 1, 1}, {0, 1, 2, 1, 1}, {0, 1, 2, 2, 2}, {0, 0, 1, 0, 0}, {0, 1, 1, 1, 0}};

/// t^11 = t^3 - t^2 + t, as coordinates in 1, t, ..., t^4.
inline const std::vector<std::uint32_t> kT11 = {0, 1, 2, 1, 0};
inline constexpr std::uint64_t kOrderOfT = 121;

inline constexpr std::uint64_t kOmegaSize = 121;
inline constexpr std::uint64_t kOmegaBarSize = 242;
inline constexpr std::uint64_t kOmegaHatSize = 2662;
/// Omega-hat elements per color 1..4.
inline const std::vector<std::uint64_t> kColorClasses = {121, 1210, 1210, 121};

/// Family sizes m for (q, d) = (3, 5) and (3, 7).
inline constexpr std::uint32_t kFamily35 = 2;
inline constexpr std::uint32_t kFamily37 = 3;

}  // namespace isocay::suites::fixtures
