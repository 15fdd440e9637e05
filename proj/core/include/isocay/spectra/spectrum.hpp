#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "isocay/cayley/cayley_graph.hpp"

namespace isocay::spectra {

inline constexpr std::size_t kDefaultDenseCap = 5000;

struct SpectrumReport {
  std::uint64_t n = 0;
  std::uint64_t r = 0;
  std::string method = "dense-symmetric";
  double residual = 0;  // largest ||Av - lambda v|| over returned pairs
  std::vector<double> values;  // descending, with repeats
};

/// Full eigendecomposition of the adjacency operator (restricted to the
/// given colors). Requires a symmetric relation; every eigenpair is
/// re-verified against the sparse operator with tolerance 1e-8 * r.
SpectrumReport dense_spectrum(const cayley::CayleyGraph& g, const std::optional<std::set<std::uint32_t>>& colors = {},
                              std::size_t cap = kDefaultDenseCap);

/// Values grouped into (lambda, multiplicity), tolerance 1e-8 * r.
std::vector<std::pair<double, std::size_t>> grouped(const SpectrumReport& s);
/// Sum of lambda^k.
double power_sum(const SpectrumReport& s, std::uint32_t k);

/// Header `version=1 n= r= method= residual=`, then `lambda multiplicity`
/// lines with 12 significant digits.
void write_spectrum(std::ostream& os, const SpectrumReport& s);
SpectrumReport read_spectrum(std::istream& is);

}  // namespace isocay::spectra
