#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "isocay/cayley/cayley_graph.hpp"
#include "isocay/spectra/isomorphism.hpp"
#include "isocay/spectra/moments.hpp"
#include "isocay/spectra/spectrum.hpp"

namespace isocay::spectra {

enum class CompareMode { Moments, Spectrum, Wl, Iso };
const char* compare_mode_name(CompareMode m);
CompareMode parse_compare_mode(std::string_view s);

/// Ordered key=value lines; the last one is `verdict=`.
struct ComparisonReport {
  std::string mode;
  std::string verdict;
  std::vector<std::pair<std::string, std::string>> fields;
  void add(std::string key, std::string value) { fields.emplace_back(std::move(key), std::move(value)); }
  std::string to_text() const;
};

/// Verdict equal/different. Records the first differing k and marks the
/// evidence as partial (moments up to K only).
ComparisonReport compare_moments(const MomentSeq& a, const MomentSeq& b);
/// Multiset equality within 1e-8 * r after sorting.
ComparisonReport compare_spectra(const SpectrumReport& a, const SpectrumReport& b);
/// possibly-isomorphic or non-isomorphic; never isomorphic.
ComparisonReport compare_wl(const cayley::CayleyGraph& a, const cayley::CayleyGraph& b);
ComparisonReport compare_iso(const cayley::CayleyGraph& a, const cayley::CayleyGraph& b, const IsoOptions& opt = {});

}  // namespace isocay::spectra
