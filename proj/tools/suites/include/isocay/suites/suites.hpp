#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace isocay::suites {

struct CriterionResult {
  std::string id;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

/// A1 ... A11.
const std::vector<std::string>& criterion_ids();
/// Runs one criterion. Library exceptions become a failing result.
CriterionResult run_criterion(std::string_view id);
/// `A4 PASS 12.3s <detail>`.
std::string format_result(const CriterionResult& r);

/// paper-d5q3, small-d3q5, moments-d5q3, properties, family.
const std::vector<std::string>& suite_names();
/// Criterion ids of a suite; PreconditionError for an unknown name.
std::vector<std::string> suite_criteria(std::string_view suite);

struct PropertyResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};
inline constexpr std::uint64_t kPropertySeed = 20240611;
/// Every module invariant check, in a fixed order.
std::vector<PropertyResult> run_properties(std::uint64_t seed = kPropertySeed);

}  // namespace isocay::suites
