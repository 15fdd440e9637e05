#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace isocay {

/// 64-bit FNV-1a. Used for file checksums and content fingerprints.
class Fnv1a64 {
 public:
  void update(const void* data, std::size_t len);
  void update(std::string_view s) { update(s.data(), s.size()); }
  std::uint64_t digest() const { return state_; }

 private:
  std::uint64_t state_ = 0xcbf29ce484222325ULL;
};

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

}  // namespace isocay
