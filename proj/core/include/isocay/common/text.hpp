#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace isocay::text {

/// Splits on `sep`, keeping empty fields.
std::vector<std::string_view> split(std::string_view s, char sep);
/// Splits on runs of ASCII whitespace.
std::vector<std::string_view> tokens(std::string_view s);
std::string_view trim(std::string_view s);

/// Parses whitespace-separated `key=value` tokens of one line.
std::map<std::string, std::string, std::less<>> parse_kv(std::string_view line);
const std::string& require(const std::map<std::string, std::string, std::less<>>& kv,
                           std::string_view key);

std::uint64_t to_u64(std::string_view s);
std::int64_t to_i64(std::string_view s);

}  // namespace isocay::text
