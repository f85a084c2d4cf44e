#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace casefs::util {

// Milliseconds since the Unix epoch, UTC.
int64_t nowMillis();

// "2026-01-31T12:34:56.789Z". Always UTC, always millisecond precision.
std::string formatRfc3339Ms(int64_t epochMillis);

// Accepts RFC 3339 with 'Z' suffix and optional fractional seconds
// (up to millisecond precision is kept). Returns nullopt on malformed input.
std::optional<int64_t> parseRfc3339Ms(const std::string& text);

}  // namespace casefs::util
