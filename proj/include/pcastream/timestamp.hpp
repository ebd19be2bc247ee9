#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace pcastream {

// Timestamps are UTC epoch times held as integer nanoseconds so that replay
// is bit-exact. Accepted input forms:
//   - decimal epoch seconds, e.g. "1513526400" or "3.5" (up to 9 fractional
//     digits, parsed exactly without a float round trip)
//   - ISO-8601 UTC, e.g. "2017-12-17T16:00:00Z", "2017-12-17 16:00",
//     optional seconds and fractional seconds, optional trailing 'Z'.
std::int64_t parse_timestamp_ns(std::string_view token, const std::string& context);

// Canonical output form: decimal epoch seconds, fractional digits trimmed.
std::string format_timestamp_ns(std::int64_t ns);

constexpr std::int64_t kNsPerSecond = 1'000'000'000;

inline std::int64_t seconds_to_ns(double seconds) {
  return static_cast<std::int64_t>(seconds * static_cast<double>(kNsPerSecond));
}

}  // namespace pcastream
