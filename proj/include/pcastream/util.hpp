#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace pcastream {

// Formats a double with 17 significant digits so that parsing the result
// recovers the exact same IEEE-754 value.
std::string format_double(double v);

// Strict double parser; throws std::runtime_error on garbage or trailing junk.
double parse_double(std::string_view token, const std::string& context);

// Splits on a single-character separator; keeps empty fields.
std::vector<std::string> split(std::string_view line, char sep);

std::string_view trim(std::string_view s);

// Emits a non-fatal diagnostic. Routed to stderr by default; tests can
// capture via set_warning_sink.
void warn(const std::string& message);
void set_warning_sink(void (*sink)(const std::string&));

}  // namespace pcastream
