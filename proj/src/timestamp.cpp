#include "pcastream/timestamp.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "pcastream/util.hpp"

namespace pcastream {

namespace {

// Days since 1970-01-01 for a proleptic Gregorian date (Howard Hinnant's
// days_from_civil).
std::int64_t days_from_civil(std::int64_t y, unsigned m, unsigned d) {
  y -= m <= 2;
  const std::int64_t era = (y >= 0 ? y : y - 399) / 400;
  const unsigned yoe = static_cast<unsigned>(y - era * 400);
  const unsigned doy = (153 * (m + (m > 2 ? -3 : 9)) + 2) / 5 + d - 1;
  const unsigned doe = yoe * 365 + yoe / 4 - yoe / 100 + doy;
  return era * 146097 + static_cast<std::int64_t>(doe) - 719468;
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::int64_t parse_fraction_ns(std::string_view frac, const std::string& context) {
  if (frac.size() > 9 || !all_digits(frac))
    throw std::runtime_error(context + ": bad fractional seconds '" + std::string(frac) + "'");
  std::int64_t v = 0;
  for (char c : frac) v = v * 10 + (c - '0');
  for (std::size_t i = frac.size(); i < 9; ++i) v *= 10;
  return v;
}

std::int64_t parse_iso(std::string_view s, const std::string& context) {
  auto fail = [&]() -> std::int64_t {
    throw std::runtime_error(context + ": unparsable timestamp '" + std::string(s) + "'");
  };
  if (!s.empty() && s.back() == 'Z') s.remove_suffix(1);
  if (s.size() < 10 || s[4] != '-' || s[7] != '-') return fail();
  auto num = [&](std::string_view part) -> std::int64_t {
    if (!all_digits(part)) fail();
    return std::strtoll(std::string(part).c_str(), nullptr, 10);
  };
  std::int64_t year = num(s.substr(0, 4));
  std::int64_t month = num(s.substr(5, 2));
  std::int64_t day = num(s.substr(8, 2));
  if (month < 1 || month > 12 || day < 1 || day > 31) return fail();
  std::int64_t hour = 0, minute = 0, second = 0, frac_ns = 0;
  if (s.size() > 10) {
    if (s[10] != 'T' && s[10] != ' ') return fail();
    std::string_view t = s.substr(11);
    if (t.size() < 5 || t[2] != ':') return fail();
    hour = num(t.substr(0, 2));
    minute = num(t.substr(3, 2));
    if (t.size() > 5) {
      if (t[5] != ':' || t.size() < 8) return fail();
      second = num(t.substr(6, 2));
      if (t.size() > 8) {
        if (t[8] != '.') return fail();
        frac_ns = parse_fraction_ns(t.substr(9), context);
      }
    }
    if (hour > 23 || minute > 59 || second > 60) return fail();
  }
  std::int64_t days = days_from_civil(year, static_cast<unsigned>(month), static_cast<unsigned>(day));
  return ((days * 86400 + hour * 3600 + minute * 60 + second) * kNsPerSecond) + frac_ns;
}

std::int64_t parse_decimal_seconds(std::string_view s, const std::string& context) {
  auto fail = [&]() -> std::int64_t {
    throw std::runtime_error(context + ": unparsable timestamp '" + std::string(s) + "'");
  };
  bool negative = false;
  if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  std::string_view int_part = s, frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (!all_digits(int_part)) return fail();
  if (int_part.size() > 18) return fail();
  std::int64_t sec = std::strtoll(std::string(int_part).c_str(), nullptr, 10);
  std::int64_t frac_ns = frac_part.empty() ? 0 : parse_fraction_ns(frac_part, context);
  std::int64_t total = sec * kNsPerSecond + frac_ns;
  return negative ? -total : total;
}

}  // namespace

std::int64_t parse_timestamp_ns(std::string_view token, const std::string& context) {
  std::string_view s = trim(token);
  if (s.empty()) throw std::runtime_error(context + ": empty timestamp");
  // A '-' past the first character means an ISO date, not a sign.
  if (s.find('-', 1) != std::string_view::npos || s.find(':') != std::string_view::npos)
    return parse_iso(s, context);
  return parse_decimal_seconds(s, context);
}

std::string format_timestamp_ns(std::int64_t ns) {
  bool negative = ns < 0;
  std::uint64_t abs_ns = negative ? 0 - static_cast<std::uint64_t>(ns) : static_cast<std::uint64_t>(ns);
  std::uint64_t sec = abs_ns / kNsPerSecond;
  std::uint64_t frac = abs_ns % kNsPerSecond;
  std::string out = negative ? "-" : "";
  out += std::to_string(sec);
  if (frac != 0) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%09llu", static_cast<unsigned long long>(frac));
    std::string f(buf);
    while (f.back() == '0') f.pop_back();
    out += '.';
    out += f;
  }
  return out;
}

}  // namespace pcastream
