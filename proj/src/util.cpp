#include "pcastream/util.hpp"

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <stdexcept>

namespace pcastream {

namespace {
void default_sink(const std::string& message) { std::cerr << "warning: " << message << "\n"; }
void (*g_warning_sink)(const std::string&) = &default_sink;
}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

double parse_double(std::string_view token, const std::string& context) {
  std::string s(trim(token));
  if (s.empty()) throw std::runtime_error(context + ": empty numeric field");
  char* end = nullptr;
  double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size())
    throw std::runtime_error(context + ": not a number: '" + s + "'");
  return v;
}

std::vector<std::string> split(std::string_view line, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = line.find(sep, start);
    if (pos == std::string_view::npos) {
      out.emplace_back(line.substr(start));
      break;
    }
    out.emplace_back(line.substr(start, pos - start));
    start = pos + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

void warn(const std::string& message) { g_warning_sink(message); }

void set_warning_sink(void (*sink)(const std::string&)) {
  g_warning_sink = sink ? sink : &default_sink;
}

}  // namespace pcastream
