#pragma once

// CSV input/output. Formatting goes through std::to_chars, so output is
// locale-independent ('.' decimal separator, no grouping) and byte-stable
// across runs.

#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "ppclab/torus.hpp"

namespace ppclab {

namespace detail {

// Shortest representation that round-trips.
inline std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

// 17 significant digits: more than enough to reconstruct the double exactly.
inline std::string format_double17(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x,
                           std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

inline double parse_double(std::string_view text, const std::string& where) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto res = std::from_chars(first, last, value);
  if (res.ec != std::errc() || res.ptr != last)
    throw std::runtime_error("bad number '" + std::string(text) + "' " + where);
  return value;
}

inline std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= line.size(); ++i) {
    if (i == line.size() || line[i] == sep) {
      out.push_back(line.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace detail

// Point file format: a "dim=<d>" header line, then one line per point with d
// comma-separated coordinates at 17 significant digits.
inline void write_points_csv(const TorusPointSet& points, std::ostream& os) {
  os << "dim=" << points.dim() << '\n';
  const auto& flat = points.flat();
  const int d = points.dim();
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (int j = 0; j < d; ++j) {
      if (j) os << ',';
      os << detail::format_double17(flat[i * d + j]);
    }
    os << '\n';
  }
}

inline void write_points_csv(const TorusPointSet& points,
                             const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open for writing: " + path);
  write_points_csv(points, os);
  if (!os) throw std::runtime_error("write failed: " + path);
}

inline TorusPointSet read_points_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line))
    throw std::runtime_error("point file empty (line 1)");
  if (line.rfind("dim=", 0) != 0)
    throw std::runtime_error("point file missing dim= header (line 1)");
  int dim = 0;
  {
    std::string_view v(line);
    v.remove_prefix(4);
    auto res = std::from_chars(v.data(), v.data() + v.size(), dim);
    if (res.ec != std::errc() || res.ptr != v.data() + v.size() || dim < 1)
      throw std::runtime_error("bad dim= header (line 1)");
  }
  std::vector<double> flat;
  std::size_t line_no = 1;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.empty()) continue;
    auto fields = detail::split(line, ',');
    if (static_cast<int>(fields.size()) != dim)
      throw std::runtime_error("expected " + std::to_string(dim) +
                               " coordinates (line " + std::to_string(line_no) +
                               ")");
    for (auto f : fields)
      flat.push_back(
          detail::parse_double(f, "(line " + std::to_string(line_no) + ")"));
  }
  try {
    return TorusPointSet(dim, std::move(flat));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("invalid point data: ") + e.what());
  }
}

inline TorusPointSet read_points_csv(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open point file: " + path);
  return read_points_csv(is);
}

}  // namespace ppclab
