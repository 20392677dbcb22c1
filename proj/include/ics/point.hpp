#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ics {

/// Symbol string for shift spaces; entries are in {0, ..., k-1}.
using Word = std::vector<std::uint8_t>;

/// A point of a phase space. Interpretation depends on the space kind:
/// circle and interval points use `x`, planar points use `(x, y)`,
/// symbolic points use `word` (a finite prefix of an infinite sequence).
struct Point {
  double x = 0.0;
  double y = 0.0;
  Word word;

  Point() = default;
  explicit Point(double px) : x(px) {}
  Point(double px, double py) : x(px), y(py) {}
  explicit Point(Word w) : word(std::move(w)) {}
};

std::string to_string(const Point& p);

}  // namespace ics
