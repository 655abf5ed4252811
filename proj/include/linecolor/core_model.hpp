#pragma once

#include "linecolor/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <tuple>
#include <vector>

namespace linecolor {

// A k x m array of strictly positive restriction values. Column j holds the
// distances forbidden for color j (two points at such a distance must not
// both receive color j). Row order within a column carries no meaning: a
// column is a multiset. k = 0 (no restrictions) is allowed; m >= 1 always.
class RestrictionArray {
 public:
  RestrictionArray() : rows_(0), cols_(1) {}  // the empty no-restriction array

  RestrictionArray(std::size_t rows, std::size_t cols,
                   std::vector<std::vector<Rational>> entries);

  // Convenience: build from a row-major initializer, validating shape.
  static RestrictionArray from_rows(std::vector<std::vector<Rational>> rows_in,
                                    std::size_t cols_if_empty = 1);

  std::size_t rows() const { return rows_; }  // k
  std::size_t cols() const { return cols_; }  // m

  const Rational& entry(std::size_t row, std::size_t col) const {
    return entries_[row][col];
  }

  const std::vector<std::vector<Rational>>& entries() const { return entries_; }

  // Multiset of the entries of one column, sorted ascending.
  std::vector<Rational> column(std::size_t col) const;

  bool operator==(const RestrictionArray& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::vector<Rational>> entries_;  // rows_ x cols_
};

// A finite set of rational points on the line, stored strictly increasing.
class PointSet {
 public:
  PointSet() = default;

  // Sorts; duplicate values collapse (set semantics).
  static PointSet from_values(std::vector<Rational> values);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Rational& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Rational>& points() const { return points_; }

  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  bool contains(const Rational& x) const;

  bool operator==(const PointSet& o) const { return points_ == o.points_; }

 private:
  std::vector<Rational> points_;
};

// Total assignment of points to color indices 1..m.
class Coloring {
 public:
  Coloring() = default;

  void assign(const Rational& point, int color) { colors_[point] = color; }
  std::optional<int> color_of(const Rational& point) const;

  std::size_t size() const { return colors_.size(); }
  const std::map<Rational, int>& colors() const { return colors_; }

  bool operator==(const Coloring& o) const { return colors_ == o.colors_; }

 private:
  std::map<Rational, int> colors_;
};

// One forbidden monochromatic pair: x < y, both colored `color`, and
// entry(row-1, color-1) == y - x. `color` and `row` are 1-based, matching
// the reported artifacts.
struct Violation {
  Rational x;
  Rational y;
  int color = 0;
  Rational distance;
  int row = 0;

  bool operator==(const Violation& o) const {
    return x == o.x && y == o.y && color == o.color && distance == o.distance &&
           row == o.row;
  }
  bool operator<(const Violation& o) const {
    return std::tie(x, y, color, row) < std::tie(o.x, o.y, o.color, o.row);
  }
};

// Largest number of columns in which any single restriction value appears.
// 0 when the array has no rows.
std::size_t max_restriction_spread(const RestrictionArray& d);

// The set of distinct entry values. For k >= 1 its size is at most
// k*m - max_restriction_spread(d) + 1.
std::set<Rational> distinct_restrictions(const RestrictionArray& d);

// Every violating (pair, color, row) tuple, ordered by (x, y, color, row).
// Empty result == the coloring is valid. A partial coloring or an
// out-of-range color index throws std::invalid_argument; malformed input is
// never reported as "valid".
std::vector<Violation> verify_coloring(const PointSet& s, const Coloring& t,
                                       const RestrictionArray& d);

// Multiply every entry and point by c > 0. Colorability is preserved and any
// coloring transfers verbatim.
std::pair<RestrictionArray, PointSet> scale_instance(const RestrictionArray& d,
                                                     const PointSet& s,
                                                     const Rational& c);

struct CanonicalInstance {
  RestrictionArray array;   // integer entries
  PointSet points;          // integer points
  BigInt factor;            // multiplier used (lcm of all denominators)
};

// Clear all denominators: multiply by the lcm of every entry and point
// denominator. Scaling back by 1/factor restores the input exactly.
CanonicalInstance canonicalize(const RestrictionArray& d, const PointSet& s);

}  // namespace linecolor
