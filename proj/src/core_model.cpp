#include "linecolor/core_model.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace linecolor {

RestrictionArray::RestrictionArray(std::size_t rows, std::size_t cols,
                                   std::vector<std::vector<Rational>> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (cols_ == 0)
    throw std::invalid_argument("RestrictionArray: need at least one column");
  if (entries_.size() != rows_)
    throw std::invalid_argument("RestrictionArray: row count mismatch");
  for (const auto& row : entries_) {
    if (row.size() != cols_)
      throw std::invalid_argument("RestrictionArray: ragged row");
    for (const auto& v : row)
      if (!v.is_positive())
        throw std::invalid_argument("RestrictionArray: entries must be positive");
  }
}

RestrictionArray RestrictionArray::from_rows(
    std::vector<std::vector<Rational>> rows_in, std::size_t cols_if_empty) {
  const std::size_t k = rows_in.size();
  const std::size_t m = k == 0 ? cols_if_empty : rows_in.front().size();
  return RestrictionArray(k, m, std::move(rows_in));
}

std::vector<Rational> RestrictionArray::column(std::size_t col) const {
  std::vector<Rational> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(entries_[i][col]);
  std::sort(out.begin(), out.end());
  return out;
}

PointSet PointSet::from_values(std::vector<Rational> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  PointSet s;
  s.points_ = std::move(values);
  return s;
}

bool PointSet::contains(const Rational& x) const {
  return std::binary_search(points_.begin(), points_.end(), x);
}

std::optional<int> Coloring::color_of(const Rational& point) const {
  auto it = colors_.find(point);
  if (it == colors_.end()) return std::nullopt;
  return it->second;
}

std::size_t max_restriction_spread(const RestrictionArray& d) {
  if (d.rows() == 0) return 0;
  // value -> set of columns containing it
  std::map<Rational, std::set<std::size_t>> columns_of;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      columns_of[d.entry(i, j)].insert(j);
  std::size_t best = 0;
  for (const auto& [value, cols] : columns_of) best = std::max(best, cols.size());
  return best;
}

std::set<Rational> distinct_restrictions(const RestrictionArray& d) {
  std::set<Rational> out;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j) out.insert(d.entry(i, j));
  return out;
}

std::vector<Violation> verify_coloring(const PointSet& s, const Coloring& t,
                                       const RestrictionArray& d) {
  const int m = static_cast<int>(d.cols());
  std::vector<int> color_at(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    auto c = t.color_of(s[i]);
    if (!c)
      throw std::invalid_argument("verify_coloring: point " + s[i].str() +
                                  " is uncolored");
    if (*c < 1 || *c > m)
      throw std::invalid_argument("verify_coloring: color " + std::to_string(*c) +
                                  " out of range at point " + s[i].str());
    color_at[i] = *c;
  }

  // distance value -> (row, col) occurrences, sorted by (col, row) so the
  // emitted order is (x, y, color, row) without a final sort.
  std::map<Rational, std::vector<std::pair<int, int>>> occurrences;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      occurrences[d.entry(i, j)].push_back(
          {static_cast<int>(j), static_cast<int>(i)});
  for (auto& [value, occ] : occurrences) std::sort(occ.begin(), occ.end());

  std::vector<Violation> out;
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      if (color_at[a] != color_at[b]) continue;
      const Rational gap = s[b] - s[a];
      auto it = occurrences.find(gap);
      if (it == occurrences.end()) continue;
      for (const auto& [col, row] : it->second) {
        if (col + 1 != color_at[a]) continue;
        out.push_back(Violation{s[a], s[b], color_at[a], gap, row + 1});
      }
    }
  }
  return out;
}

std::pair<RestrictionArray, PointSet> scale_instance(const RestrictionArray& d,
                                                     const PointSet& s,
                                                     const Rational& c) {
  if (!c.is_positive())
    throw std::invalid_argument("scale_instance: factor must be positive");
  std::vector<std::vector<Rational>> entries(d.rows());
  for (std::size_t i = 0; i < d.rows(); ++i) {
    entries[i].reserve(d.cols());
    for (std::size_t j = 0; j < d.cols(); ++j)
      entries[i].push_back(d.entry(i, j) * c);
  }
  std::vector<Rational> points;
  points.reserve(s.size());
  for (const auto& x : s) points.push_back(x * c);
  return {RestrictionArray(d.rows(), d.cols(), std::move(entries)),
          PointSet::from_values(std::move(points))};
}

CanonicalInstance canonicalize(const RestrictionArray& d, const PointSet& s) {
  BigInt factor = 1;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      factor = big_lcm(factor, d.entry(i, j).den());
  for (const auto& x : s) factor = big_lcm(factor, x.den());
  auto [dd, ss] = scale_instance(d, s, Rational(factor));
  return CanonicalInstance{std::move(dd), std::move(ss), std::move(factor)};
}

}  // namespace linecolor
