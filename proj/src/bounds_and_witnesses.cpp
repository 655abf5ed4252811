#include "linecolor/bounds_and_witnesses.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace linecolor {

BigInt lower_bound_binomial(int n, int k) {
  if (n < 1 || k < 1 || k > n + 1)
    throw std::invalid_argument("lower_bound_binomial: need 1 <= k <= n+1");
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= BigInt(n + 2 - i);
    out /= BigInt(i);  // exact: C(n+1, i) is an integer
  }
  return out;
}

namespace {

void enumerate_subsets(int universe, int k, int first, std::vector<int>& acc,
                       std::vector<std::vector<int>>& out) {
  if (static_cast<int>(acc.size()) == k) {
    out.push_back(acc);
    return;
  }
  for (int v = first; v <= universe; ++v) {
    acc.push_back(v);
    enumerate_subsets(universe, k, v + 1, acc, out);
    acc.pop_back();
  }
}

Rational squared_distance(const std::vector<Rational>& a,
                          const std::vector<Rational>& b) {
  Rational sum(0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Rational diff = a[i] - b[i];
    sum += diff * diff;
  }
  return sum;
}

}  // namespace

KDistanceSet hypersimplex_set(int n, int k) {
  if (n < 1 || k < 1 || k > n)
    throw std::invalid_argument("hypersimplex_set: need 1 <= k <= n");

  std::vector<std::vector<int>> subsets;
  std::vector<int> acc;
  enumerate_subsets(n + 1, k, 1, acc, subsets);

  KDistanceSet out;
  out.dimension = n;
  out.level = k;
  out.exact = true;
  out.points.reserve(subsets.size());
  for (const auto& subset : subsets) {
    std::vector<Rational> coords(static_cast<std::size_t>(n) + 1, Rational(0));
    for (int v : subset) coords[static_cast<std::size_t>(v) - 1] = Rational(1);
    out.points.push_back(std::move(coords));
  }

  std::set<Rational> squares;
  for (std::size_t a = 0; a < out.points.size(); ++a)
    for (std::size_t b = a + 1; b < out.points.size(); ++b)
      squares.insert(squared_distance(out.points[a], out.points[b]));
  out.distinct_squared_distances.assign(squares.begin(), squares.end());
  if (out.distinct_squared_distances.size() > static_cast<std::size_t>(k))
    throw std::logic_error("hypersimplex_set: more than k distinct distances");
  return out;
}

KDistanceSet polygon_set(int k) {
  if (k < 1) throw std::invalid_argument("polygon_set: k must be >= 1");
  const int vertices = 2 * k + 1;

  KDistanceSet out;
  out.dimension = 2;
  out.level = k;
  out.exact = false;
  out.tolerance = 1e-9;
  out.float_points.reserve(static_cast<std::size_t>(vertices));
  for (int j = 0; j < vertices; ++j) {
    const double angle = 2.0 * std::numbers::pi * j / vertices;
    out.float_points.push_back({std::cos(angle), std::sin(angle)});
  }

  std::vector<double> distances;
  for (int a = 0; a < vertices; ++a) {
    for (int b = a + 1; b < vertices; ++b) {
      const double dx = out.float_points[a][0] - out.float_points[b][0];
      const double dy = out.float_points[a][1] - out.float_points[b][1];
      distances.push_back(std::hypot(dx, dy));
    }
  }
  std::sort(distances.begin(), distances.end());
  for (double d : distances) {
    if (out.distinct_distances.empty() ||
        d - out.distinct_distances.back() > out.tolerance)
      out.distinct_distances.push_back(d);
  }
  return out;
}

WitnessInstance witness_from_kdistance(const KDistanceSet& s) {
  if (!s.exact)
    throw std::invalid_argument(
        "witness_from_kdistance: float sources have no exact distance values");
  if (s.size() < 2)
    throw std::invalid_argument("witness_from_kdistance: need at least 2 points");

  const bool one_dimensional = s.points.front().size() == 1;
  std::set<Rational> values;
  if (one_dimensional) {
    for (std::size_t a = 0; a < s.points.size(); ++a)
      for (std::size_t b = a + 1; b < s.points.size(); ++b)
        values.insert((s.points[a][0] - s.points[b][0]).abs());
  } else {
    for (std::size_t a = 0; a < s.points.size(); ++a)
      for (std::size_t b = a + 1; b < s.points.size(); ++b)
        values.insert(squared_distance(s.points[a], s.points[b]));
  }

  const std::size_t t = values.size();
  const std::size_t m = s.size() - 1;
  std::vector<std::vector<Rational>> rows(t, std::vector<Rational>());
  for (auto& row : rows) row.reserve(m);
  std::size_t i = 0;
  for (const auto& v : values) {
    rows[i].assign(m, v);
    ++i;
  }

  WitnessInstance out{s, RestrictionArray(t, m, std::move(rows)),
                      !one_dimensional};
  return out;
}

bool pigeonhole_certificate(const WitnessInstance& w) {
  const auto& s = w.source;
  if (s.size() < 2 || s.size() != w.array.cols() + 1) return false;

  std::set<Rational> column_values;
  for (std::size_t i = 0; i < w.array.rows(); ++i)
    column_values.insert(w.array.entry(i, 0));
  // every column must equal the full value set
  for (std::size_t j = 0; j < w.array.cols(); ++j) {
    std::set<Rational> col;
    for (std::size_t i = 0; i < w.array.rows(); ++i)
      col.insert(w.array.entry(i, j));
    if (col != column_values) return false;
  }
  // every realized pairwise value must be restricted in every column
  const bool one_dimensional = !w.entries_are_squared;
  for (std::size_t a = 0; a < s.points.size(); ++a) {
    for (std::size_t b = a + 1; b < s.points.size(); ++b) {
      const Rational v = one_dimensional
                             ? (s.points[a][0] - s.points[b][0]).abs()
                             : squared_distance(s.points[a], s.points[b]);
      if (column_values.find(v) == column_values.end()) return false;
    }
  }
  return true;
}

PointSet witness_points(const WitnessInstance& w) {
  if (w.entries_are_squared || w.source.points.empty() ||
      w.source.points.front().size() != 1)
    throw std::invalid_argument("witness_points: source is not one-dimensional");
  std::vector<Rational> values;
  values.reserve(w.source.points.size());
  for (const auto& p : w.source.points) values.push_back(p[0]);
  return PointSet::from_values(std::move(values));
}

ChiSearchReport chi2z_search(int entry_max, int radius, int p_max,
                             std::size_t columns, std::uint64_t node_budget) {
  if (entry_max < 1 || radius < 1 || p_max < 1 || columns < 1)
    throw std::invalid_argument("chi2z_search: bad parameters");

  ChiSearchReport report;
  report.entry_max = entry_max;
  report.radius = radius;
  report.p_max = p_max;
  report.columns = columns;

  const auto family = enumerate_canonical_arrays(2, columns, entry_max);
  for (const auto& array : family) {
    ChiSearchRecord record;
    record.array = array;
    bool window_found = false;
    try {
      const auto window = find_unsat_window(array, radius, node_budget);
      if (window.found) {
        window_found = true;
        record.verdict = ArrayVerdict::UnsatWindow;
        record.window = window;
      }
    } catch (const std::exception& e) {
      record.verdict = ArrayVerdict::Error;
      record.error_message = e.what();
    }

    if (record.verdict != ArrayVerdict::Error) {
      const auto periodic = find_periodic(array, p_max, node_budget);
      if (periodic.status == PeriodicStatus::Found) {
        if (window_found)
          throw std::logic_error(
              "chi2z_search: array classified both uncolorable and periodic");
        record.verdict = ArrayVerdict::PeriodicSat;
        record.periodic = periodic.coloring;
      } else if (!window_found) {
        record.verdict = periodic.status == PeriodicStatus::BudgetExhausted
                             ? ArrayVerdict::Error
                             : ArrayVerdict::Unresolved;
        if (periodic.status == PeriodicStatus::BudgetExhausted)
          record.error_message = "period search budget exhausted";
      }
    }

    if (record.verdict == ArrayVerdict::UnsatWindow)
      report.unsat_indices.push_back(report.records.size());
    if (record.verdict == ArrayVerdict::Unresolved)
      report.unresolved_indices.push_back(report.records.size());
    report.records.push_back(std::move(record));
  }
  return report;
}

}  // namespace linecolor
