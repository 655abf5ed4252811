#pragma once

#include "linecolor/core_model.hpp"
#include "linecolor/periodic_solver.hpp"

#include <array>
#include <optional>
#include <vector>

namespace linecolor {

// A finite point set whose pairwise distances take at most `level` values.
// Exact sets carry rational coordinates and exact squared distances; polygon
// sets carry float coordinates and distances distinguished up to `tolerance`
// (they are used only for counting distinct distances, never fed into the
// exact coloring pipeline).
struct KDistanceSet {
  int dimension = 0;  // affine dimension the points span
  int level = 0;      // k
  bool exact = true;

  std::vector<std::vector<Rational>> points;           // exact case
  std::vector<std::array<double, 2>> float_points;     // polygon case
  std::vector<Rational> distinct_squared_distances;    // exact, ascending
  std::vector<double> distinct_distances;              // float, ascending
  double tolerance = 0.0;

  std::size_t size() const {
    return exact ? points.size() : float_points.size();
  }
};

// C(n+1, k), the guaranteed size of a k-distance set in n dimensions;
// any set that large forces more than size-1 colors. Requires 1<=k<=n+1.
BigInt lower_bound_binomial(int n, int k);

// The C(n+1, k) characteristic 0/1 vectors of the k-subsets of {1,...,n+1}.
// They lie in the hyperplane sum(x)=k, hence span only n dimensions, and
// their squared distances are the even numbers 2(k - |intersection|), at
// most k distinct values. Requires 1 <= k <= n.
KDistanceSet hypersimplex_set(int n, int k);

// The 2k+1 vertices of a regular polygon on the unit circle: exactly k
// distinct chord lengths under tolerance 1e-9.
KDistanceSet polygon_set(int k);

// The constant-column array derived from a k-distance set: every column
// lists all realized distance values, so every pair of source points
// conflicts in every color; with one fewer column than points, some pair
// must share a color. One-dimensional sources use true (rational) distances
// and are solver-checkable; higher-dimensional exact sources have irrational
// distances, so their entries are the squared distances instead — an
// injective relabeling that leaves the conflict pattern (hence colorability)
// unchanged.
struct WitnessInstance {
  KDistanceSet source;
  RestrictionArray array;
  bool entries_are_squared = false;
  // exercised lazily: decide_finite cross-check for 1-D sources
};

WitnessInstance witness_from_kdistance(const KDistanceSet& s);

// Structural validity of the pigeonhole claim: more points than colors, and
// every realized pairwise distance present in every column.
bool pigeonhole_certificate(const WitnessInstance& w);

// 1-D sources only: the points of the witness as a PointSet.
PointSet witness_points(const WitnessInstance& w);

enum class ArrayVerdict { UnsatWindow, PeriodicSat, Unresolved, Error };

struct ChiSearchRecord {
  RestrictionArray array;
  ArrayVerdict verdict = ArrayVerdict::Unresolved;
  std::optional<WindowReport> window;        // UnsatWindow
  std::optional<PeriodicColoring> periodic;  // PeriodicSat
  std::string error_message;                 // Error (budget overruns)
};

struct ChiSearchReport {
  int entry_max = 0;
  int radius = 0;
  int p_max = 0;
  std::size_t columns = 3;
  std::vector<ChiSearchRecord> records;
  std::vector<std::size_t> unsat_indices;
  std::vector<std::size_t> unresolved_indices;
};

// Enumerates the canonical 2 x `columns` integer arrays with entries up to
// entry_max and classifies each by window search then period search. Every
// 2x3 array with an uncolorable window independently certifies that three
// colors cannot suffice for two-row arrays over the integers; a 2x4 one
// (columns = 4, the companion mode) would push the bound past four.
// Cross-soundness is asserted: no array is ever recorded both uncolorable
// and periodically colored.
ChiSearchReport chi2z_search(int entry_max, int radius, int p_max,
                             std::size_t columns = 3,
                             std::uint64_t node_budget = kDefaultNodeBudget);

}  // namespace linecolor
