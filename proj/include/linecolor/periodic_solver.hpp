#pragma once

#include "linecolor/core_model.hpp"
#include "linecolor/finite_solver.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace linecolor {

// A coloring of all integers of the form T(x) = colors[x mod period].
// Valid iff for every column j, restriction d in column j and residue r:
// not (colors[r] == j and colors[(r + d) mod period] == j). A restriction
// d == 0 (mod period) therefore bans color j outright: x and x + d are
// distinct integers in the same residue class.
struct PeriodicColoring {
  int period = 0;
  std::vector<int> colors;  // length == period, values 1..m

  int color_at(long long x) const {
    long long r = x % period;
    if (r < 0) r += period;
    return colors[static_cast<std::size_t>(r)];
  }

  bool operator==(const PeriodicColoring& o) const {
    return period == o.period && colors == o.colors;
  }
};

// Violations of the induced coloring of the integers, reported as concrete
// integer pairs (x = residue in [0, period), y = x + d), ordered by
// (x, y, color, row). Empty == the induced coloring is valid on all of Z.
// Requires integer entries; malformed colorings throw std::invalid_argument.
std::vector<Violation> verify_periodic(const PeriodicColoring& p,
                                       const RestrictionArray& d);

enum class PeriodicStatus { Found, None, BudgetExhausted };

struct PeriodicSearchResult {
  PeriodicStatus status = PeriodicStatus::None;
  std::optional<PeriodicColoring> coloring;  // present iff Found
  int budget_period = 0;                     // period being searched when the budget died
  std::uint64_t nodes = 0;                   // total across all periods tried
};

// Smallest-period periodic coloring with period <= p_max, ties broken by the
// lexicographically least color vector. None only after every period up to
// p_max has been exhausted; a blown budget is reported as its own status.
PeriodicSearchResult find_periodic(const RestrictionArray& d, int p_max,
                                   std::uint64_t node_budget = kDefaultNodeBudget);

// One array's worth of evidence for the periodicity experiment.
struct PeriodicityRecord {
  RestrictionArray array;

  bool window_found = false;
  WindowReport window;
  bool window_error = false;  // budget overrun; message kept, never dropped
  std::string window_error_message;

  PeriodicStatus periodic_status = PeriodicStatus::None;
  std::optional<PeriodicColoring> periodic;

  // Colorable as far as the window search could see, yet no period <= p_max:
  // flagged for manual study, never auto-classified as a counterexample.
  bool discrepant = false;
};

struct PeriodicityReport {
  int radius = 0;
  int p_max = 0;
  std::vector<PeriodicityRecord> records;
  std::vector<std::size_t> discrepant_indices;
};

// Runs both the window search and the period search on every array of the
// family and aggregates. An array reported both window-uncolorable and
// periodically colored would be a soundness bug and throws std::logic_error.
PeriodicityReport periodicity_experiment(
    const std::vector<RestrictionArray>& family, int radius, int p_max,
    std::uint64_t node_budget = kDefaultNodeBudget);

// All k x m arrays with integer entries in [1, entry_max], one representative
// per equivalence class under column permutation and within-column reordering
// (each column a nondecreasing vector, columns in nondecreasing lex order).
std::vector<RestrictionArray> enumerate_canonical_arrays(std::size_t k,
                                                         std::size_t m,
                                                         int entry_max);

}  // namespace linecolor
