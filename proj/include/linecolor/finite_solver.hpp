#pragma once

#include "linecolor/core_model.hpp"

#include <cstdint>
#include <optional>

namespace linecolor {

enum class SolveStatus { Sat, Unsat, BudgetExhausted };

struct SearchStats {
  std::uint64_t nodes = 0;
  int max_depth = 0;
};

// Outcome of a complete decision. Sat carries a witness that has already been
// re-verified; Unsat means the search space was exhausted. A blown node
// budget is reported as its own status, never as Unsat.
struct SolveResult {
  SolveStatus status = SolveStatus::Unsat;
  std::optional<Coloring> witness;
  SearchStats stats;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 10'000'000;

// Complete decision procedure for colorability of a finite point set.
// Deterministic: points are assigned in ascending order, colors tried in
// ascending order, with forward-checking propagation.
SolveResult decide_finite(const PointSet& s, const RestrictionArray& d,
                          std::uint64_t node_budget = kDefaultNodeBudget);

struct WindowReport {
  bool found = false;
  long long lo = 0;  // valid iff found
  long long hi = 0;
  int radius_searched = 0;

  std::size_t width() const { return static_cast<std::size_t>(hi - lo + 1); }
};

// Searches symmetric integer windows [-r, r] of growing radius for one that
// cannot be colored; on success shrinks it until both one-point trims are
// colorable and returns it. Such a window certifies that no coloring of the
// whole integer line (hence of the rationals or reals) exists for d.
// Requires integer entries (canonicalize first). found == false only means
// no window within radius_max; it proves nothing about the integer line.
// A blown per-window node budget aborts with std::runtime_error rather than
// misreporting either way.
WindowReport find_unsat_window(const RestrictionArray& d, int radius_max,
                               std::uint64_t node_budget = kDefaultNodeBudget);

// The k x k array whose row i is constant i; witnesses that {0,...,k} needs
// more than k colors.
RestrictionArray staircase_array(std::size_t k);

// Integer interval helper shared by window search and experiments.
PointSet integer_window(long long lo, long long hi);

}  // namespace linecolor
