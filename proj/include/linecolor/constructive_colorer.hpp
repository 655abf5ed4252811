#pragma once

#include "linecolor/core_model.hpp"
#include "linecolor/finite_solver.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace linecolor {

// A solver ran out of its explicitly configured resources. Distinct from
// Unsat everywhere; nothing is ever classified on the strength of a blown
// budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// values[i] is the recursively derived number of colors that suffices for
// any i-row array: values[0] = 1, values[i] = 32*i*values[i-1] - 16*i.
// Always at most 32^i * i!.
struct BoundSequence {
  std::vector<BigInt> values;  // size k+1

  const BigInt& back() const { return values.back(); }
};

BoundSequence bound_sequence(std::size_t k);

// 32^k * k!
BigInt closed_form_bound(std::size_t k);

// The quantities of the local-lemma colorability argument for an array:
// each bad event (a monochromatic restricted pair) has probability at most
// spread/m^2, the dependency graph has degree at most 4(km - spread + 1) - 2,
// and when 16*k*spread <= m the product 4*p*degree is below 1, so every
// finite point set is colorable.
struct LocalLemmaDiagnostics {
  std::size_t k = 0;
  std::size_t m = 0;
  std::size_t spread = 0;       // max_restriction_spread
  Rational event_probability;   // spread / m^2
  BigInt dependency_degree;     // 4(km - spread + 1) - 2
  Rational product;             // 4 * event_probability * dependency_degree
  bool guarantee = false;       // 16 * k * spread <= m
};

LocalLemmaDiagnostics local_lemma_diagnostics(const RestrictionArray& d);

// Partition by residue modulo the gcd g of the (integer) entries: two points
// in different classes differ by a non-multiple of g, so no restricted
// distance ever crosses classes and each class can be colored independently.
// With no entries at all the generated subgroup is {0} and every point is
// its own class. Classes are ordered by residue.
std::vector<PointSet> coset_partition(const PointSet& q,
                                      const RestrictionArray& d);

// First = points whose interval index floor(x/r) is even, second = odd.
// Two points in the same part are never exactly r apart: equal gaps of r
// land in adjacent intervals of opposite parity. Boundaries are half-open,
// so x = n*r belongs to interval n.
std::pair<PointSet, PointSet> split_by_interval_parity(const PointSet& q,
                                                       const Rational& r);

struct ResampleTrace {
  std::uint64_t rounds = 0;
  Coloring final;  // verified violation-free
  std::uint64_t seed = 0;
};

enum class ResampleStatus {
  Resampled,       // converged within the round cap
  FallbackSat,     // cap hit; the complete solver found a witness
  FallbackUnsat,   // cap hit; the instance is actually uncolorable
  FallbackBudget,  // cap hit and the complete solver blew its budget too
};

struct ResampleResult {
  ResampleStatus status = ResampleStatus::Resampled;
  std::optional<ResampleTrace> trace;        // iff Resampled
  std::optional<Coloring> fallback_witness;  // iff FallbackSat
  std::uint64_t rounds = 0;
  std::uint64_t seed = 0;

  const Coloring* coloring() const {
    if (trace) return &trace->final;
    if (fallback_witness) return &*fallback_witness;
    return nullptr;
  }
};

inline constexpr std::uint64_t kDefaultRoundCap = 100'000;

// Seeded random coloring, then repeatedly re-randomize the two points of the
// least violation (ordered by x, y, color, row) until none remains. Intended
// for the guarantee regime of local_lemma_diagnostics, where termination is
// near-certain; outside it the complete solver backs the contract.
ResampleResult resample_color(const PointSet& q, const RestrictionArray& d,
                              std::uint64_t seed,
                              std::uint64_t round_cap = kDefaultRoundCap,
                              std::uint64_t fallback_budget = kDefaultNodeBudget);

enum class LineColorStatus {
  Colored,         // pipeline ran; coloring verified
  FallbackSat,     // m below the bound; complete solver found a witness
  FallbackUnsat,   // m below the bound; instance uncolorable
  FallbackBudget,  // m below the bound; complete solver blew its budget
};

struct BranchRecord {
  int level = 0;
  std::size_t k = 0;
  std::size_t m = 0;
  char branch = '?';            // 'a' trivial, 'b' split, 'c' resample, 'f' fallback
  std::size_t spread = 0;       // k >= 1 branches
  Rational split_width;         // branch 'b': the repeated value split on
  std::size_t coset_classes = 0;  // branch 'c'
};

struct LineColorResult {
  LineColorStatus status = LineColorStatus::Colored;
  std::optional<Coloring> coloring;
  std::vector<BranchRecord> trace;
  std::uint64_t seed = 0;
};

// Recursive construction, for m >= bound_sequence(k).back():
//   k = 0            -> everything gets color 1.
//   spread >= 2*B[k-1] -> pick the smallest value r attaining the spread,
//                       drop one occurrence of r from each of the columns
//                       containing it, split the points at interval width r,
//                       and color the two parts recursively with the first
//                       and second B[k-1] of those columns.
//   spread < 2*B[k-1] -> then 16*k*spread <= m (checked at runtime): color
//                       each coset class independently by resampling.
// Exactly one branch applies at every level. The result is re-verified.
// With m below the bound the guarantee does not apply and the complete
// solver is used instead, labeled as a fallback in the trace.
LineColorResult color_line(const RestrictionArray& d, const PointSet& q,
                           std::uint64_t seed,
                           std::uint64_t round_cap = kDefaultRoundCap,
                           std::uint64_t fallback_budget = kDefaultNodeBudget);

}  // namespace linecolor
