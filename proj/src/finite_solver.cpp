#include "linecolor/finite_solver.hpp"

#include "csp_engine.hpp"

#include <stdexcept>
#include <string>

namespace linecolor {

namespace {

void require_integer_entries(const RestrictionArray& d, const char* who) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (!d.entry(i, j).is_integer())
        throw std::invalid_argument(std::string(who) +
                                    ": non-integer entry; canonicalize first");
}

}  // namespace

SolveResult decide_finite(const PointSet& s, const RestrictionArray& d,
                          std::uint64_t node_budget) {
  const auto problem = detail::build_point_csp(s, d);
  const auto raw = detail::solve_lex_first(problem, node_budget);

  SolveResult result;
  result.stats.nodes = raw.nodes;
  result.stats.max_depth = raw.max_depth;
  switch (raw.status) {
    case detail::CspStatus::Sat: {
      Coloring witness;
      for (std::size_t i = 0; i < s.size(); ++i) witness.assign(s[i], raw.colors[i]);
      if (!verify_coloring(s, witness, d).empty())
        throw std::logic_error("decide_finite: witness failed re-verification");
      result.status = SolveStatus::Sat;
      result.witness = std::move(witness);
      break;
    }
    case detail::CspStatus::Unsat:
      result.status = SolveStatus::Unsat;
      break;
    case detail::CspStatus::BudgetExhausted:
      result.status = SolveStatus::BudgetExhausted;
      break;
  }
  return result;
}

PointSet integer_window(long long lo, long long hi) {
  std::vector<Rational> points;
  points.reserve(static_cast<std::size_t>(hi >= lo ? hi - lo + 1 : 0));
  for (long long x = lo; x <= hi; ++x) points.emplace_back(x);
  return PointSet::from_values(std::move(points));
}

namespace {

// Proven verdict or abort; window validity may not rest on a blown budget.
bool window_unsat(const RestrictionArray& d, long long lo, long long hi,
                  std::uint64_t node_budget) {
  const auto result = decide_finite(integer_window(lo, hi), d, node_budget);
  if (result.status == SolveStatus::BudgetExhausted)
    throw std::runtime_error("find_unsat_window: node budget exhausted on [" +
                             std::to_string(lo) + "," + std::to_string(hi) + "]");
  return result.status == SolveStatus::Unsat;
}

}  // namespace

WindowReport find_unsat_window(const RestrictionArray& d, int radius_max,
                               std::uint64_t node_budget) {
  require_integer_entries(d, "find_unsat_window");
  if (radius_max < 1)
    throw std::invalid_argument("find_unsat_window: radius_max must be >= 1");

  WindowReport report;
  for (int r = 1; r <= radius_max; ++r) {
    report.radius_searched = r;
    if (!window_unsat(d, -r, r, node_budget)) continue;

    long long lo = -r, hi = r;
    while (lo < hi && window_unsat(d, lo + 1, hi, node_budget)) ++lo;
    while (lo < hi && window_unsat(d, lo, hi - 1, node_budget)) --hi;
    report.found = true;
    report.lo = lo;
    report.hi = hi;
    return report;
  }
  report.radius_searched = radius_max;
  return report;
}

RestrictionArray staircase_array(std::size_t k) {
  if (k < 1) throw std::invalid_argument("staircase_array: k must be >= 1");
  std::vector<std::vector<Rational>> rows(k);
  for (std::size_t i = 0; i < k; ++i)
    rows[i].assign(k, Rational(static_cast<long long>(i + 1)));
  return RestrictionArray(k, k, std::move(rows));
}

}  // namespace linecolor
