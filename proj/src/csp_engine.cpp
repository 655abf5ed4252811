#include "csp_engine.hpp"

#include <algorithm>

namespace linecolor::detail {

void CspProblem::add_pair(int a, int b, const ColorMask& mask) {
  if (a > b) std::swap(a, b);
  auto key = std::make_pair(a, b);
  auto it = pair_index_.find(key);
  if (it != pair_index_.end()) {
    pair_masks[it->second].merge(mask);
    return;
  }
  const int idx = static_cast<int>(pair_masks.size());
  pair_index_.emplace(key, idx);
  pair_masks.push_back(mask);
  if (static_cast<int>(adjacency.size()) < num_vars) adjacency.resize(num_vars);
  adjacency[a].push_back({b, idx});
  adjacency[b].push_back({a, idx});
}

namespace {

struct SearchState {
  const CspProblem& problem;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  int max_depth = 0;
  bool budget_hit = false;

  int n;
  int m;
  std::vector<int> assigned;          // 0 = none, else 1-based color
  std::vector<int> exclusion_count;   // n*m, assigned neighbors forbidding c
  std::vector<int> available;         // colors with exclusion_count == 0
  std::vector<std::pair<int, int>> trail;  // (var, color) exclusion log

  explicit SearchState(const CspProblem& p, std::uint64_t b)
      : problem(p), budget(b), n(p.num_vars), m(p.num_colors),
        assigned(p.num_vars, 0), exclusion_count(std::size_t(p.num_vars) * p.num_colors, 0),
        available(p.num_vars, p.num_colors) {}

  int& excl(int var, int color0) { return exclusion_count[std::size_t(var) * m + color0]; }

  // Applies base-forbidden colors; false if some variable starts wiped out.
  bool init() {
    if (problem.base_forbidden.empty()) return n == 0 || m > 0;
    for (int v = 0; v < n; ++v) {
      for (int c = 0; c < m; ++c) {
        if (problem.base_forbidden[v].test(c)) {
          ++excl(v, c);
          --available[v];
        }
      }
      if (available[v] == 0) return false;
    }
    return true;
  }

  bool propagate(int var, int color0) {
    bool ok = true;
    if (static_cast<std::size_t>(var) >= problem.adjacency.size()) return true;
    for (const auto& [other, pair_idx] : problem.adjacency[var]) {
      if (assigned[other] != 0) continue;
      if (!problem.pair_masks[pair_idx].test(color0)) continue;
      if (excl(other, color0)++ == 0) {
        if (--available[other] == 0) ok = false;
      }
      trail.push_back({other, color0});
    }
    return ok;
  }

  void undo_to(std::size_t mark) {
    while (trail.size() > mark) {
      const auto [var, color0] = trail.back();
      trail.pop_back();
      if (--excl(var, color0) == 0) ++available[var];
    }
  }

  bool search(int var) {
    if (var == n) return true;
    max_depth = std::max(max_depth, var + 1);
    for (int c = 0; c < m; ++c) {
      if (excl(var, c) != 0) continue;
      if (++nodes > budget) {
        budget_hit = true;
        return false;
      }
      assigned[var] = c + 1;
      const std::size_t mark = trail.size();
      if (propagate(var, c)) {
        if (search(var + 1)) return true;
        if (budget_hit) {
          undo_to(mark);
          assigned[var] = 0;
          return false;
        }
      }
      undo_to(mark);
      assigned[var] = 0;
    }
    return false;
  }
};

}  // namespace

CspResult solve_lex_first(const CspProblem& problem, std::uint64_t node_budget) {
  CspResult result;
  SearchState state(problem, node_budget);
  if (problem.num_vars == 0) {
    result.status = CspStatus::Sat;
    return result;
  }
  if (problem.num_colors == 0) {
    result.status = CspStatus::Unsat;
    return result;
  }
  if (!state.init()) {
    result.status = CspStatus::Unsat;
    return result;
  }
  const bool found = state.search(0);
  result.nodes = state.nodes;
  result.max_depth = state.max_depth;
  if (found) {
    result.status = CspStatus::Sat;
    result.colors = state.assigned;
  } else if (state.budget_hit) {
    result.status = CspStatus::BudgetExhausted;
  } else {
    result.status = CspStatus::Unsat;
  }
  return result;
}

CspProblem build_point_csp(const PointSet& s, const RestrictionArray& d) {
  CspProblem problem;
  problem.num_vars = static_cast<int>(s.size());
  problem.num_colors = static_cast<int>(d.cols());
  problem.adjacency.resize(problem.num_vars);

  // restriction value -> mask of columns restricting it
  std::map<Rational, ColorMask> columns_of;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) {
      auto [it, inserted] =
          columns_of.try_emplace(d.entry(i, j), ColorMask(problem.num_colors));
      it->second.set(static_cast<int>(j));
    }
  }
  for (std::size_t a = 0; a < s.size(); ++a) {
    for (std::size_t b = a + 1; b < s.size(); ++b) {
      auto it = columns_of.find(s[b] - s[a]);
      if (it == columns_of.end()) continue;
      problem.add_pair(static_cast<int>(a), static_cast<int>(b), it->second);
    }
  }
  return problem;
}

}  // namespace linecolor::detail
