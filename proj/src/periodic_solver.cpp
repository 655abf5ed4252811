#include "linecolor/periodic_solver.hpp"

#include "csp_engine.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace linecolor {

namespace {

void require_integer_entries(const RestrictionArray& d, const char* who) {
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (!d.entry(i, j).is_integer())
        throw std::invalid_argument(std::string(who) +
                                    ": non-integer entry; canonicalize first");
}

void require_well_formed(const PeriodicColoring& p, std::size_t m) {
  if (p.period < 1)
    throw std::invalid_argument("PeriodicColoring: period must be >= 1");
  if (p.colors.size() != static_cast<std::size_t>(p.period))
    throw std::invalid_argument("PeriodicColoring: color vector length != period");
  for (int c : p.colors)
    if (c < 1 || c > static_cast<int>(m))
      throw std::invalid_argument("PeriodicColoring: color " + std::to_string(c) +
                                  " out of range");
}

}  // namespace

std::vector<Violation> verify_periodic(const PeriodicColoring& p,
                                       const RestrictionArray& d) {
  require_integer_entries(d, "verify_periodic");
  require_well_formed(p, d.cols());

  const BigInt period(p.period);
  std::vector<Violation> out;
  for (int r = 0; r < p.period; ++r) {
    for (std::size_t i = 0; i < d.rows(); ++i) {
      for (std::size_t j = 0; j < d.cols(); ++j) {
        const int color = static_cast<int>(j) + 1;
        if (p.colors[static_cast<std::size_t>(r)] != color) continue;
        const BigInt& dist = d.entry(i, j).num();
        const auto partner =
            static_cast<std::size_t>(BigInt((BigInt(r) + dist) % period));
        if (p.colors[partner] != color) continue;
        out.push_back(Violation{Rational(r), Rational(BigInt(r) + dist), color,
                                d.entry(i, j), static_cast<int>(i) + 1});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

detail::CspProblem build_period_csp(const RestrictionArray& d, int period) {
  detail::CspProblem problem;
  problem.num_vars = period;
  problem.num_colors = static_cast<int>(d.cols());
  problem.adjacency.resize(problem.num_vars);

  // distinct value -> columns restricting it
  std::map<BigInt, detail::ColorMask> columns_of;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) {
      auto [it, inserted] = columns_of.try_emplace(d.entry(i, j).num(),
                                                   detail::ColorMask(problem.num_colors));
      it->second.set(static_cast<int>(j));
    }
  }

  detail::ColorMask everywhere_forbidden(problem.num_colors);
  bool have_base = false;
  for (const auto& [value, mask] : columns_of) {
    const int dm = static_cast<int>(BigInt(value % period));
    if (dm == 0) {
      // x and x + value are distinct integers in the same residue class.
      everywhere_forbidden.merge(mask);
      have_base = true;
      continue;
    }
    for (int r = 0; r < period; ++r)
      problem.add_pair(r, (r + dm) % period, mask);
  }
  if (have_base)
    problem.base_forbidden.assign(static_cast<std::size_t>(period),
                                  everywhere_forbidden);
  return problem;
}

}  // namespace

PeriodicSearchResult find_periodic(const RestrictionArray& d, int p_max,
                                   std::uint64_t node_budget) {
  require_integer_entries(d, "find_periodic");
  if (p_max < 1)
    throw std::invalid_argument("find_periodic: p_max must be >= 1");

  PeriodicSearchResult result;
  for (int p = 1; p <= p_max; ++p) {
    const auto problem = build_period_csp(d, p);
    const auto raw = detail::solve_lex_first(problem, node_budget);
    result.nodes += raw.nodes;
    if (raw.status == detail::CspStatus::BudgetExhausted) {
      result.status = PeriodicStatus::BudgetExhausted;
      result.budget_period = p;
      return result;
    }
    if (raw.status == detail::CspStatus::Sat) {
      PeriodicColoring coloring{p, raw.colors};
      if (!verify_periodic(coloring, d).empty())
        throw std::logic_error("find_periodic: coloring failed re-verification");
      result.status = PeriodicStatus::Found;
      result.coloring = std::move(coloring);
      return result;
    }
  }
  result.status = PeriodicStatus::None;
  return result;
}

PeriodicityReport periodicity_experiment(
    const std::vector<RestrictionArray>& family, int radius, int p_max,
    std::uint64_t node_budget) {
  PeriodicityReport report;
  report.radius = radius;
  report.p_max = p_max;
  for (const auto& array : family) {
    PeriodicityRecord record;
    record.array = array;
    try {
      record.window = find_unsat_window(array, radius, node_budget);
      record.window_found = record.window.found;
    } catch (const std::runtime_error& e) {
      record.window_error = true;
      record.window_error_message = e.what();
    }

    const auto periodic = find_periodic(array, p_max, node_budget);
    record.periodic_status = periodic.status;
    record.periodic = periodic.coloring;

    if (record.window_found && record.periodic_status == PeriodicStatus::Found)
      throw std::logic_error(
          "periodicity_experiment: array classified both uncolorable and "
          "periodically colored");

    record.discrepant = !record.window_found && !record.window_error &&
                        record.periodic_status == PeriodicStatus::None;
    if (record.discrepant)
      report.discrepant_indices.push_back(report.records.size());
    report.records.push_back(std::move(record));
  }
  return report;
}

namespace {

void enumerate_columns(int k, int entry_max, int min_value,
                       std::vector<Rational>& column,
                       std::vector<std::vector<Rational>>& out) {
  if (static_cast<int>(column.size()) == k) {
    out.push_back(column);
    return;
  }
  for (int v = min_value; v <= entry_max; ++v) {
    column.push_back(Rational(v));
    enumerate_columns(k, entry_max, v, column, out);
    column.pop_back();
  }
}

void enumerate_column_multisets(const std::vector<std::vector<Rational>>& columns,
                                std::size_t m, std::size_t min_index,
                                std::vector<std::size_t>& chosen,
                                std::vector<std::vector<std::size_t>>& out) {
  if (chosen.size() == m) {
    out.push_back(chosen);
    return;
  }
  for (std::size_t i = min_index; i < columns.size(); ++i) {
    chosen.push_back(i);
    enumerate_column_multisets(columns, m, i, chosen, out);
    chosen.pop_back();
  }
}

}  // namespace

std::vector<RestrictionArray> enumerate_canonical_arrays(std::size_t k,
                                                         std::size_t m,
                                                         int entry_max) {
  if (k < 1 || m < 1 || entry_max < 1)
    throw std::invalid_argument("enumerate_canonical_arrays: bad parameters");
  std::vector<std::vector<Rational>> columns;
  std::vector<Rational> column;
  enumerate_columns(static_cast<int>(k), entry_max, 1, column, columns);

  std::vector<std::vector<std::size_t>> selections;
  std::vector<std::size_t> chosen;
  enumerate_column_multisets(columns, m, 0, chosen, selections);

  std::vector<RestrictionArray> out;
  out.reserve(selections.size());
  for (const auto& sel : selections) {
    std::vector<std::vector<Rational>> rows(k, std::vector<Rational>());
    for (auto& row : rows) row.reserve(m);
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t i = 0; i < k; ++i) rows[i].push_back(columns[sel[j]][i]);
    out.push_back(RestrictionArray(k, m, std::move(rows)));
  }
  return out;
}

}  // namespace linecolor
