#include "linecolor/constructive_colorer.hpp"

#include "csp_engine.hpp"
#include "linecolor/rng.hpp"

#include <algorithm>
#include <iterator>
#include <map>
#include <stdexcept>

namespace linecolor {

BigInt closed_form_bound(std::size_t k) {
  BigInt out = 1;
  for (std::size_t i = 1; i <= k; ++i) out *= BigInt(32) * BigInt(i);
  return out;
}

BoundSequence bound_sequence(std::size_t k) {
  BoundSequence seq;
  seq.values.reserve(k + 1);
  seq.values.push_back(1);
  for (std::size_t i = 1; i <= k; ++i) {
    BigInt next = BigInt(32) * BigInt(i) * seq.values.back() - BigInt(16) * BigInt(i);
    if (next > closed_form_bound(i))
      throw std::logic_error("bound_sequence: closed form violated");
    seq.values.push_back(std::move(next));
  }
  return seq;
}

LocalLemmaDiagnostics local_lemma_diagnostics(const RestrictionArray& d) {
  if (d.rows() < 1)
    throw std::invalid_argument("local_lemma_diagnostics: need k >= 1");
  LocalLemmaDiagnostics out;
  out.k = d.rows();
  out.m = d.cols();
  out.spread = max_restriction_spread(d);
  const BigInt k(out.k), m(out.m), spread(out.spread);
  out.event_probability = Rational(spread, m * m);
  out.dependency_degree = BigInt(4) * (k * m - spread + 1) - 2;
  out.product = out.event_probability * Rational(out.dependency_degree) * Rational(4);
  out.guarantee = BigInt(16) * k * spread <= m;
  return out;
}

std::vector<PointSet> coset_partition(const PointSet& q,
                                      const RestrictionArray& d) {
  for (const auto& x : q)
    if (!x.is_integer())
      throw std::invalid_argument("coset_partition: non-integer point; canonicalize first");

  BigInt g = 0;
  for (std::size_t i = 0; i < d.rows(); ++i) {
    for (std::size_t j = 0; j < d.cols(); ++j) {
      if (!d.entry(i, j).is_integer())
        throw std::invalid_argument(
            "coset_partition: non-integer entry; canonicalize first");
      g = big_gcd(g, d.entry(i, j).num());
    }
  }

  std::map<BigInt, std::vector<Rational>> classes;
  if (g == 0) {
    // No restrictions: the generated subgroup is {0}, every point alone.
    std::vector<PointSet> out;
    for (const auto& x : q)
      out.push_back(PointSet::from_values({x}));
    return out;
  }
  for (const auto& x : q) {
    BigInt r = x.num() % g;
    if (r < 0) r += g;
    classes[r].push_back(x);
  }
  std::vector<PointSet> out;
  out.reserve(classes.size());
  for (auto& [residue, points] : classes)
    out.push_back(PointSet::from_values(std::move(points)));
  return out;
}

std::pair<PointSet, PointSet> split_by_interval_parity(const PointSet& q,
                                                       const Rational& r) {
  if (!r.is_positive())
    throw std::invalid_argument("split_by_interval_parity: width must be positive");
  std::vector<Rational> even, odd;
  for (const auto& x : q) {
    if (is_even(floor_quotient(x, r)))
      even.push_back(x);
    else
      odd.push_back(x);
  }
  return {PointSet::from_values(std::move(even)),
          PointSet::from_values(std::move(odd))};
}

namespace {

// Index of the first violating pair in (x, y) order, or -1. Pairs with b > a
// appear in adjacency[a] after all b < a entries, in ascending order.
std::pair<int, int> least_violation(const detail::CspProblem& problem,
                                    const std::vector<int>& colors) {
  for (int a = 0; a < problem.num_vars; ++a) {
    for (const auto& [b, pair_idx] : problem.adjacency[a]) {
      if (b < a) continue;
      if (colors[a] != colors[b]) continue;
      if (problem.pair_masks[pair_idx].test(colors[a] - 1)) return {a, b};
    }
  }
  return {-1, -1};
}

}  // namespace

ResampleResult resample_color(const PointSet& q, const RestrictionArray& d,
                              std::uint64_t seed, std::uint64_t round_cap,
                              std::uint64_t fallback_budget) {
  ResampleResult result;
  result.seed = seed;

  const int m = static_cast<int>(d.cols());
  const auto problem = detail::build_point_csp(q, d);
  Rng rng(seed);

  std::vector<int> colors(q.size());
  for (auto& c : colors) c = 1 + static_cast<int>(rng.below(m));

  for (;;) {
    const auto [a, b] = least_violation(problem, colors);
    if (a < 0) {
      Coloring final;
      for (std::size_t i = 0; i < q.size(); ++i) final.assign(q[i], colors[i]);
      if (!verify_coloring(q, final, d).empty())
        throw std::logic_error("resample_color: result failed re-verification");
      result.status = ResampleStatus::Resampled;
      result.trace = ResampleTrace{result.rounds, std::move(final), seed};
      return result;
    }
    if (result.rounds >= round_cap) break;
    ++result.rounds;
    colors[a] = 1 + static_cast<int>(rng.below(m));
    colors[b] = 1 + static_cast<int>(rng.below(m));
  }

  const auto fallback = decide_finite(q, d, fallback_budget);
  switch (fallback.status) {
    case SolveStatus::Sat:
      result.status = ResampleStatus::FallbackSat;
      result.fallback_witness = fallback.witness;
      break;
    case SolveStatus::Unsat:
      result.status = ResampleStatus::FallbackUnsat;
      break;
    case SolveStatus::BudgetExhausted:
      result.status = ResampleStatus::FallbackBudget;
      break;
  }
  return result;
}

namespace {

struct SubArray {
  RestrictionArray array;
  std::vector<std::size_t> original_columns;  // local column -> original column
};

// Smallest value attaining the spread, plus the columns containing it.
std::pair<Rational, std::vector<std::size_t>> spread_witness(
    const RestrictionArray& d) {
  std::map<Rational, std::set<std::size_t>> columns_of;
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      columns_of[d.entry(i, j)].insert(j);
  std::size_t best = 0;
  for (const auto& [value, cols] : columns_of) best = std::max(best, cols.size());
  for (const auto& [value, cols] : columns_of) {
    if (cols.size() == best)
      return {value, std::vector<std::size_t>(cols.begin(), cols.end())};
  }
  throw std::logic_error("spread_witness: empty array");
}

// The selected columns with one occurrence of `r` deleted from each.
SubArray delete_one_occurrence(const RestrictionArray& d,
                               const std::vector<std::size_t>& columns,
                               const Rational& r,
                               const std::vector<std::size_t>& orig_of_local) {
  const std::size_t k1 = d.rows() - 1;
  std::vector<std::vector<Rational>> rows(k1, std::vector<Rational>());
  for (auto& row : rows) row.reserve(columns.size());
  std::vector<std::size_t> originals;
  originals.reserve(columns.size());
  for (std::size_t col : columns) {
    bool dropped = false;
    std::size_t out_row = 0;
    for (std::size_t i = 0; i < d.rows(); ++i) {
      if (!dropped && d.entry(i, col) == r) {
        dropped = true;
        continue;
      }
      rows[out_row++].push_back(d.entry(i, col));
    }
    originals.push_back(orig_of_local[col]);
  }
  return SubArray{RestrictionArray(k1, columns.size(), std::move(rows)),
                  std::move(originals)};
}

SubArray take_columns(const SubArray& a, std::size_t first, std::size_t count) {
  std::vector<std::vector<Rational>> rows(a.array.rows(), std::vector<Rational>());
  for (auto& row : rows) row.reserve(count);
  std::vector<std::size_t> originals;
  originals.reserve(count);
  for (std::size_t j = first; j < first + count; ++j) {
    for (std::size_t i = 0; i < a.array.rows(); ++i)
      rows[i].push_back(a.array.entry(i, j));
    originals.push_back(a.original_columns[j]);
  }
  return SubArray{RestrictionArray(a.array.rows(), count, std::move(rows)),
                  std::move(originals)};
}

struct PipelineContext {
  std::uint64_t round_cap;
  std::uint64_t fallback_budget;
  std::vector<BranchRecord>* trace;
  std::map<Rational, int>* out;
};

void color_rec(const RestrictionArray& d,
               const std::vector<std::size_t>& orig_of_local, const PointSet& q,
               int level, std::uint64_t seed, const BoundSequence& bounds,
               PipelineContext& ctx) {
  const std::size_t k = d.rows();
  const std::size_t m = d.cols();

  if (k == 0) {
    for (const auto& x : q) (*ctx.out)[x] = static_cast<int>(orig_of_local[0]) + 1;
    ctx.trace->push_back(BranchRecord{level, k, m, 'a', 0, Rational(), 0});
    return;
  }

  const std::size_t spread = max_restriction_spread(d);
  const BigInt& prev_bound = bounds.values[k - 1];

  if (BigInt(spread) >= 2 * prev_bound) {
    auto [r, spread_columns] = spread_witness(d);
    const auto deleted = delete_one_occurrence(d, spread_columns, r, orig_of_local);
    const auto half = static_cast<std::size_t>(prev_bound);
    const auto first_half = take_columns(deleted, 0, half);
    const auto second_half = take_columns(deleted, half, half);
    auto [even_part, odd_part] = split_by_interval_parity(q, r);
    ctx.trace->push_back(BranchRecord{level, k, m, 'b', spread, r, 0});
    color_rec(first_half.array, first_half.original_columns, even_part,
              level + 1, derive_seed(seed, 0), bounds, ctx);
    color_rec(second_half.array, second_half.original_columns, odd_part,
              level + 1, derive_seed(seed, 1), bounds, ctx);
    return;
  }

  // spread < 2*B[k-1] implies the local-lemma guarantee; a failure here
  // means the bound sequence was mis-derived.
  if (BigInt(16) * BigInt(k) * BigInt(spread) > BigInt(m))
    throw std::logic_error("color_line: guarantee 16*k*spread <= m failed");

  const auto canonical = canonicalize(d, q);
  const auto scaled_classes = coset_partition(canonical.points, canonical.array);

  ctx.trace->push_back(
      BranchRecord{level, k, m, 'c', spread, Rational(), scaled_classes.size()});

  for (std::size_t idx = 0; idx < scaled_classes.size(); ++idx) {
    // Scaling by a positive factor preserves order, so scaled classes map
    // back to the original points index-for-index.
    std::vector<Rational> members;
    members.reserve(scaled_classes[idx].size());
    for (const auto& scaled : scaled_classes[idx]) {
      const auto it = std::lower_bound(canonical.points.begin(),
                                       canonical.points.end(), scaled);
      members.push_back(q[static_cast<std::size_t>(
          std::distance(canonical.points.begin(), it))]);
    }
    const auto class_points = PointSet::from_values(std::move(members));

    const auto res = resample_color(class_points, d, derive_seed(seed, idx),
                                    ctx.round_cap, ctx.fallback_budget);
    const Coloring* colored = res.coloring();
    if (colored == nullptr) {
      if (res.status == ResampleStatus::FallbackUnsat)
        throw std::logic_error(
            "color_line: class uncolorable inside the guarantee regime");
      throw BudgetError("color_line: resampling and fallback budget exhausted");
    }
    for (const auto& [point, c] : colored->colors())
      (*ctx.out)[point] = static_cast<int>(orig_of_local[c - 1]) + 1;
  }
}

}  // namespace

LineColorResult color_line(const RestrictionArray& d, const PointSet& q,
                           std::uint64_t seed, std::uint64_t round_cap,
                           std::uint64_t fallback_budget) {
  LineColorResult result;
  result.seed = seed;

  const std::size_t k = d.rows();
  const auto bounds = bound_sequence(k);

  if (BigInt(d.cols()) < bounds.back()) {
    // Below the derived bound the construction has no guarantee; decide
    // completely instead and label the path.
    result.trace.push_back(BranchRecord{0, k, d.cols(), 'f',
                                        max_restriction_spread(d), Rational(), 0});
    const auto solved = decide_finite(q, d, fallback_budget);
    switch (solved.status) {
      case SolveStatus::Sat:
        result.status = LineColorStatus::FallbackSat;
        result.coloring = solved.witness;
        break;
      case SolveStatus::Unsat:
        result.status = LineColorStatus::FallbackUnsat;
        break;
      case SolveStatus::BudgetExhausted:
        result.status = LineColorStatus::FallbackBudget;
        break;
    }
    return result;
  }

  std::map<Rational, int> assignment;
  PipelineContext ctx{round_cap, fallback_budget, &result.trace, &assignment};
  std::vector<std::size_t> identity(d.cols());
  for (std::size_t j = 0; j < d.cols(); ++j) identity[j] = j;
  color_rec(d, identity, q, 0, seed, bounds, ctx);

  Coloring coloring;
  for (const auto& [point, color] : assignment) coloring.assign(point, color);
  if (!verify_coloring(q, coloring, d).empty())
    throw std::logic_error("color_line: result failed re-verification");
  result.status = LineColorStatus::Colored;
  result.coloring = std::move(coloring);
  return result;
}

}  // namespace linecolor
