#pragma once

// Internal backtracking engine shared by the finite and periodic solvers.
// Variables are colored in fixed ascending order with ascending color values,
// so the first solution found is the lexicographically least one; exhausting
// the tree is a completeness proof.

#include "linecolor/core_model.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace linecolor::detail {

// Bitmask over colors 0..num_colors-1.
class ColorMask {
 public:
  ColorMask() = default;
  explicit ColorMask(int num_colors) : words_((num_colors + 63) / 64, 0) {}

  void set(int c) { words_[c >> 6] |= std::uint64_t(1) << (c & 63); }
  bool test(int c) const {
    return (words_[c >> 6] >> (c & 63)) & 1;
  }
  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }
  void merge(const ColorMask& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct CspProblem {
  int num_vars = 0;
  int num_colors = 0;
  // Colors unavailable outright, per variable (empty = none).
  std::vector<ColorMask> base_forbidden;
  // pair_masks[p] = colors the endpoints of pair p must not share.
  std::vector<ColorMask> pair_masks;
  // Per variable: (other endpoint, pair index). Both directions listed.
  std::vector<std::vector<std::pair<int, int>>> adjacency;

  // Registers an undirected constraint; masks for repeated (a, b) merge.
  void add_pair(int a, int b, const ColorMask& mask);

 private:
  std::map<std::pair<int, int>, int> pair_index_;
};

enum class CspStatus { Sat, Unsat, BudgetExhausted };

struct CspResult {
  CspStatus status = CspStatus::Unsat;
  std::vector<int> colors;  // 1-based, num_vars entries when Sat
  std::uint64_t nodes = 0;
  int max_depth = 0;
};

// First solution in lexicographic order, or proven absence, within the node
// budget (a node = one tentative assignment).
CspResult solve_lex_first(const CspProblem& problem, std::uint64_t node_budget);

// Pairwise conflict structure of a concrete point set: for points a < b,
// the colors j with |s[b]-s[a]| restricted for j.
CspProblem build_point_csp(const PointSet& s, const RestrictionArray& d);

}  // namespace linecolor::detail
