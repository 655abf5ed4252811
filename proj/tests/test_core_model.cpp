#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "linecolor/core_model.hpp"
#include "linecolor/rng.hpp"
#include "test_util.hpp"

#include <algorithm>

using namespace linecolor;
using namespace linecolor::testutil;

TEST_CASE("rational normalization and parsing") {
  CHECK(Rational(BigInt(2), BigInt(4)) == Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(BigInt(-2), BigInt(-4)) == Rational(BigInt(1), BigInt(2)));
  CHECK(Rational(BigInt(3), BigInt(-6)).num() == -1);
  CHECK(Rational(BigInt(3), BigInt(-6)).den() == 2);
  CHECK(Rational(0).den() == 1);

  CHECK(Rational::parse("7/3") == Rational(BigInt(7), BigInt(3)));
  CHECK(Rational::parse("-7/3") == Rational(BigInt(-7), BigInt(3)));
  CHECK(Rational::parse("42") == Rational(42));
  CHECK(Rational::parse("6/4").str() == "3/2");
  CHECK(Rational::parse("4/2").str() == "2");
  CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.5"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
  const Rational a(BigInt(1), BigInt(3));
  const Rational b(BigInt(1), BigInt(6));
  CHECK(a + b == Rational(BigInt(1), BigInt(2)));
  CHECK(a - b == b);
  CHECK(a * b == Rational(BigInt(1), BigInt(18)));
  CHECK(a / b == Rational(2));
  CHECK((-a).num() == -1);
  CHECK(a.abs() == a);
  CHECK((-a).abs() == a);
  CHECK_THROWS_AS(a / Rational(0), std::domain_error);

  // repeated summation stays exact where floating point would drift
  Rational sum(0);
  for (int i = 0; i < 300; ++i) sum += Rational(BigInt(1), BigInt(300));
  CHECK(sum == Rational(1));
}

TEST_CASE("floor_quotient handles negatives and boundaries") {
  CHECK(floor_quotient(Rational(5), Rational(2)) == 2);
  CHECK(floor_quotient(Rational(-5), Rational(2)) == -3);
  CHECK(floor_quotient(Rational(4), Rational(2)) == 2);   // boundary: x = n*r
  CHECK(floor_quotient(Rational(-4), Rational(2)) == -2);
  CHECK(floor_quotient(Rational(BigInt(1), BigInt(2)), Rational(1)) == 0);
  CHECK(floor_quotient(Rational(BigInt(-1), BigInt(2)), Rational(1)) == -1);
  CHECK(floor_quotient(Rational(BigInt(3), BigInt(2)),
                       Rational(BigInt(1), BigInt(2))) == 3);
  CHECK_THROWS_AS(floor_quotient(Rational(1), Rational(0)), std::domain_error);
  CHECK_THROWS_AS(floor_quotient(Rational(1), Rational(-2)), std::domain_error);
}

TEST_CASE("restriction array shape validation") {
  CHECK_THROWS_AS(make_array({{1, 2}, {3}}), std::invalid_argument);
  CHECK_THROWS_AS(make_array({{0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(make_array({{-1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(RestrictionArray(0, 0, {}), std::invalid_argument);
  const auto empty_rows = make_array({}, 3);
  CHECK(empty_rows.rows() == 0);
  CHECK(empty_rows.cols() == 3);
}

TEST_CASE("point set is sorted and deduplicated") {
  const auto s = make_points({3, 1, 2, 1});
  REQUIRE(s.size() == 3);
  CHECK(s[0] == Rational(1));
  CHECK(s[2] == Rational(3));
  CHECK(s.contains(Rational(2)));
  CHECK(!s.contains(Rational(4)));
}

TEST_CASE("max_restriction_spread on the worked examples") {
  // value 6 appears in three columns
  CHECK(max_restriction_spread(make_array({{1, 1, 2, 3},
                                           {1, 1, 4, 5},
                                           {1, 6, 6, 6}})) == 3);
  // all entries distinct: every value in exactly one column
  CHECK(max_restriction_spread(make_array({{1, 2, 3, 4}})) == 1);
  // value 1 appears in all three columns (hand enumeration of {1,2,3,4})
  CHECK(max_restriction_spread(make_array({{1, 1, 1}, {2, 3, 4}})) == 3);
  // no rows
  CHECK(max_restriction_spread(make_array({}, 5)) == 0);
  // duplicates within one column count that column once
  CHECK(max_restriction_spread(make_array({{1, 2}, {1, 3}})) == 1);
}

TEST_CASE("max_restriction_spread is invariant under permutations") {
  Rng rng(12345);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t k = 1 + rng.below(3);
    const std::size_t m = 1 + rng.below(4);
    std::vector<std::vector<Rational>> rows(k, std::vector<Rational>());
    for (auto& row : rows)
      for (std::size_t j = 0; j < m; ++j)
        row.push_back(Rational(1 + static_cast<long long>(rng.below(5))));
    const auto d = RestrictionArray(k, m, rows);
    const auto base = max_restriction_spread(d);

    // permute columns
    std::vector<std::size_t> perm(m);
    for (std::size_t j = 0; j < m; ++j) perm[j] = j;
    for (std::size_t j = m; j > 1; --j)
      std::swap(perm[j - 1], perm[rng.below(j)]);
    std::vector<std::vector<Rational>> permuted(k, std::vector<Rational>());
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < m; ++j)
        permuted[i].push_back(rows[i][perm[j]]);
    CHECK(max_restriction_spread(RestrictionArray(k, m, permuted)) == base);

    // reorder entries within each column (rotate rows per column)
    std::vector<std::vector<Rational>> rotated(k, std::vector<Rational>());
    for (std::size_t j = 0; j < m; ++j) {
      const std::size_t shift = rng.below(k);
      for (std::size_t i = 0; i < k; ++i)
        rotated[i].push_back(rows[(i + shift) % k][j]);
    }
    CHECK(max_restriction_spread(RestrictionArray(k, m, rotated)) == base);
  }
}

TEST_CASE("distinct_restrictions and the count bound") {
  const auto d1 = make_array({{1, 1, 1}, {2, 3, 4}});
  const auto set1 = distinct_restrictions(d1);
  CHECK(set1 == std::set<Rational>{Rational(1), Rational(2), Rational(3), Rational(4)});
  CHECK(set1.size() <= 2 * 3 - max_restriction_spread(d1) + 1);

  CHECK(distinct_restrictions(make_array({{5}})) == std::set<Rational>{Rational(5)});

  const auto d3 = make_array({{1, 1, 2, 3}, {1, 1, 4, 5}, {1, 6, 6, 6}});
  CHECK(distinct_restrictions(d3).size() == 6);
  CHECK(6 <= 3 * 4 - max_restriction_spread(d3) + 1);

  Rng rng(777);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 1 + rng.below(3);
    const std::size_t m = 1 + rng.below(5);
    std::vector<std::vector<Rational>> rows(k, std::vector<Rational>());
    for (auto& row : rows)
      for (std::size_t j = 0; j < m; ++j)
        row.push_back(random_positive_rational(rng, 6, 3));
    const auto d = RestrictionArray(k, m, rows);
    CHECK(distinct_restrictions(d).size() <=
          k * m - max_restriction_spread(d) + 1);
  }
}

TEST_CASE("verify_coloring on the worked examples") {
  // single point: no pairs
  {
    Coloring t;
    t.assign(Rational(0), 1);
    CHECK(verify_coloring(make_points({0}), t, make_array({{1}, {2}})).empty());
  }
  // two points forced onto the only color
  {
    Coloring t;
    t.assign(Rational(0), 1);
    t.assign(Rational(1), 1);
    const auto violations =
        verify_coloring(make_points({0, 1}), t, make_array({{1}, {2}}));
    REQUIRE(violations.size() == 1);
    CHECK(violations[0].x == Rational(0));
    CHECK(violations[0].y == Rational(1));
    CHECK(violations[0].color == 1);
    CHECK(violations[0].distance == Rational(1));
    CHECK(violations[0].row == 1);
  }
  // valid 2-coloring of {0,1,2,3} (all six pairs checked by hand)
  {
    Coloring t;
    t.assign(Rational(0), 1);
    t.assign(Rational(1), 2);
    t.assign(Rational(2), 2);
    t.assign(Rational(3), 1);
    CHECK(verify_coloring(make_points({0, 1, 2, 3}), t, make_array({{1, 2}}))
              .empty());
  }
}

TEST_CASE("verify_coloring rejects malformed input") {
  const auto s = make_points({0, 1});
  const auto d = make_array({{1}});
  Coloring partial;
  partial.assign(Rational(0), 1);
  CHECK_THROWS_AS(verify_coloring(s, partial, d), std::invalid_argument);

  Coloring out_of_range;
  out_of_range.assign(Rational(0), 1);
  out_of_range.assign(Rational(1), 2);  // m == 1
  CHECK_THROWS_AS(verify_coloring(s, out_of_range, d), std::invalid_argument);

  Coloring zero;
  zero.assign(Rational(0), 0);
  zero.assign(Rational(1), 1);
  CHECK_THROWS_AS(verify_coloring(s, zero, d), std::invalid_argument);
}

TEST_CASE("verify_coloring reports one violation per (pair, color, row)") {
  // the same distance twice in one column: two rows, two violations
  const auto d = make_array({{2}, {2}});
  Coloring t;
  t.assign(Rational(0), 1);
  t.assign(Rational(2), 1);
  const auto violations = verify_coloring(make_points({0, 2}), t, d);
  REQUIRE(violations.size() == 2);
  CHECK(violations[0].row == 1);
  CHECK(violations[1].row == 2);
}

TEST_CASE("verify_coloring agrees with the naive oracle on random instances") {
  Rng rng(424242);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t k = rng.below(3);  // 0 allowed
    const std::size_t m = 1 + rng.below(3);
    std::vector<std::vector<Rational>> rows(k, std::vector<Rational>());
    for (auto& row : rows)
      for (std::size_t j = 0; j < m; ++j)
        row.push_back(random_positive_rational(rng, 5, 2));
    const auto d = RestrictionArray(k, m, rows);

    std::vector<Rational> values;
    const std::size_t n = 1 + rng.below(7);
    for (std::size_t i = 0; i < n; ++i)
      values.push_back(random_rational(rng, 6, 2));
    const auto s = PointSet::from_values(values);
    const auto t = random_coloring(rng, s, static_cast<int>(m));

    auto expected = naive_verify(s, t, d);
    std::sort(expected.begin(), expected.end());
    auto actual = verify_coloring(s, t, d);
    CHECK(actual == expected);
    // emitted order is already (x, y, color, row)
    CHECK(std::is_sorted(actual.begin(), actual.end()));
  }
}

TEST_CASE("scale_instance worked examples") {
  {
    const auto [d, s] =
        scale_instance(make_array({{1, 2}}), make_points({0, 1, 2}), Rational(3));
    CHECK(d == make_array({{3, 6}}));
    CHECK(s == make_points({0, 3, 6}));
  }
  {
    const auto [d, s] = scale_instance(
        RestrictionArray(1, 1, {{Rational(BigInt(1), BigInt(2))}}),
        PointSet::from_values({Rational(0), Rational(BigInt(1), BigInt(2))}),
        Rational(2));
    CHECK(d == make_array({{1}}));
    CHECK(s == make_points({0, 1}));
  }
  CHECK_THROWS_AS(
      scale_instance(make_array({{1}}), make_points({0}), Rational(0)),
      std::invalid_argument);
}

TEST_CASE("scaling preserves the violation structure") {
  Rng rng(99);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t k = 1 + rng.below(2);
    const std::size_t m = 1 + rng.below(3);
    std::vector<std::vector<Rational>> rows(k, std::vector<Rational>());
    for (auto& row : rows)
      for (std::size_t j = 0; j < m; ++j)
        row.push_back(random_positive_rational(rng, 4, 2));
    const auto d = RestrictionArray(k, m, rows);
    std::vector<Rational> values;
    for (std::size_t i = 0; i < 6; ++i) values.push_back(random_rational(rng, 5, 2));
    const auto s = PointSet::from_values(values);
    const auto t = random_coloring(rng, s, static_cast<int>(m));
    const auto c = random_positive_rational(rng, 7, 3);

    const auto before = verify_coloring(s, t, d);
    const auto [ds, ss] = scale_instance(d, s, c);
    Coloring ts;
    for (const auto& [point, color] : t.colors()) ts.assign(point * c, color);
    const auto after = verify_coloring(ss, ts, ds);
    REQUIRE(after.size() == before.size());
    for (std::size_t i = 0; i < after.size(); ++i) {
      CHECK(after[i].x == before[i].x * c);
      CHECK(after[i].y == before[i].y * c);
      CHECK(after[i].color == before[i].color);
    }
  }
}

TEST_CASE("canonicalize worked examples and round trip") {
  {
    const auto result = canonicalize(
        RestrictionArray(1, 2, {{Rational(BigInt(1), BigInt(2)),
                                 Rational(BigInt(1), BigInt(3))}}),
        PointSet::from_values({Rational(0), Rational(BigInt(1), BigInt(6))}));
    CHECK(result.factor == 6);
    CHECK(result.array == make_array({{3, 2}}));
    CHECK(result.points == make_points({0, 1}));
  }
  {
    const auto result = canonicalize(make_array({{2, 5}}), make_points({0, 7}));
    CHECK(result.factor == 1);
    CHECK(result.array == make_array({{2, 5}}));
  }
  {
    const auto result = canonicalize(
        RestrictionArray(1, 1, {{Rational(BigInt(2), BigInt(5))}}),
        PointSet::from_values({Rational(BigInt(1), BigInt(5)),
                               Rational(BigInt(3), BigInt(5))}));
    CHECK(result.factor == 5);
    CHECK(result.array == make_array({{2}}));
    CHECK(result.points == make_points({1, 3}));
  }

  Rng rng(31337);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<std::vector<Rational>> rows(1, std::vector<Rational>());
    for (int j = 0; j < 3; ++j) rows[0].push_back(random_positive_rational(rng, 9, 6));
    const auto d = RestrictionArray(1, 3, rows);
    std::vector<Rational> values;
    for (int i = 0; i < 5; ++i) values.push_back(random_rational(rng, 9, 6));
    const auto s = PointSet::from_values(values);

    const auto canonical = canonicalize(d, s);
    for (std::size_t j = 0; j < canonical.array.cols(); ++j)
      CHECK(canonical.array.entry(0, j).is_integer());
    for (const auto& x : canonical.points) CHECK(x.is_integer());
    const auto [d_back, s_back] =
        scale_instance(canonical.array, canonical.points,
                       Rational(BigInt(1), canonical.factor));
    CHECK(d_back == d);
    CHECK(s_back == s);
  }
}

TEST_CASE("restriction to a subset of a valid coloring stays valid") {
  Rng rng(5150);
  for (int trial = 0; trial < 60; ++trial) {
    const auto d = make_array({{1, 2}});
    std::vector<Rational> values;
    for (int i = 0; i < 6; ++i)
      values.push_back(Rational(static_cast<long long>(rng.below(12))));
    const auto s = PointSet::from_values(values);
    const auto t = random_coloring(rng, s, 2);
    if (!verify_coloring(s, t, d).empty()) continue;

    std::vector<Rational> subset_values;
    for (const auto& x : s)
      if (rng.below(2) == 0) subset_values.push_back(x);
    const auto sub = PointSet::from_values(subset_values);
    Coloring sub_coloring;
    for (const auto& x : sub) sub_coloring.assign(x, *t.color_of(x));
    CHECK(verify_coloring(sub, sub_coloring, d).empty());
  }
}
