#include "tough/toughness.hpp"

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "test_util.hpp"
#include "tough/error.hpp"
#include "tough/thresholds.hpp"

namespace tough {
namespace {

using testutil::matrix;

Rational oracle_value(const Graph& g) {
  const auto o = oracle::toughness(matrix(g));
  return Rational(o.num, o.den);
}

TEST(Rational, OrderingAndReduction) {
  EXPECT_EQ(Rational(2, 4), Rational(1, 2));
  EXPECT_LT(Rational(1, 3), Rational(1, 2));
  EXPECT_GT(Rational(3, 2), Rational(1, 1));
  EXPECT_EQ(Rational(6, 3).str(), "2");
  EXPECT_EQ(Rational(2, 6).str(), "1/3");
  EXPECT_THROW(Rational(1, 0), Error);
}

TEST(ToughnessExact, CompleteGraphsAreInfinite) {
  for (std::size_t n = 1; n <= 8; ++n) EXPECT_TRUE(toughness_exact(complete(n)).infinite);
}

TEST(ToughnessExact, Examples) {
  const ToughnessResult star = toughness_exact(testutil::star(3));
  ASSERT_FALSE(star.infinite);
  EXPECT_EQ(star.value, Rational(1, 3));
  EXPECT_EQ(star.value, oracle_value(testutil::star(3)));
  EXPECT_EQ(star.witness, VertexSet(4, {0}));

  const ToughnessResult c4 = toughness_exact(testutil::cycle(4));
  EXPECT_EQ(c4.value, Rational(1, 1));
  EXPECT_EQ(c4.value, oracle_value(testutil::cycle(4)));
  EXPECT_EQ(c4.cut_size, 2u);
  EXPECT_EQ(c4.components, 2u);
}

TEST(ToughnessExact, WitnessAttainsTheValue) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> p(0.15, 0.8);
  int checked = 0;
  while (checked < 300) {
    const std::size_t n = 2 + static_cast<std::size_t>(checked) % 10;
    const Graph g = testutil::random_graph(rng, n, p(rng));
    if (!is_connected(g)) continue;
    ++checked;
    const ToughnessResult r = toughness_exact(g);
    const auto o = oracle::toughness(matrix(g));
    ASSERT_EQ(r.infinite, o.infinite);
    if (r.infinite) continue;
    EXPECT_EQ(r.value, Rational(o.num, o.den));
    EXPECT_GE(r.components, 2u);
    EXPECT_EQ(r.witness.size(), r.cut_size);
    EXPECT_EQ(components_after_removal(g, r.witness), r.components);
    EXPECT_EQ(Rational(static_cast<std::int64_t>(r.cut_size), static_cast<std::int64_t>(r.components)), r.value);
  }
}

TEST(ToughnessExact, ExtremalFamilyIsOneOverTPlusOne) {
  for (std::size_t t = 1; t <= 4; ++t)
    for (std::size_t n = t + 2; n <= 12; ++n) {
      const Graph g = build_extremal(t, n);
      const ToughnessResult r = toughness_exact(g);
      EXPECT_EQ(r.value, Rational(1, static_cast<std::int64_t>(t + 1)));
      if (n <= 10) {
        EXPECT_EQ(r.value, oracle_value(g));
      }
    }
}

TEST(ToughnessExact, AddingAnEdgeNeverLowersToughness) {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> p(0.2, 0.7);
  int checked = 0;
  while (checked < 200) {
    const std::size_t n = 3 + static_cast<std::size_t>(checked) % 8;
    Graph g = testutil::random_graph(rng, n, p(rng));
    if (!is_connected(g) || g.is_complete()) continue;
    std::vector<std::pair<std::size_t, std::size_t>> missing;
    for (std::size_t u = 0; u < n; ++u)
      for (std::size_t v = u + 1; v < n; ++v)
        if (!g.adjacent(u, v)) missing.emplace_back(u, v);
    std::uniform_int_distribution<std::size_t> pick(0, missing.size() - 1);
    const auto [u, v] = missing[pick(rng)];
    const ToughnessResult before = toughness_exact(g);
    g.add_edge(u, v);
    const ToughnessResult after = toughness_exact(g);
    ++checked;
    EXPECT_TRUE(after.infinite || (!before.infinite && after.value >= before.value));
  }
}

TEST(ToughnessExact, Errors) {
  try {
    toughness_exact(empty_graph(3));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_input);
  }
  try {
    toughness_exact(testutil::path(21));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::size);
  }
  ToughnessOptions wide;
  wide.exhaustive_limit = 22;
  EXPECT_EQ(toughness_exact(testutil::path(21), wide).value, Rational(1, 2));
}

TEST(IsOneOverTTough, Examples) {
  for (std::size_t t = 1; t <= 5; ++t)
    for (std::size_t n = t + 2; n <= 12; ++n) {
      const ToughCheck r = is_one_over_t_tough(build_extremal(t, n), t);
      EXPECT_FALSE(r.tough);
      ASSERT_TRUE(r.witness.has_value());
      EXPECT_EQ(*r.witness, VertexSet(n, {0}));
    }
  EXPECT_TRUE(is_one_over_t_tough(testutil::cycle(4), 1).tough);
  EXPECT_TRUE(is_one_over_t_tough(testutil::star(3), 3).tough);
  const ToughCheck k13 = is_one_over_t_tough(testutil::star(3), 2);
  EXPECT_FALSE(k13.tough);
  EXPECT_EQ(*k13.witness, VertexSet(4, {0}));
  EXPECT_THROW(is_one_over_t_tough(empty_graph(2), 1), Error);
}

TEST(IsTough, RationalThresholds) {
  EXPECT_TRUE(is_tough(testutil::cycle(5), Rational(1, 1)).tough);
  EXPECT_FALSE(is_tough(testutil::cycle(5), Rational(3, 2)).tough);
  EXPECT_TRUE(is_tough(testutil::star(4), Rational(1, 4)).tough);
  EXPECT_FALSE(is_tough(testutil::star(4), Rational(2, 7)).tough);
  EXPECT_TRUE(is_tough(complete(5), Rational(100, 1)).tough);
}

TEST(IsOneOverTTough, AgreesWithExactToughnessAndOracle) {
  for (std::size_t n = 2; n <= 5; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << pairs); ++m) {
      const Graph g = from_edge_mask(n, m);
      if (!is_connected(g)) continue;
      const ToughnessResult exact = toughness_exact(g);
      for (std::size_t t = 1; t <= 3; ++t) {
        const ToughCheck r = is_one_over_t_tough(g, t);
        EXPECT_EQ(r.tough, meets(exact, Rational(1, static_cast<std::int64_t>(t))));
        EXPECT_EQ(r.tough, oracle::one_over_t_tough(matrix(g), static_cast<long long>(t)));
        if (!r.tough) {
          const std::size_t c = components_after_removal(g, *r.witness);
          EXPECT_GE(c, t * r.witness->size() + 1);
        }
      }
    }
  }
}

}  // namespace
}  // namespace tough
