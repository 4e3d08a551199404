#include <gtest/gtest.h>

#include <random>

#include "binmat/catalog.hpp"
#include "binmat/connect.hpp"
#include "oracles.hpp"

using namespace binmat;

namespace {

BinaryMatroid random_matroid(std::mt19937& rng, std::size_t rows, std::size_t n) {
  std::vector<Word> raw(n);
  for (auto& c : raw) c = rng() & ((Word{1} << rows) - 1);
  return BinaryMatroid(BitMatrix::from_columns(raw, rows), numbered_labels(n));
}

// Simple random matroids are mostly 3-connected at these sizes, which keeps
// both branches of the comparison busy.
BinaryMatroid random_simple(std::mt19937& rng, std::size_t rows, std::size_t n) {
  std::vector<Word> points;
  for (Word v = 1; v < (Word{1} << rows); ++v) points.push_back(v);
  std::shuffle(points.begin(), points.end(), rng);
  points.resize(std::min(n, points.size()));
  return BinaryMatroid(BitMatrix::from_columns(points, rows), numbered_labels(points.size()));
}

}  // namespace

TEST(Connect, LambdaMatchesRankTable) {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = random_matroid(rng, 1 + rng() % 4, 2 + rng() % 8);
    const auto ranks = oracle::rank_table(oracle::columns_of(m));
    for (Word x = 0; x < ranks.size(); ++x) {
      EXPECT_EQ(connectivity(m, ElementSet(x)), oracle::lambda(ranks, x));
    }
  }
}

TEST(Connect, ThreeAndFourConnectivityMatchBruteForce) {
  std::mt19937 rng(22);
  int connected = 0;
  int i4c = 0;
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t rows = 3 + rng() % 2;
    const auto m = trial % 3 == 0 ? random_matroid(rng, rows, 4 + rng() % 7)
                                  : random_simple(rng, rows, 4 + rng() % 8);
    const auto ranks = oracle::rank_table(oracle::columns_of(m));
    const bool three = oracle::three_connected(ranks, m.size());
    const bool four = oracle::internally_4_connected(ranks, m.size());
    EXPECT_EQ(is_3_connected(m), three) << format_matroid(m);
    EXPECT_EQ(is_internally_4_connected(m), four) << format_matroid(m);
    bool nonminimal = false;
    for (Word x = 1; x + 1 < ranks.size(); ++x) {
      const std::size_t a = std::popcount(x);
      nonminimal |= a >= 4 && m.size() - a >= 4 && oracle::lambda(ranks, x) == 2;
    }
    const auto found = find_nonminimal_3_separation(m);
    EXPECT_EQ(found.has_value(), nonminimal);
    if (found) {
      EXPECT_EQ(connectivity(m, found->side_a), 2U);
    }
    connected += three;
    i4c += four;
  }
  EXPECT_GT(connected, 20);
  EXPECT_GT(i4c, 5);
}

TEST(Connect, SeparationsAreComplete) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const auto m = random_simple(rng, 3 + rng() % 2, 6 + rng() % 4);
    const auto ranks = oracle::rank_table(oracle::columns_of(m));
    const auto n = m.size();
    for (std::size_t k = 1; k <= 3; ++k) {
      std::set<Word> expected;
      for (Word x = 1; x + 1 < ranks.size(); ++x) {
        if ((x >> (n - 1)) & 1U) continue;  // one side per partition
        const std::size_t a = std::popcount(x);
        if (a >= k && n - a >= k && oracle::lambda(ranks, x) < k) expected.insert(x);
      }
      std::set<Word> got;
      for (const auto& s : separations(m, k)) {
        got.insert(s.side_a.bits());
        EXPECT_EQ(s.order, k);
        EXPECT_EQ(s.exact, connectivity(m, s.side_a) == k - 1);
        const auto a = s.side_a.size();
        EXPECT_EQ(s.minimal, s.exact && (a == k || n - a == k));
        EXPECT_TRUE(is_k_separation(m, s.side_a, k));
      }
      EXPECT_EQ(got, expected);
    }
  }
}

TEST(Connect, KnownGraphs) {
  for (std::size_t spokes = 3; spokes <= 6; ++spokes) {
    const auto w = build_family(Family::wheel, spokes);
    EXPECT_TRUE(is_3_connected(w));
    // Four consecutive fan elements (spoke, rim, spoke, rim) have lambda 2,
    // so only W3, with six elements, escapes.
    EXPECT_EQ(is_internally_4_connected(w), spokes == 3) << spokes;
  }
  const auto k33 = build_family(Family::k3p, 3);
  EXPECT_TRUE(is_internally_4_connected(k33));
  // Vertex 1 has degree two, so its edges form a series pair.
  const std::vector<Edge> bowtie{{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}, {0, 4}};
  EXPECT_FALSE(is_3_connected(from_graph(bowtie)));
}

TEST(Connect, InducedSeparation) {
  // With the identity embedding, any 3-separation of W4 induces itself.
  const auto w = build_family(Family::wheel, 4);
  LabelMap id;
  for (const auto& l : w.labels()) id[l] = l;
  const auto seps = separations(w, 3);
  ASSERT_FALSE(seps.empty());
  const auto& s = seps.front();
  const auto a = w.labels_of(s.side_a);
  const auto b = w.labels_of(w.ground() - s.side_a);
  EXPECT_TRUE(induces_separation(w, a, b, id));
  LabelMap broken = id;
  broken[w.label(0)] = w.label(1);
  EXPECT_THROW((void)induces_separation(w, a, b, broken), std::invalid_argument);
}
