#include <gtest/gtest.h>

#include <random>

#include "binmat/catalog.hpp"
#include "binmat/iso.hpp"
#include "oracles.hpp"

using namespace binmat;

namespace {

BinaryMatroid from_raw(const std::vector<Word>& raw, std::size_t rows) {
  return BinaryMatroid(BitMatrix::from_columns(raw, rows), numbered_labels(raw.size()));
}

// Same matroid under a random change of basis, column permutation and
// label shuffle.
BinaryMatroid scramble(const std::vector<Word>& raw, std::size_t rows, std::mt19937& rng) {
  const auto g = oracle::random_invertible(rows, rng);
  std::vector<Word> cols;
  for (Word c : raw) cols.push_back(oracle::apply(g, c));
  std::shuffle(cols.begin(), cols.end(), rng);
  auto labels = numbered_labels(cols.size());
  std::shuffle(labels.begin(), labels.end(), rng);
  return BinaryMatroid(BitMatrix::from_columns(cols, rows), labels);
}

std::vector<Word> random_raw(std::mt19937& rng, std::size_t rows, std::size_t n) {
  std::vector<Word> raw(n);
  for (auto& c : raw) c = rng() & ((Word{1} << rows) - 1);
  return raw;
}

}  // namespace

TEST(Iso, CanonicalFormIgnoresPresentation) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t rows = 2 + rng() % 4;
    const auto raw = random_raw(rng, rows, 3 + rng() % 9);
    const auto m = from_raw(raw, rows);
    const auto form = canonical_form(m);
    for (int k = 0; k < 3; ++k) {
      const auto s = scramble(raw, rows, rng);
      EXPECT_EQ(canonical_form(s), form);
      const auto iso = is_isomorphic(m, s);
      ASSERT_TRUE(iso.has_value());
      EXPECT_TRUE(verify_map(m, s, *iso));
      EXPECT_TRUE(verify_map(s, m, iso->inverse()));
    }
  }
}

TEST(Iso, AgreesWithBruteForce) {
  // Small pools of matroids on the same number of elements, where
  // coincidences are frequent.
  std::mt19937 rng(32);
  int same = 0;
  int different = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t rows = 2 + rng() % 2;
    const std::size_t n = 4 + rng() % 4;
    const auto a = random_raw(rng, rows, n);
    const auto b = random_raw(rng, rows, n);
    const bool brute = oracle::isomorphic(a, b);
    const auto ma = from_raw(a, rows);
    const auto mb = from_raw(b, rows);
    EXPECT_EQ(canonical_form(ma) == canonical_form(mb), brute);
    const auto iso = is_isomorphic(ma, mb);
    EXPECT_EQ(iso.has_value(), brute);
    if (iso) {
      EXPECT_TRUE(verify_map(ma, mb, *iso));
    }
    (brute ? same : different)++;
  }
  EXPECT_GT(same, 30);
  EXPECT_GT(different, 30);
}

TEST(Iso, VerifyMapRejectsWrongMaps) {
  const auto k4 = build_family(Family::wheel, 3);
  std::vector<std::size_t> id(k4.size());
  std::iota(id.begin(), id.end(), 0);
  EXPECT_TRUE(verify_map(k4, k4, Isomorphism{id}));
  // Exchanging two edges that share a vertex, and fixing the rest, breaks
  // a triangle.
  auto swap_adjacent = id;
  std::swap(swap_adjacent[0], swap_adjacent[3]);  // spoke h-1 and rim 1-2
  EXPECT_FALSE(verify_map(k4, k4, Isomorphism{swap_adjacent}));
  auto not_bijective = id;
  not_bijective[1] = 0;
  EXPECT_THROW((void)verify_map(k4, k4, Isomorphism{not_bijective}), std::invalid_argument);
}

TEST(Iso, DualPairsDistinguished) {
  // U(3,4) plus a coloop against a triangle plus two coloops: same size
  // and rank.
  const auto f7 = from_raw({1, 2, 4, 3, 5, 6, 7}, 3);
  EXPECT_FALSE(is_isomorphic(f7, dual(f7)).has_value());
  const auto a = from_raw({1, 2, 4, 7, 8}, 4);
  const auto b = from_raw({1, 2, 3, 4, 8}, 4);
  EXPECT_FALSE(is_isomorphic(a, b).has_value());
  EXPECT_FALSE(oracle::isomorphic({1, 2, 4, 7, 8}, {1, 2, 3, 4, 8}));
}

TEST(Iso, SizeGuard) {
  std::vector<Word> raw;
  for (Word v = 1; v < 32; ++v) raw.push_back(v);
  const auto pg = from_raw(raw, 5);  // 31 elements
  EXPECT_THROW((void)canonical_form(pg), std::length_error);
}
