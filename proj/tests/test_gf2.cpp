#include <gtest/gtest.h>

#include <random>

#include "binmat/gf2.hpp"
#include "oracles.hpp"

using namespace binmat;

namespace {

BitMatrix random_matrix(std::size_t rows, std::size_t cols, std::mt19937& rng) {
  std::vector<Word> words(rows);
  for (auto& w : words) w = rng() & ((Word{1} << cols) - 1);
  return BitMatrix(words, cols);
}

}  // namespace

TEST(Gf2, RankMatchesSpanSize) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t rows = 1 + rng() % 6;
    const std::size_t cols = 1 + rng() % 9;
    const auto m = random_matrix(rows, cols, rng);
    EXPECT_EQ(rank(m), oracle::span_rank(m.columns()));
    EXPECT_EQ(rank(m), rank(transpose(m)));
  }
}

TEST(Gf2, RrefShape) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = random_matrix(1 + rng() % 6, 1 + rng() % 9, rng);
    const auto r = rref(m);
    ASSERT_EQ(r.rows(), m.rows());
    ASSERT_EQ(r.cols(), m.cols());
    const auto pivots = pivot_columns(m);
    ASSERT_EQ(pivots.size(), rank(m));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      // Unit pivot column, and nothing left of the pivot in its row.
      EXPECT_EQ(r.column(pivots[i]), Word{1} << i);
      EXPECT_EQ(r.row(i) & ((Word{1} << pivots[i]) - 1), 0U);
    }
    for (std::size_t i = pivots.size(); i < r.rows(); ++i) EXPECT_EQ(r.row(i), 0U);
    // Same row space: stacking adds no rank.
    EXPECT_EQ(rank(vconcat(m, r)), rank(m));
    EXPECT_EQ(row_basis(m).rows(), rank(m));
  }
}

TEST(Gf2, StandardFormOnChosenBasis) {
  // Columns 2,3,4 of this matrix are independent.
  const auto m = BitMatrix::from_strings({"11010", "01101", "10011"});
  const std::vector<std::size_t> basis{2, 3, 4};
  ASSERT_EQ(rank(m.select_columns(basis)), 3U);
  const auto d = standard_form(m, basis);
  ASSERT_EQ(d.rows(), 3U);
  ASSERT_EQ(d.cols(), 2U);
  // Column j of D is the coordinate vector of m's column j in the basis.
  const auto cols = m.columns();
  for (std::size_t j = 0; j < 2; ++j) {
    Word sum = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      if (d(i, j)) sum ^= cols[basis[i]];
    }
    EXPECT_EQ(sum, cols[j]);
  }
  const std::vector<std::size_t> dependent{0, 1, 2};
  if (rank(m.select_columns(dependent)) < 3) {
    EXPECT_THROW((void)standard_form(m, dependent), std::invalid_argument);
  }
  const std::vector<std::size_t> short_basis{2, 3};
  EXPECT_THROW((void)standard_form(m, short_basis), std::invalid_argument);
}

TEST(Gf2, InverseColumns) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = 1 + rng() % 7;
    const auto a = oracle::random_invertible(r, rng);
    const auto inv = invert_columns(a);
    ASSERT_EQ(inv.size(), r);
    for (std::size_t i = 0; i < r; ++i) EXPECT_EQ(apply_columns(a, inv[i]), Word{1} << i);
  }
  const std::vector<Word> singular{0b011, 0b101, 0b110};
  EXPECT_TRUE(invert_columns(singular).empty());
}

TEST(Gf2, XorBasisAgreesWithRank) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<Word> vs(1 + rng() % 8);
    for (auto& v : vs) v = rng() % 64;
    XorBasis b;
    for (Word v : vs) b.insert(v);
    EXPECT_EQ(b.size(), oracle::span_rank(vs));
    EXPECT_EQ(rank_of_vectors(vs), oracle::span_rank(vs));
    for (Word v : vs) EXPECT_TRUE(b.contains(v));
  }
}

TEST(Gf2, TextRoundTrip) {
  EXPECT_EQ(parse_vector("1100"), Word{0b0011});
  EXPECT_EQ(format_vector(0b0011, 4), "1100");
  EXPECT_EQ(format_vector(parse_vector("0010110"), 7), "0010110");
  const auto m = BitMatrix::from_strings({"101", "011"});
  EXPECT_EQ(parse_matrix(format_matrix(m)), m);
  EXPECT_TRUE(m(0, 0));
  EXPECT_FALSE(m(0, 1));
  EXPECT_THROW((void)parse_vector("10x"), std::invalid_argument);
}
