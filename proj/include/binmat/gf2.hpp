#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace binmat {

using Word = std::uint64_t;

/// Widest row a BitMatrix can hold. Every matrix in this project fits in
/// one machine word per row.
inline constexpr std::size_t kMaxCols = 64;

/// Dense 0/1 matrix over GF(2). Each row is packed into a single word with
/// bit j holding column j. Values are immutable once built.
class BitMatrix {
 public:
  BitMatrix() = default;
  /// Zero matrix.
  BitMatrix(std::size_t rows, std::size_t cols);
  BitMatrix(std::vector<Word> row_words, std::size_t cols);

  static BitMatrix identity(std::size_t n);
  /// Builds a matrix from column vectors (bit i of each word is row i).
  static BitMatrix from_columns(std::span<const Word> columns, std::size_t rows);
  /// Builds a matrix from strings of '0'/'1', one string per row.
  static BitMatrix from_strings(const std::vector<std::string>& rows);

  [[nodiscard]] std::size_t rows() const { return rows_.size(); }
  [[nodiscard]] std::size_t cols() const { return cols_; }
  [[nodiscard]] bool empty() const { return rows_.empty() || cols_ == 0; }

  [[nodiscard]] bool operator()(std::size_t r, std::size_t c) const {
    return ((rows_[r] >> c) & 1U) != 0;
  }
  [[nodiscard]] Word row(std::size_t r) const { return rows_[r]; }
  [[nodiscard]] std::span<const Word> row_words() const { return rows_; }

  /// Column c as a word, bit i = row i. Requires rows() <= 64.
  [[nodiscard]] Word column(std::size_t c) const;
  [[nodiscard]] std::vector<Word> columns() const;

  [[nodiscard]] BitMatrix select_columns(std::span<const std::size_t> cols) const;
  [[nodiscard]] BitMatrix select_rows(std::span<const std::size_t> rows) const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::vector<Word> rows_;
  std::size_t cols_ = 0;
};

/// Dimension of the row space.
[[nodiscard]] std::size_t rank(const BitMatrix& m);

/// Reduced row-echelon form. Zero rows are kept at the bottom so the shape
/// is unchanged.
[[nodiscard]] BitMatrix rref(const BitMatrix& m);

/// Columns holding the leading ones of rref(m), in increasing order.
[[nodiscard]] std::vector<std::size_t> pivot_columns(const BitMatrix& m);

/// rref(m) with its zero rows removed.
[[nodiscard]] BitMatrix row_basis(const BitMatrix& m);

[[nodiscard]] BitMatrix transpose(const BitMatrix& m);
[[nodiscard]] BitMatrix hconcat(const BitMatrix& left, const BitMatrix& right);
[[nodiscard]] BitMatrix vconcat(const BitMatrix& top, const BitMatrix& bottom);

/// Row-reduces m so that basis_cols[i] becomes the i-th unit column and
/// returns the block formed by the remaining columns in their original
/// order, i.e. the D of [I|D]. Throws std::invalid_argument if the basis is
/// dependent or its size differs from rank(m).
[[nodiscard]] BitMatrix standard_form(const BitMatrix& m,
                                      std::span<const std::size_t> basis_cols);

/// Rank of a set of column vectors.
[[nodiscard]] std::size_t rank_of_vectors(std::span<const Word> vectors);

/// Incrementally maintained span of vectors, kept in echelon form keyed by
/// the lowest set bit of each stored vector.
class XorBasis {
 public:
  /// Reduces v against the basis.
  [[nodiscard]] Word reduce(Word v) const;
  /// Adds v; returns false if v was already in the span.
  bool insert(Word v);
  [[nodiscard]] bool contains(Word v) const { return reduce(v) == 0; }
  [[nodiscard]] std::size_t size() const { return count_; }
  [[nodiscard]] Word pivot_mask() const { return pivots_; }

 private:
  Word vec_[kMaxCols] = {};
  Word pivots_ = 0;
  std::size_t count_ = 0;
};

/// Inverse of a square nonsingular matrix given by its columns (bit i =
/// row i); returns the columns of the inverse. Returns an empty vector when
/// the matrix is singular.
[[nodiscard]] std::vector<Word> invert_columns(std::span<const Word> columns);

/// Applies the linear map whose columns are `map_columns` to v.
[[nodiscard]] inline Word apply_columns(std::span<const Word> map_columns, Word v) {
  Word out = 0;
  for (std::size_t i = 0; v != 0; ++i, v >>= 1) {
    if ((v & 1U) != 0) out ^= map_columns[i];
  }
  return out;
}

// Text forms. A vector string "1110" has character i equal to bit i.
[[nodiscard]] Word parse_vector(std::string_view bits);
[[nodiscard]] std::string format_vector(Word v, std::size_t width);

/// Plain-text matrix format: one row per line, '0'/'1' only.
[[nodiscard]] BitMatrix parse_matrix(std::string_view text);
[[nodiscard]] std::string format_matrix(const BitMatrix& m);

}  // namespace binmat
