#include "binmat/gf2.hpp"

#include <bit>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace binmat {

namespace {

Word low_mask(std::size_t width) {
  return width >= 64 ? ~Word{0} : ((Word{1} << width) - 1);
}

void check_width(std::size_t cols) {
  if (cols > kMaxCols) {
    throw std::invalid_argument("BitMatrix supports at most 64 columns");
  }
}

// In-place Gauss-Jordan elimination; returns the pivot columns.
std::vector<std::size_t> eliminate(std::vector<Word>& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < rows.size(); ++c) {
    const Word bit = Word{1} << c;
    std::size_t found = next;
    while (found < rows.size() && (rows[found] & bit) == 0) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && (rows[r] & bit) != 0) rows[r] ^= rows[next];
    }
    pivots.push_back(c);
    ++next;
  }
  return pivots;
}

}  // namespace

BitMatrix::BitMatrix(std::size_t rows, std::size_t cols) : rows_(rows, 0), cols_(cols) {
  check_width(cols);
}

BitMatrix::BitMatrix(std::vector<Word> row_words, std::size_t cols)
    : rows_(std::move(row_words)), cols_(cols) {
  check_width(cols);
  for (Word w : rows_) {
    if ((w & ~low_mask(cols)) != 0) {
      throw std::invalid_argument("row word has bits beyond the column count");
    }
  }
}

BitMatrix BitMatrix::identity(std::size_t n) {
  std::vector<Word> rows(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = Word{1} << i;
  return BitMatrix(std::move(rows), n);
}

BitMatrix BitMatrix::from_columns(std::span<const Word> columns, std::size_t rows) {
  check_width(columns.size());
  if (rows > 64) throw std::invalid_argument("column words hold at most 64 rows");
  std::vector<Word> out(rows, 0);
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if ((columns[c] & ~low_mask(rows)) != 0) {
      throw std::invalid_argument("column word has bits beyond the row count");
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (((columns[c] >> r) & 1U) != 0) out[r] |= Word{1} << c;
    }
  }
  return BitMatrix(std::move(out), columns.size());
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  std::vector<Word> words;
  words.reserve(rows.size());
  const std::size_t width = rows.empty() ? 0 : rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != width) throw std::invalid_argument("ragged matrix rows");
    words.push_back(parse_vector(r));
  }
  return BitMatrix(std::move(words), width);
}

Word BitMatrix::column(std::size_t c) const {
  if (rows_.size() > 64) throw std::logic_error("column() needs at most 64 rows");
  Word out = 0;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    out |= ((rows_[r] >> c) & 1U) << r;
  }
  return out;
}

std::vector<Word> BitMatrix::columns() const {
  std::vector<Word> out(cols_);
  for (std::size_t c = 0; c < cols_; ++c) out[c] = column(c);
  return out;
}

BitMatrix BitMatrix::select_columns(std::span<const std::size_t> cols) const {
  std::vector<Word> out(rows_.size(), 0);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j] >= cols_) throw std::out_of_range("column index");
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      out[r] |= ((rows_[r] >> cols[j]) & 1U) << j;
    }
  }
  return BitMatrix(std::move(out), cols.size());
}

BitMatrix BitMatrix::select_rows(std::span<const std::size_t> rows) const {
  std::vector<Word> out;
  out.reserve(rows.size());
  for (std::size_t r : rows) out.push_back(rows_.at(r));
  return BitMatrix(std::move(out), cols_);
}

std::size_t rank(const BitMatrix& m) {
  XorBasis basis;
  for (Word w : m.row_words()) basis.insert(w);
  return basis.size();
}

BitMatrix rref(const BitMatrix& m) {
  std::vector<Word> rows(m.row_words().begin(), m.row_words().end());
  eliminate(rows, m.cols());
  return BitMatrix(std::move(rows), m.cols());
}

std::vector<std::size_t> pivot_columns(const BitMatrix& m) {
  std::vector<Word> rows(m.row_words().begin(), m.row_words().end());
  return eliminate(rows, m.cols());
}

BitMatrix row_basis(const BitMatrix& m) {
  std::vector<Word> rows(m.row_words().begin(), m.row_words().end());
  const auto pivots = eliminate(rows, m.cols());
  rows.resize(pivots.size());
  return BitMatrix(std::move(rows), m.cols());
}

BitMatrix transpose(const BitMatrix& m) {
  check_width(m.rows());
  std::vector<Word> out(m.cols(), 0);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Word w = m.row(r);
    while (w != 0) {
      const auto c = static_cast<std::size_t>(std::countr_zero(w));
      out[c] |= Word{1} << r;
      w &= w - 1;
    }
  }
  return BitMatrix(std::move(out), m.rows());
}

BitMatrix hconcat(const BitMatrix& left, const BitMatrix& right) {
  if (left.rows() != right.rows()) throw std::invalid_argument("hconcat row mismatch");
  check_width(left.cols() + right.cols());
  std::vector<Word> out(left.rows());
  for (std::size_t r = 0; r < left.rows(); ++r) {
    out[r] = left.row(r) | (right.cols() == 0 ? 0 : right.row(r) << left.cols());
  }
  return BitMatrix(std::move(out), left.cols() + right.cols());
}

BitMatrix vconcat(const BitMatrix& top, const BitMatrix& bottom) {
  if (top.cols() != bottom.cols()) throw std::invalid_argument("vconcat column mismatch");
  std::vector<Word> out(top.row_words().begin(), top.row_words().end());
  out.insert(out.end(), bottom.row_words().begin(), bottom.row_words().end());
  return BitMatrix(std::move(out), top.cols());
}

BitMatrix standard_form(const BitMatrix& m, std::span<const std::size_t> basis_cols) {
  const std::size_t r = rank(m);
  if (basis_cols.size() != r) {
    throw std::invalid_argument("basis size differs from the rank");
  }
  std::vector<bool> in_basis(m.cols(), false);
  for (std::size_t c : basis_cols) {
    if (c >= m.cols() || in_basis[c]) throw std::invalid_argument("bad basis column");
    in_basis[c] = true;
  }
  std::vector<Word> rows(m.row_words().begin(), m.row_words().end());
  // Pivot on each basis column in turn; row i ends up owning basis_cols[i].
  for (std::size_t i = 0; i < basis_cols.size(); ++i) {
    const Word bit = Word{1} << basis_cols[i];
    std::size_t found = i;
    while (found < rows.size() && (rows[found] & bit) == 0) ++found;
    if (found == rows.size()) throw std::invalid_argument("basis columns are dependent");
    std::swap(rows[i], rows[found]);
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k != i && (rows[k] & bit) != 0) rows[k] ^= rows[i];
    }
  }
  rows.resize(r);
  std::vector<std::size_t> rest;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!in_basis[c]) rest.push_back(c);
  }
  return BitMatrix(std::move(rows), m.cols()).select_columns(rest);
}

std::size_t rank_of_vectors(std::span<const Word> vectors) {
  XorBasis basis;
  for (Word v : vectors) basis.insert(v);
  return basis.size();
}

Word XorBasis::reduce(Word v) const {
  Word hit = v & pivots_;
  while (hit != 0) {
    const int b = std::countr_zero(hit);
    v ^= vec_[b];
    hit = v & pivots_ & ((~Word{0} << b) << 1);
  }
  return v;
}

bool XorBasis::insert(Word v) {
  const Word r = reduce(v);
  if (r == 0) return false;
  const int b = std::countr_zero(r);
  vec_[b] = r;
  pivots_ |= Word{1} << b;
  ++count_;
  return true;
}

std::vector<Word> invert_columns(std::span<const Word> columns) {
  const std::size_t n = columns.size();
  if (n > 32) throw std::invalid_argument("invert_columns supports n <= 32");
  // Row-reduce [A | I] where rows are packed as (A-row) | (I-row << n).
  const BitMatrix a = BitMatrix::from_columns(columns, n);
  std::vector<Word> rows(n);
  for (std::size_t r = 0; r < n; ++r) rows[r] = a.row(r) | (Word{1} << (n + r));
  for (std::size_t c = 0; c < n; ++c) {
    const Word bit = Word{1} << c;
    std::size_t found = c;
    while (found < n && (rows[found] & bit) == 0) ++found;
    if (found == n) return {};
    std::swap(rows[c], rows[found]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r != c && (rows[r] & bit) != 0) rows[r] ^= rows[c];
    }
  }
  std::vector<Word> inv_rows(n);
  for (std::size_t r = 0; r < n; ++r) inv_rows[r] = rows[r] >> n;
  return BitMatrix(std::move(inv_rows), n).columns();
}

Word parse_vector(std::string_view bits) {
  if (bits.size() > 64) throw std::invalid_argument("vector longer than 64 bits");
  Word out = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1') {
      out |= Word{1} << i;
    } else if (bits[i] != '0') {
      throw std::invalid_argument("vector strings may contain only '0' and '1': " +
                                  std::string(bits));
    }
  }
  return out;
}

std::string format_vector(Word v, std::size_t width) {
  std::string out(width, '0');
  for (std::size_t i = 0; i < width; ++i) {
    if (((v >> i) & 1U) != 0) out[i] = '1';
  }
  return out;
}

BitMatrix parse_matrix(std::string_view text) {
  std::vector<std::string> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    rows.push_back(line);
  }
  return BitMatrix::from_strings(rows);
}

std::string format_matrix(const BitMatrix& m) {
  std::string out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out += format_vector(m.row(r), m.cols());
    out += '\n';
  }
  return out;
}

}  // namespace binmat
