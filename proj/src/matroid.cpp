#include "binmat/matroid.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace binmat {

std::vector<std::size_t> ElementSet::indices() const {
  std::vector<std::size_t> out;
  Word w = bits_;
  while (w != 0) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(w)));
    w &= w - 1;
  }
  return out;
}

std::vector<Label> numbered_labels(std::size_t n) {
  std::vector<Label> out;
  out.reserve(n);
  for (std::size_t i = 1; i <= n; ++i) out.push_back(std::to_string(i));
  return out;
}

BinaryMatroid::BinaryMatroid(const BitMatrix& representation, std::vector<Label> labels)
    : labels_(std::move(labels)) {
  if (representation.cols() != labels_.size()) {
    throw std::invalid_argument("label count does not match the number of columns");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& l : labels_) {
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate label: " + l);
  }
  rep_ = row_basis(representation);
  if (rep_.rows() > 64) throw std::invalid_argument("rank above 64 is unsupported");
  columns_ = rep_.columns();
  basis_ = pivot_columns(rep_);
}

std::vector<std::size_t> BinaryMatroid::nonbasis() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < size(); ++i) {
    if (k < basis_.size() && basis_[k] == i) {
      ++k;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

BitMatrix BinaryMatroid::d_block() const {
  const auto rest = nonbasis();
  return rep_.select_columns(rest);
}

std::size_t BinaryMatroid::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  throw std::out_of_range("unknown label: " + std::string(label));
}

ElementSet BinaryMatroid::set_of(std::initializer_list<std::string_view> labels) const {
  ElementSet s;
  for (auto l : labels) s = s.with(index_of(l));
  return s;
}

ElementSet BinaryMatroid::set_of(const std::vector<Label>& labels) const {
  ElementSet s;
  for (const auto& l : labels) s = s.with(index_of(l));
  return s;
}

std::vector<Label> BinaryMatroid::labels_of(ElementSet s) const {
  std::vector<Label> out;
  for (std::size_t i : s.indices()) out.push_back(labels_.at(i));
  return out;
}

BinaryMatroid from_standard_form(const BitMatrix& d_block, std::vector<Label> labels) {
  const std::size_t r = d_block.rows();
  if (labels.size() != r + d_block.cols()) {
    throw std::invalid_argument("label count must equal rows + columns of D");
  }
  const BitMatrix rep = d_block.cols() == 0 && r > 0
                            ? BitMatrix::identity(r)
                            : hconcat(BitMatrix::identity(r), d_block);
  return BinaryMatroid(rep, std::move(labels));
}

BinaryMatroid from_standard_form(const BitMatrix& d_block) {
  return from_standard_form(d_block, numbered_labels(d_block.rows() + d_block.cols()));
}

namespace {

void check_inside(const BinaryMatroid& m, ElementSet s) {
  if (!s.subset_of(m.ground())) throw std::out_of_range("element set outside the ground set");
}

std::size_t rank_of_unchecked(const BinaryMatroid& m, ElementSet s) {
  XorBasis basis;
  Word w = s.bits();
  const auto cols = m.columns();
  while (w != 0) {
    basis.insert(cols[static_cast<std::size_t>(std::countr_zero(w))]);
    w &= w - 1;
  }
  return basis.size();
}

}  // namespace

std::size_t rank_of(const BinaryMatroid& m, ElementSet s) {
  check_inside(m, s);
  return rank_of_unchecked(m, s);
}

bool is_independent(const BinaryMatroid& m, ElementSet s) {
  return rank_of(m, s) == s.size();
}

BinaryMatroid dual(const BinaryMatroid& m) {
  const auto& basis = m.standard_basis();
  const auto rest = m.nonbasis();
  const BitMatrix d = m.d_block();
  const std::size_t k = rest.size();
  std::vector<Word> cols(m.size(), 0);
  for (std::size_t i = 0; i < basis.size(); ++i) cols[basis[i]] = d.row(i);
  for (std::size_t j = 0; j < k; ++j) cols[rest[j]] = Word{1} << j;
  return BinaryMatroid(BitMatrix::from_columns(cols, k), m.labels());
}

BinaryMatroid deletion(const BinaryMatroid& m, ElementSet s) {
  check_inside(m, s);
  const auto keep = (m.ground() - s).indices();
  std::vector<Label> labels;
  labels.reserve(keep.size());
  for (std::size_t i : keep) labels.push_back(m.label(i));
  return BinaryMatroid(m.rep().select_columns(keep), std::move(labels));
}

BinaryMatroid contraction(const BinaryMatroid& m, ElementSet s) {
  check_inside(m, s);
  return dual(deletion(dual(m), s));
}

BinaryMatroid minor(const BinaryMatroid& m, ElementSet contract, ElementSet remove) {
  if (!(contract & remove).empty()) {
    throw std::invalid_argument("contraction and deletion sets overlap");
  }
  check_inside(m, contract | remove);
  // Positions shift after deletion, so translate the contraction set by label.
  const BinaryMatroid d = deletion(m, remove);
  return contraction(d, d.set_of(m.labels_of(contract)));
}

BinaryMatroid restriction(const BinaryMatroid& m, ElementSet s) {
  check_inside(m, s);
  return deletion(m, m.ground() - s);
}

bool is_circuit(const BinaryMatroid& m, ElementSet s) {
  check_inside(m, s);
  if (s.empty()) return false;
  const std::size_t k = s.size();
  if (rank_of_unchecked(m, s) != k - 1) return false;
  for (std::size_t i : s.indices()) {
    if (rank_of_unchecked(m, s.without(i)) != k - 1) return false;
  }
  return true;
}

bool is_cocircuit(const BinaryMatroid& m, ElementSet s) {
  check_inside(m, s);
  return is_circuit(dual(m), s);
}

bool is_simple(const BinaryMatroid& m) {
  std::unordered_set<Word> seen;
  for (Word c : m.columns()) {
    if (c == 0 || !seen.insert(c).second) return false;
  }
  return true;
}

bool is_cosimple(const BinaryMatroid& m) { return is_simple(dual(m)); }

BinaryMatroid simplify(const BinaryMatroid& m) {
  std::unordered_set<Word> seen;
  ElementSet drop;
  for (std::size_t i = 0; i < m.size(); ++i) {
    const Word c = m.column(i);
    if (c == 0 || !seen.insert(c).second) drop = drop.with(i);
  }
  return deletion(m, drop);
}

BinaryMatroid extend(const BinaryMatroid& m, Word column, Label label) {
  if (m.rank() < 64 && (column >> m.rank()) != 0) {
    throw std::invalid_argument("extension column wider than the rank");
  }
  std::vector<Word> cols(m.columns().begin(), m.columns().end());
  cols.push_back(column);
  auto labels = m.labels();
  labels.push_back(std::move(label));
  return BinaryMatroid(BitMatrix::from_columns(cols, m.rank()), std::move(labels));
}

BinaryMatroid coextend(const BinaryMatroid& m, Word row, Label label) {
  const auto& basis = m.standard_basis();
  const auto rest = m.nonbasis();
  if (rest.size() < 64 && (row >> rest.size()) != 0) {
    throw std::invalid_argument("coextension row wider than the D block");
  }
  const std::size_t r = m.rank();
  const std::size_t insert_at = basis.empty() ? 0 : basis.back() + 1;
  std::vector<Word> cols;
  std::vector<Label> labels;
  cols.reserve(m.size() + 1);
  labels.reserve(m.size() + 1);
  std::size_t j = 0;
  for (std::size_t i = 0; i <= m.size(); ++i) {
    if (i == insert_at) {
      cols.push_back(Word{1} << r);
      labels.push_back(label);
    }
    if (i == m.size()) break;
    Word c = m.column(i);
    if (j < rest.size() && rest[j] == i) {
      c |= ((row >> j) & 1U) << r;
      ++j;
    }
    cols.push_back(c);
    labels.push_back(m.label(i));
  }
  return BinaryMatroid(BitMatrix::from_columns(cols, r + 1), std::move(labels));
}

BinaryMatroid relabeled(const BinaryMatroid& m, std::vector<Label> labels) {
  return BinaryMatroid(m.rep(), std::move(labels));
}

BinaryMatroid renumbered(const BinaryMatroid& m) {
  return relabeled(m, numbered_labels(m.size()));
}

BinaryMatroid reordered(const BinaryMatroid& m, std::span<const std::size_t> order) {
  if (order.size() != m.size()) throw std::invalid_argument("order must be a permutation");
  std::vector<Label> labels;
  for (std::size_t i : order) labels.push_back(m.label(i));
  return BinaryMatroid(m.rep().select_columns(order), std::move(labels));
}

BinaryMatroid from_graph(std::span<const Edge> edges, std::vector<Label> labels) {
  if (edges.empty()) throw std::invalid_argument("graph has no edges");
  if (labels.empty()) labels = numbered_labels(edges.size());
  std::map<int, std::size_t> vertex_row;
  for (const auto& [u, v] : edges) {
    vertex_row.emplace(u, 0);
    vertex_row.emplace(v, 0);
  }
  std::size_t next = 0;
  for (auto& [vertex, row] : vertex_row) row = next++;
  // The last vertex row is dependent on the others within its component; drop it.
  const std::size_t rows = vertex_row.size() - 1;
  std::vector<Word> cols;
  cols.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    Word c = 0;
    if (u != v) {
      for (int x : {u, v}) {
        const std::size_t r = vertex_row.at(x);
        if (r < rows) c ^= Word{1} << r;
      }
    }
    cols.push_back(c);
  }
  return BinaryMatroid(BitMatrix::from_columns(cols, rows), std::move(labels));
}

namespace {

bool next_content_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') continue;
    line = line.substr(first, line.find_last_not_of(" \t") - first + 1);
    return true;
  }
  return false;
}

}  // namespace

BinaryMatroid read_matroid(std::istream& in) {
  std::string line;
  if (!next_content_line(in, line)) throw std::runtime_error("matroid file: missing header");
  std::size_t r = 0;
  std::size_t n = 0;
  {
    std::istringstream header(line);
    if (!(header >> r >> n) || r > n) {
      throw std::runtime_error("matroid file: bad header '" + line + "'");
    }
  }
  const std::size_t k = n - r;
  std::vector<std::string> rows;
  if (k > 0) {
    for (std::size_t i = 0; i < r; ++i) {
      if (!next_content_line(in, line)) throw std::runtime_error("matroid file: missing D row");
      if (line.size() != k) {
        throw std::runtime_error("matroid file: D row '" + line + "' should have " +
                                 std::to_string(k) + " entries");
      }
      rows.push_back(line);
    }
  }
  std::vector<Label> labels;
  if (next_content_line(in, line)) {
    std::istringstream ls(line);
    for (std::string l; ls >> l;) labels.push_back(l);
  } else {
    labels = numbered_labels(n);
  }
  if (labels.size() != n) throw std::runtime_error("matroid file: wrong number of labels");
  BitMatrix d = k > 0 ? BitMatrix::from_strings(rows) : BitMatrix(r, 0);
  if (r == 0) d = BitMatrix(0, k);
  const BinaryMatroid m = from_standard_form(d, labels);
  if (m.rank() != r) throw std::runtime_error("matroid file: inconsistent rank");
  return m;
}

BinaryMatroid parse_matroid(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_matroid(in);
}

BinaryMatroid load_matroid(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open matroid file " + path);
  return read_matroid(in);
}

void write_matroid(std::ostream& out, const BinaryMatroid& m) {
  out << m.rank() << ' ' << m.size() << '\n';
  const BitMatrix d = m.d_block();
  if (d.cols() > 0) out << format_matrix(d);
  std::vector<Label> ordered;
  for (std::size_t i : m.standard_basis()) ordered.push_back(m.label(i));
  for (std::size_t i : m.nonbasis()) ordered.push_back(m.label(i));
  for (std::size_t i = 0; i < ordered.size(); ++i) {
    out << (i == 0 ? "" : " ") << ordered[i];
  }
  out << '\n';
}

std::string format_matroid(const BinaryMatroid& m) {
  std::ostringstream out;
  write_matroid(out, m);
  return out.str();
}

}  // namespace binmat
