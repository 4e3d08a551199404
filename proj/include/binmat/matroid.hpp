#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "binmat/gf2.hpp"

namespace binmat {

using Label = std::string;

/// Subset of a matroid's ground set, stored as a bitmask over element
/// positions of the host matroid.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(Word bits) : bits_(bits) {}

  static constexpr ElementSet single(std::size_t i) { return ElementSet(Word{1} << i); }
  static constexpr ElementSet first(std::size_t n) {
    return ElementSet(n >= 64 ? ~Word{0} : (Word{1} << n) - 1);
  }

  [[nodiscard]] constexpr Word bits() const { return bits_; }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr std::size_t size() const {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  [[nodiscard]] constexpr bool contains(std::size_t i) const {
    return ((bits_ >> i) & 1U) != 0;
  }
  [[nodiscard]] constexpr bool subset_of(ElementSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  [[nodiscard]] constexpr ElementSet with(std::size_t i) const {
    return ElementSet(bits_ | (Word{1} << i));
  }
  [[nodiscard]] constexpr ElementSet without(std::size_t i) const {
    return ElementSet(bits_ & ~(Word{1} << i));
  }
  [[nodiscard]] std::vector<std::size_t> indices() const;

  friend constexpr ElementSet operator|(ElementSet a, ElementSet b) { return ElementSet(a.bits_ | b.bits_); }
  friend constexpr ElementSet operator&(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & b.bits_); }
  friend constexpr ElementSet operator-(ElementSet a, ElementSet b) { return ElementSet(a.bits_ & ~b.bits_); }
  friend constexpr auto operator<=>(ElementSet, ElementSet) = default;

 private:
  Word bits_ = 0;
};

/// Labels "1", "2", ..., "n".
[[nodiscard]] std::vector<Label> numbered_labels(std::size_t n);

/// A binary matroid: an ordered, labeled ground set together with a GF(2)
/// representation. The representation is kept in reduced row-echelon form
/// with no zero rows, so two objects compare equal exactly when they have
/// the same labels in the same order and the same independent sets.
class BinaryMatroid {
 public:
  BinaryMatroid() = default;
  /// Any representation with one column per label; rows need not be
  /// independent. Throws on a label count mismatch or duplicate labels.
  BinaryMatroid(const BitMatrix& representation, std::vector<Label> labels);

  [[nodiscard]] std::size_t size() const { return labels_.size(); }
  [[nodiscard]] std::size_t rank() const { return rep_.rows(); }
  [[nodiscard]] const std::vector<Label>& labels() const { return labels_; }
  [[nodiscard]] const Label& label(std::size_t i) const { return labels_.at(i); }
  [[nodiscard]] ElementSet ground() const { return ElementSet::first(size()); }

  /// Row-reduced representation, rank() x size().
  [[nodiscard]] const BitMatrix& rep() const { return rep_; }
  /// Column vectors of rep(); bit i is row i.
  [[nodiscard]] std::span<const Word> columns() const { return columns_; }
  [[nodiscard]] Word column(std::size_t i) const { return columns_.at(i); }

  /// Lexicographically first basis (pivot columns of rep()); the
  /// coordinates of every column in rep() are taken relative to it.
  [[nodiscard]] const std::vector<std::size_t>& standard_basis() const { return basis_; }
  [[nodiscard]] std::vector<std::size_t> nonbasis() const;
  /// D block of [I|D] relative to standard_basis(); columns follow the
  /// non-basis elements in ground-set order.
  [[nodiscard]] BitMatrix d_block() const;

  /// Position of a label; throws std::out_of_range for unknown labels.
  [[nodiscard]] std::size_t index_of(std::string_view label) const;
  [[nodiscard]] ElementSet set_of(std::initializer_list<std::string_view> labels) const;
  [[nodiscard]] ElementSet set_of(const std::vector<Label>& labels) const;
  [[nodiscard]] std::vector<Label> labels_of(ElementSet s) const;

  friend bool operator==(const BinaryMatroid&, const BinaryMatroid&) = default;

 private:
  BitMatrix rep_;
  std::vector<Label> labels_;
  std::vector<Word> columns_;
  std::vector<std::size_t> basis_;
};

/// Matroid of [I_r | D]; the first n_rows(D) labels name the identity
/// columns.
[[nodiscard]] BinaryMatroid from_standard_form(const BitMatrix& d_block,
                                               std::vector<Label> labels);
[[nodiscard]] BinaryMatroid from_standard_form(const BitMatrix& d_block);

/// Rank of a set of columns; throws if s is not inside the ground set.
[[nodiscard]] std::size_t rank_of(const BinaryMatroid& m, ElementSet s);
[[nodiscard]] bool is_independent(const BinaryMatroid& m, ElementSet s);

/// Dual matroid on the same labels, in the same order.
[[nodiscard]] BinaryMatroid dual(const BinaryMatroid& m);

/// M \ s. Surviving elements keep their labels and relative order.
[[nodiscard]] BinaryMatroid deletion(const BinaryMatroid& m, ElementSet s);
/// M / s, computed as dual(dual(M) \ s).
[[nodiscard]] BinaryMatroid contraction(const BinaryMatroid& m, ElementSet s);
/// M / contract \ remove. The sets must be disjoint.
[[nodiscard]] BinaryMatroid minor(const BinaryMatroid& m, ElementSet contract,
                                  ElementSet remove);
/// M restricted to s.
[[nodiscard]] BinaryMatroid restriction(const BinaryMatroid& m, ElementSet s);

[[nodiscard]] bool is_circuit(const BinaryMatroid& m, ElementSet s);
[[nodiscard]] bool is_cocircuit(const BinaryMatroid& m, ElementSet s);

[[nodiscard]] bool is_simple(const BinaryMatroid& m);
[[nodiscard]] bool is_cosimple(const BinaryMatroid& m);
/// Drops loops and keeps the first member of every parallel class.
[[nodiscard]] BinaryMatroid simplify(const BinaryMatroid& m);

/// Adds a new element whose column is given in standard coordinates
/// (rank() bits). The element is appended to the ground set.
[[nodiscard]] BinaryMatroid extend(const BinaryMatroid& m, Word column, Label label);
/// Adds a new element and a new row to [I|D]: the row (one bit per
/// non-basis element) is appended under D and the new element becomes the
/// last basis element, placed right after the last current basis element.
[[nodiscard]] BinaryMatroid coextend(const BinaryMatroid& m, Word row, Label label);

[[nodiscard]] BinaryMatroid relabeled(const BinaryMatroid& m, std::vector<Label> labels);
/// Same matroid with labels "1".."n" in ground-set order.
[[nodiscard]] BinaryMatroid renumbered(const BinaryMatroid& m);
/// Reorders the ground set; order[i] is the old position of new element i.
[[nodiscard]] BinaryMatroid reordered(const BinaryMatroid& m,
                                      std::span<const std::size_t> order);

using Edge = std::pair<int, int>;
/// Cycle matroid of a graph from its vertex-edge incidence matrix with the
/// last vertex row dropped. Edge i is labelled labels[i] (default "i+1").
[[nodiscard]] BinaryMatroid from_graph(std::span<const Edge> edges,
                                       std::vector<Label> labels = {});

// Matroid text format:
//   r n
//   <r rows of the D block, n-r characters each>
//   <n whitespace-separated labels, basis labels first>
// Lines starting with '#' are comments.
[[nodiscard]] BinaryMatroid read_matroid(std::istream& in);
[[nodiscard]] BinaryMatroid parse_matroid(std::string_view text);
[[nodiscard]] BinaryMatroid load_matroid(const std::string& path);
void write_matroid(std::ostream& out, const BinaryMatroid& m);
[[nodiscard]] std::string format_matroid(const BinaryMatroid& m);

}  // namespace binmat
