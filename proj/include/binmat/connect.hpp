#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "binmat/matroid.hpp"

namespace binmat {

/// A k-separation (A, E - A) together with its exactness flags.
struct Separation {
  ElementSet side_a;
  std::size_t order = 0;
  bool exact = false;
  bool minimal = false;

  friend bool operator==(const Separation&, const Separation&) = default;
};

/// lambda(X) = r(X) + r(E - X) - r(M).
[[nodiscard]] std::size_t connectivity(const BinaryMatroid& m, ElementSet x);

[[nodiscard]] bool is_k_separation(const BinaryMatroid& m, ElementSet x, std::size_t k);

/// Classifies (x, E - x) as a k-separation, or nullopt when it is not one.
[[nodiscard]] std::optional<Separation> classify_separation(const BinaryMatroid& m,
                                                            ElementSet x, std::size_t k);

/// Every k-separation of m, listing each partition once (side_a never
/// contains the last element).
[[nodiscard]] std::vector<Separation> separations(const BinaryMatroid& m, std::size_t k);

/// Matroids with at most three elements count as 3-connected exactly when
/// they are simple and cosimple.
[[nodiscard]] bool is_3_connected(const BinaryMatroid& m);

/// 3-connected and lambda(A) >= 3 whenever |A|, |B| >= 4.
[[nodiscard]] bool is_internally_4_connected(const BinaryMatroid& m);

/// Some non-minimal exact 3-separation, if one exists.
[[nodiscard]] std::optional<Separation> find_nonminimal_3_separation(const BinaryMatroid& m);

/// Maps labels of a minor N to labels of the host matroid.
using LabelMap = std::map<Label, Label>;

/// True when the host has a 3-separation (X, Y) with image(a) in X and
/// image(b) in Y. Throws std::invalid_argument if the map is not injective
/// or names labels the host does not have.
[[nodiscard]] bool induces_separation(const BinaryMatroid& host, const std::vector<Label>& a,
                                      const std::vector<Label>& b, const LabelMap& embedding);

}  // namespace binmat
