#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "binmat/matroid.hpp"

namespace binmat {

/// Largest ground set canonical_form accepts.
inline constexpr std::size_t kMaxCanonicalSize = 20;

/// Relabeling- and representation-invariant fingerprint of a binary
/// matroid. Equal fingerprints mean isomorphic matroids.
struct CanonicalForm {
  std::vector<std::uint8_t> bytes;

  [[nodiscard]] std::string hex() const;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Bijection between ground sets: element i of the source maps to element
/// image[i] of the target (positions, not labels).
struct Isomorphism {
  std::vector<std::size_t> image;

  [[nodiscard]] Isomorphism inverse() const;
  /// (this then other)
  [[nodiscard]] Isomorphism then(const Isomorphism& other) const;
  friend bool operator==(const Isomorphism&, const Isomorphism&) = default;
};

/// Minimum, over all ordered bases B, of the sorted multiset of fundamental
/// circuit vectors of the non-basis elements with respect to B. Computed on
/// whichever of M, M* has the smaller rank. Throws std::length_error above
/// kMaxCanonicalSize elements.
[[nodiscard]] CanonicalForm canonical_form(const BinaryMatroid& m);

/// Witness bijection when m and n are isomorphic.
[[nodiscard]] std::optional<Isomorphism> is_isomorphic(const BinaryMatroid& m,
                                                       const BinaryMatroid& n);

/// True iff `map` is an isomorphism m -> n. Checked through the
/// fundamental-circuit certificate of a basis and, for ground sets of at
/// most 12 elements, also by comparing ranks of every subset. Throws
/// std::invalid_argument when map is not a bijection.
[[nodiscard]] bool verify_map(const BinaryMatroid& m, const BinaryMatroid& n,
                              const Isomorphism& map);
/// Label form: element i of m maps to the element of n labelled images[i].
[[nodiscard]] bool verify_map(const BinaryMatroid& m, const BinaryMatroid& n,
                              const std::vector<Label>& images);

/// Witness translated to labels: (label in m, label in n) for each element.
[[nodiscard]] std::vector<std::pair<Label, Label>> label_pairs(const BinaryMatroid& m,
                                                               const BinaryMatroid& n,
                                                               const Isomorphism& map);

}  // namespace binmat
