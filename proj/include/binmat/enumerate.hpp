#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "binmat/iso.hpp"
#include "binmat/matroid.hpp"

namespace binmat {

/// One isomorphism class of single-element extensions (or coextensions) of
/// a parent. `members` are the columns (rows) that produce it, as words of
/// `width` bits; see format_vector for their text form.
struct ExtensionClass {
  BinaryMatroid representative;
  std::vector<Word> members;
  std::size_t width = 0;
  CanonicalForm fingerprint;
  std::optional<std::string> name;

  [[nodiscard]] std::vector<std::string> member_strings() const;
};

struct ExtensionOptions {
  /// Skip the zero column and columns already present.
  bool require_simple = true;
  bool require_3_connected = true;
};

struct CoextensionOptions {
  /// Skip rows that create a coloop or a series pair.
  bool require_cosimple = true;
  bool require_3_connected = true;
};

/// Groups candidate columns (standard coordinates of m, rank() bits) into
/// isomorphism classes. Candidates failing the 3-connectivity filter are
/// dropped. Classes are ordered by their smallest member string and each
/// class's members are sorted the same way. Each representative is the
/// extension by the first member, with the new element labelled by
/// fresh_label(m).
[[nodiscard]] std::vector<ExtensionClass> classify_extensions(const BinaryMatroid& m,
                                                              std::span<const Word> candidates,
                                                              bool require_3_connected = true);
/// Same for coextension rows (one bit per non-basis element of m).
[[nodiscard]] std::vector<ExtensionClass> classify_coextensions(const BinaryMatroid& m,
                                                                std::span<const Word> candidates,
                                                                bool require_3_connected = true);

/// All admissible extension columns of m, grouped by isomorphism. Throws
/// std::invalid_argument for rank-0 matroids.
[[nodiscard]] std::vector<ExtensionClass> extensions(const BinaryMatroid& m,
                                                     const ExtensionOptions& options = {});
[[nodiscard]] std::vector<ExtensionClass> coextensions(const BinaryMatroid& m,
                                                       const CoextensionOptions& options = {});

[[nodiscard]] std::vector<Word> extension_candidates(const BinaryMatroid& m, bool require_simple);
[[nodiscard]] std::vector<Word> coextension_candidates(const BinaryMatroid& m,
                                                       bool require_cosimple);

/// A label not yet used in m: one more than the largest numeric label, or
/// "e<k>" when labels are not all numeric.
[[nodiscard]] Label fresh_label(const BinaryMatroid& m);

/// M / contract_set \ delete_set is isomorphic to the target through iso,
/// whose domain is the minor's ground set (m's surviving elements in
/// order).
struct MinorWitness {
  ElementSet contract_set;
  ElementSet delete_set;
  Isomorphism iso;
};

/// Searches for a target-minor. Contractions range over independent sets
/// of size r(m) - r(target); the remaining elements are matched by looking
/// for an ordered basis whose induced linear map carries the target's
/// standard representation onto columns of the contraction.
[[nodiscard]] std::optional<MinorWitness> has_minor(const BinaryMatroid& m,
                                                    const BinaryMatroid& target);
/// Rebuilds the minor through the public deletion/contraction operations
/// and checks the isomorphism.
[[nodiscard]] bool verify_witness(const BinaryMatroid& m, const BinaryMatroid& target,
                                  const MinorWitness& witness);

// Decomposer criterion ----------------------------------------------------

enum class GrowthKind { extension, coextension };

struct DecomposerMember {
  GrowthKind kind = GrowthKind::extension;
  Word vector = 0;
  std::size_t width = 0;
  std::size_t class_index = 0;  // into the extension or coextension class list
  bool circuit = false;
  bool cocircuit = false;

  [[nodiscard]] bool preserved() const { return circuit && cocircuit; }
};

struct DecomposerClass {
  GrowthKind kind = GrowthKind::extension;
  ExtensionClass cls;
  bool included = true;
  bool preserved_in_representative = false;
  bool preserved_in_all_members = false;
};

struct DecomposerReport {
  std::vector<std::string> precondition_failures;
  std::vector<DecomposerClass> classes;
  std::vector<DecomposerMember> members;
  /// Every included member keeps the set a circuit and a cocircuit.
  bool preserved = false;

  [[nodiscard]] bool precondition_ok() const { return precondition_failures.empty(); }
};

/// Returns true for classes that take part in the check.
using ClassFilter = std::function<bool(const BinaryMatroid& representative)>;

/// Checks whether `a` stays a circuit and a cocircuit in every 3-connected
/// single-element extension and coextension of n accepted by the filter.
/// Labels of n survive into every extension and coextension, so the image
/// of a is a by label.
[[nodiscard]] DecomposerReport decomposer_criterion(const BinaryMatroid& n, ElementSet a,
                                                    const ClassFilter& include = {});

// Growth ------------------------------------------------------------------

struct SplitterChain {
  std::vector<BinaryMatroid> steps;
  std::vector<GrowthKind> kinds;  // kinds[i] relates steps[i] to steps[i+1]
};

struct GrowthOptions {
  std::size_t max_rank = 0;
  std::size_t max_size = 0;
  std::vector<BinaryMatroid> forbidden;
  /// Upper bound on explored states; exceeding it throws std::length_error.
  std::size_t max_states = 20000;
};

/// One chain per distinct matroid reached (by canonical form), seed first,
/// then ordered by size, rank and fingerprint.
struct GrowthResult {
  std::vector<SplitterChain> chains;
};

/// Breadth-first growth by 3-connected single-element extensions and
/// coextensions. Below max_rank a coextension may follow at most two
/// consecutive extensions, and when it follows exactly two, the three new
/// elements must form a triad. Matroids with a forbidden minor are pruned.
/// When the seed is a wheel or a whirl, larger wheels or whirls are not
/// reached: going between consecutive ones needs a step that is not
/// 3-connected.
[[nodiscard]] GrowthResult grow_3connected(const BinaryMatroid& seed,
                                           const GrowthOptions& options);

/// Checks the grouped shape of a chain: every rank-increasing group adds at
/// most three elements, three only as a triad, and each step is
/// 3-connected.
[[nodiscard]] bool has_splitter_shape(const SplitterChain& chain);

// Row taxonomy for coextensions of a matroid with a distinguished last
// column ----------------------------------------------------------------

struct TypedRows {
  std::size_t width = 0;
  std::vector<Word> type_one;    // allowed rows of the parent without its last column, +0/+1
  std::vector<Word> type_two;    // unit vector plus a 1 in the last position
  std::vector<Word> type_three;  // rows of D with the last entry flipped
};

[[nodiscard]] TypedRows typed_coextension_rows(const BinaryMatroid& parent,
                                               std::span<const Word> base_rows);

}  // namespace binmat
