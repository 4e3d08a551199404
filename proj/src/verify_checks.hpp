#pragma once

// Shared pieces of the check implementations. Not installed.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "binmat/enumerate.hpp"
#include "binmat/verify.hpp"

namespace binmat::verify {

void register_table_checks(std::vector<CheckInfo>& out);
void register_claim_checks(std::vector<CheckInfo>& out);

/// m extended by each column in turn, new elements labelled by fresh_label.
[[nodiscard]] BinaryMatroid extend_all(BinaryMatroid m, const std::vector<std::string>& columns);

/// renumbered(coextend(m, row)): the new element sits right after the basis
/// and every element is relabelled by its position.
[[nodiscard]] BinaryMatroid coextend_renumbered(const BinaryMatroid& m, const std::string& row);

/// Isomorphic to the named catalog entry.
[[nodiscard]] bool is_entry(const Context& ctx, const BinaryMatroid& m, const std::string& name);

/// Minor witness in label form, or null when there is none.
[[nodiscard]] json minor_json(const BinaryMatroid& m, const BinaryMatroid& target);

/// Some single-element contraction of m is isomorphic to target; returns
/// the contracted label.
[[nodiscard]] std::optional<Label> contraction_witness(const BinaryMatroid& m,
                                                       const BinaryMatroid& target);

/// One class of a transcribed partition after errata are applied.
struct ListedClass {
  std::size_t index = 0;  // 1-based position as printed
  std::optional<std::string> name;
  std::set<std::string> members;
  // Rows printed more than once that no erratum accounts for.
  std::set<std::string> duplicates;
  json source;
};

/// Applies the errata that concern `parent` to the block's classes.
/// Errata items: {"parent", "class" (1-based), "listed", "adopted",
/// "field" (optional), "reason"}. Without a field the item edits rows; a
/// null listed value adds the adopted row and a null adopted value removes
/// the listed one. "field": "name" replaces the class name, and a minor
/// column field ("minors", ...) swaps one entry of that list the same way.
/// Throws std::runtime_error when an erratum does not match the listing.
[[nodiscard]] std::vector<ListedClass> apply_errata(const json& block, const json& errata);

/// Compares the computed classes of one parent with the listed partition,
/// checking memberships, names (by isomorphism with catalog entries) and the
/// minor columns ("minors", "contraction_minors", "deletion_minors").
/// Returns the details of the block.
json compare_partition(const Context& ctx, Recorder& rec, const std::string& parent_name,
                       const std::vector<ExtensionClass>& computed,
                       const std::vector<ListedClass>& listed);

}  // namespace binmat::verify
