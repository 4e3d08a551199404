#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "binmat/iso.hpp"
#include "binmat/matroid.hpp"

namespace binmat {

/// Facts a catalog entry is expected to satisfy. Unset flags are not checked.
struct ExpectedFacts {
  std::size_t rank = 0;
  std::size_t size = 0;
  std::optional<bool> simple;
  std::optional<bool> three_connected;
  std::optional<bool> self_dual;
  std::optional<bool> internally_4_connected;
};

struct CatalogEntry {
  std::string name;
  BinaryMatroid matroid;
  std::string provenance;
  ExpectedFacts expected;
  CanonicalForm fingerprint;
};

/// Names of the facts in `entry.expected` that the matroid does not satisfy.
[[nodiscard]] std::vector<std::string> expected_mismatches(const CatalogEntry& entry);

class Catalog {
 public:
  /// Reads `<dir>/catalog.json` and the matroid files it references.
  /// Throws std::runtime_error on malformed fixtures or unknown references.
  static Catalog load(const std::filesystem::path& dir);

  /// Throws std::out_of_range for unknown names.
  [[nodiscard]] const CatalogEntry& get(std::string_view name) const;
  [[nodiscard]] const BinaryMatroid& matroid(std::string_view name) const {
    return get(name).matroid;
  }
  [[nodiscard]] bool contains(std::string_view name) const;
  /// Entry names in fixture order.
  [[nodiscard]] const std::vector<std::string>& names() const { return order_; }
  /// First entry (in fixture order) isomorphic to m.
  [[nodiscard]] std::optional<std::string> identify(const BinaryMatroid& m) const;
  /// Same, restricted to the given candidate names.
  [[nodiscard]] std::optional<std::string> identify(const BinaryMatroid& m,
                                                    const std::vector<std::string>& among) const;
  [[nodiscard]] const std::filesystem::path& directory() const { return dir_; }

 private:
  std::filesystem::path dir_;
  std::vector<std::string> order_;
  std::map<std::string, CatalogEntry, std::less<>> entries_;
};

/// Fixture directory: $BINMAT_FIXTURES if set, otherwise the directory the
/// build was configured with.
[[nodiscard]] std::filesystem::path default_fixtures_dir();

/// Z_r = [I_r | D] where the first r columns of D are all-ones with a zero
/// diagonal and the last column is all ones. Labels 1..r, b1..br, c<r>.
/// Throws std::invalid_argument for r < 4.
[[nodiscard]] BinaryMatroid build_Z(std::size_t r);

enum class Family {
  wheel,       // param: number of spokes (>= 3)
  k3p,         // param: p (>= 3); extra: edges added inside the 3-side (0..3)
  pg32_minus,  // param: number of points removed from PG(3,2) (0..2)
};

/// Throws std::invalid_argument for out-of-range parameters.
[[nodiscard]] BinaryMatroid build_family(Family kind, std::size_t param, std::size_t extra = 0);

}  // namespace binmat
