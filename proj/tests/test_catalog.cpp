#include <gtest/gtest.h>

#include "binmat/catalog.hpp"
#include "binmat/connect.hpp"
#include "oracles.hpp"

using namespace binmat;

namespace {

const Catalog& catalog() {
  static const Catalog c = Catalog::load(default_fixtures_dir());
  return c;
}

}  // namespace

TEST(Catalog, EntriesSatisfyTheirExpectedFacts) {
  for (const auto& name : catalog().names()) {
    const auto& e = catalog().get(name);
    EXPECT_TRUE(expected_mismatches(e).empty()) << name;
    EXPECT_EQ(e.fingerprint, canonical_form(e.matroid)) << name;
  }
  EXPECT_THROW((void)catalog().get("no-such-entry"), std::out_of_range);
}

TEST(Catalog, FixedPointsCrossChecked) {
  // Entries with an independent description: the Fano plane as all nonzero
  // vectors of GF(2)^3, AG(3,2) as the odd-weight vectors of GF(2)^4, and
  // M(K4) as W3.
  EXPECT_TRUE(oracle::isomorphic(oracle::columns_of(catalog().matroid("F7")), {1, 2, 3, 4, 5, 6, 7}));
  EXPECT_TRUE(oracle::isomorphic(oracle::columns_of(catalog().matroid("AG32")),
                                 {1, 2, 4, 8, 7, 11, 13, 14}));
  EXPECT_TRUE(oracle::isomorphic(oracle::columns_of(catalog().matroid("W3")),
                                 oracle::columns_of(build_family(Family::wheel, 3))));
  EXPECT_EQ(catalog().identify(build_family(Family::pg32_minus, 0)), "PG32");
}

TEST(Catalog, ZFamilyShape) {
  for (std::size_t r = 4; r <= 6; ++r) {
    const auto z = build_Z(r);
    EXPECT_EQ(z.rank(), r);
    EXPECT_EQ(z.size(), 2 * r + 1);
    EXPECT_TRUE(is_3_connected(z));
  }
  EXPECT_TRUE(is_isomorphic(build_Z(4), catalog().matroid("Z4")).has_value());
  EXPECT_THROW((void)build_Z(3), std::invalid_argument);
  EXPECT_THROW((void)build_family(Family::wheel, 2), std::invalid_argument);
}

TEST(Catalog, LoadErrorsAreReported) {
  EXPECT_THROW((void)Catalog::load("/nonexistent/fixtures"), std::runtime_error);
}
