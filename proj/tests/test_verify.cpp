#include <gtest/gtest.h>

#include <set>

#include "binmat/verify.hpp"

using namespace binmat;
using namespace binmat::verify;

namespace {

const Catalog& catalog() {
  static const Catalog c = Catalog::load(default_fixtures_dir());
  return c;
}

Context context() { return Context{&catalog(), default_fixtures_dir()}; }

}  // namespace

TEST(Verify, RegistryIdsAreUnique) {
  std::set<std::string> ids;
  for (const auto& c : registry()) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_FALSE(c.description.empty());
  }
  for (const char* id : {"table-1a", "table-1b", "table-2a", "table-3a", "table-3b", "table-4",
                         "table-5", "claim-1", "claim-2", "claim-5", "claim-7", "corollary-3.1",
                         "r17-extremal", "properties"}) {
    EXPECT_TRUE(ids.count(id)) << id;
  }
}

TEST(Verify, UnknownCheckIsAnError) {
  EXPECT_THROW((void)run_check(context(), "nonexistent"), std::out_of_range);
}

TEST(Verify, SingleCheckRunsAlone) {
  const auto r = run_check(context(), "table-1a");
  EXPECT_EQ(r.status, Status::pass) << r.details.dump(2);
  // Three classes for P9 with the listed columns.
  const auto& block = r.details.at("blocks").at(0);
  EXPECT_EQ(block.at("parent"), "P9");
  EXPECT_EQ(block.at("computed_classes"), 3);
}

TEST(Verify, MissingFixtureBecomesError) {
  const Context broken{&catalog(), "/nonexistent/fixtures"};
  const auto r = run_check(broken, "table-1b");
  EXPECT_EQ(r.status, Status::error);
  EXPECT_TRUE(r.details.contains("error"));
  EXPECT_EQ(exit_code({r}), 1);
}

TEST(Verify, ReportShape) {
  std::vector<CheckResult> results{run_check(context(), "table-1b"), run_check(context(), "claim-1")};
  const auto j = report_json(results, false);
  EXPECT_EQ(j.at("schema"), 1);
  EXPECT_EQ(j.at("summary").at("total"), 2);
  for (const auto& c : j.at("checks")) {
    EXPECT_FALSE(c.contains("runtime_seconds"));
    EXPECT_TRUE(c.contains("details"));
  }
  EXPECT_TRUE(report_json(results, true).at("checks").at(0).contains("runtime_seconds"));
  EXPECT_EQ(exit_code(results), 0);
  EXPECT_NE(report_text(results).find("2/2 checks passed"), std::string::npos);
}
