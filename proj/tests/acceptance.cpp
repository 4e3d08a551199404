// Runs the checks behind each acceptance criterion and prints one line per
// criterion. Exit status is 0 only when every criterion passes.

#include <algorithm>
#include <atomic>
#include <iostream>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "binmat/verify.hpp"

using namespace binmat;
using namespace binmat::verify;

namespace {

struct Criterion {
  int number;
  std::string title;
  std::vector<std::string> checks;
};

const std::vector<Criterion> kCriteria{
    {1, "extensions of P9 and the closure up to PG(3,2)", {"table-1a"}},
    {2, "cosimple coextensions of P9", {"table-1b"}},
    {3, "circuit-cocircuit {1,2,5,6}, D2 internally 4-connected, E4 and E5 self-dual", {"claim-2"}},
    {4, "extensions of E5 and their minors", {"table-2a"}},
    {5, "extensions of M(K5\\e) and of the prism, with the stated bijections", {"table-3a", "table-3b"}},
    {6, "coextensions of D1 and D2; all but A, B, C, Z have an E4 minor", {"table-4", "claim-7"}},
    {7, "prism-free growth from E5 reaches exactly the chain A..R", {"table-5"}},
    {8, "R17 is prism-free and every 3-connected extension has a prism minor", {"r17-extremal"}},
    {9, "coextension partitions of A, B, C, Z, X1, X3 and the E4 witnesses",
     {"A1-partition-A", "A1-partition-B", "A1-partition-C", "A1-partition-Z", "A2-partition-X1",
      "A2-partition-X3", "claim-5"}},
    {10, "Z_r families avoid M(W4); Z4 deletions give AG(3,2) and S8", {"claim-1"}},
    {11, "internally 4-connected members of the chain and of PG(3,2) restrictions",
     {"corollary-3.1"}},
    {12, "duality, connectivity, submodularity and isomorphism properties", {"properties"}},
};

}  // namespace

int main() {
  const auto catalog = Catalog::load(default_fixtures_dir());
  const Context ctx{&catalog, default_fixtures_dir()};

  // Every check is independent, so they can share a pool.
  std::vector<std::string> ids;
  for (const auto& c : kCriteria) ids.insert(ids.end(), c.checks.begin(), c.checks.end());
  std::map<std::string, CheckResult> results;
  {
    std::vector<CheckResult> slots(ids.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next++; i < ids.size(); i = next++) slots[i] = run_check(ctx, ids[i]);
    };
    const std::size_t jobs = std::max(1U, std::thread::hardware_concurrency());
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& r : slots) results.emplace(r.id, std::move(r));
  }

  int failed = 0;
  for (const auto& c : kCriteria) {
    bool ok = true;
    std::string failing;
    for (const auto& id : c.checks) {
      if (results.at(id).status != Status::pass) {
        ok = false;
        failing += (failing.empty() ? "" : ", ") + id;
      }
    }
    failed += ok ? 0 : 1;
    std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << c.number << ": " << c.title;
    if (!ok) std::cout << "  [failing: " << failing << "]";
    std::cout << "\n";
  }
  std::cout << (kCriteria.size() - failed) << "/" << kCriteria.size() << " criteria pass\n";

  for (const auto& c : kCriteria) {
    for (const auto& id : c.checks) {
      const auto& r = results.at(id);
      if (r.status == Status::pass) continue;
      std::cout << "\n" << id << " (" << to_string(r.status) << "):\n";
      if (r.details.contains("error")) std::cout << "  error: " << r.details["error"] << "\n";
      if (r.details.contains("failures")) {
        for (const auto& f : r.details["failures"]) std::cout << "  " << f.dump() << "\n";
      }
    }
  }
  return failed == 0 ? 0 : 1;
}
