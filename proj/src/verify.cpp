#include "binmat/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "verify_checks.hpp"

namespace binmat::verify {

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::error:
      return "error";
  }
  return "error";
}

json Context::fixture(const std::string& relative) const {
  const auto path = fixtures / relative;
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return json::parse(in, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void Recorder::fail(json what) {
  ok_ = false;
  details_["failures"].push_back(std::move(what));
}

const std::vector<CheckInfo>& registry() {
  static const std::vector<CheckInfo> checks = [] {
    std::vector<CheckInfo> all;
    register_table_checks(all);
    register_claim_checks(all);
    return all;
  }();
  return checks;
}

CheckResult run_check(const Context& ctx, std::string_view id) {
  const auto& checks = registry();
  const auto it = std::find_if(checks.begin(), checks.end(),
                               [&](const CheckInfo& c) { return c.id == id; });
  if (it == checks.end()) throw std::out_of_range("unknown check '" + std::string(id) + "'");

  CheckResult result;
  result.id = it->id;
  const auto start = std::chrono::steady_clock::now();
  Recorder rec;
  try {
    it->run(ctx, rec);
    result.status = rec.ok() ? Status::pass : Status::fail;
    result.details = std::move(rec.details());
  } catch (const std::exception& e) {
    result.status = Status::error;
    result.details = rec.details();
    result.details["error"] = e.what();
  }
  result.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<CheckResult> run_all(const Context& ctx, std::size_t jobs) {
  const auto& checks = registry();
  std::vector<CheckResult> results(checks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      results[i] = run_check(ctx, checks[i].id);
    }
  };
  jobs = std::clamp<std::size_t>(jobs, 1, checks.size());
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

json report_json(const std::vector<CheckResult>& results, bool include_runtime) {
  json checks = json::array();
  std::size_t passed = 0;
  for (const auto& r : results) {
    json item{{"id", r.id}, {"status", to_string(r.status)}, {"details", r.details}};
    if (include_runtime) item["runtime_seconds"] = r.runtime_seconds;
    checks.push_back(std::move(item));
    if (r.status == Status::pass) ++passed;
  }
  return json{{"schema", 1},
              {"summary", {{"total", results.size()}, {"passed", passed},
                           {"failed", results.size() - passed}}},
              {"checks", std::move(checks)}};
}

std::string report_text(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  std::size_t passed = 0;
  for (const auto& r : results) {
    out << (r.status == Status::pass ? "PASS " : r.status == Status::fail ? "FAIL " : "ERROR")
        << "  " << r.id;
    out.precision(2);
    out << std::fixed << "  (" << r.runtime_seconds << " s)\n";
    if (r.status == Status::pass) {
      ++passed;
      continue;
    }
    if (r.details.contains("error")) out << "    error: " << r.details["error"].get<std::string>() << "\n";
    if (r.details.contains("failures")) {
      for (const auto& f : r.details["failures"]) out << "    " << f.dump() << "\n";
    }
  }
  out << passed << "/" << results.size() << " checks passed\n";
  return out.str();
}

int exit_code(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.status == Status::pass; })
             ? 0
             : 1;
}

}  // namespace binmat::verify
