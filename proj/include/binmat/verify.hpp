#pragma once

#include <cstddef>
#include <filesystem>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "binmat/catalog.hpp"
#include "json.hpp"

namespace binmat::verify {

using nlohmann::json;

enum class Status { pass, fail, error };

[[nodiscard]] std::string_view to_string(Status s);

struct CheckResult {
  std::string id;
  Status status = Status::error;
  json details = json::object();
  double runtime_seconds = 0.0;
};

struct Context {
  const Catalog* catalog = nullptr;
  std::filesystem::path fixtures;

  [[nodiscard]] const Catalog& cat() const { return *catalog; }
  /// Parses a JSON file below the fixture directory. Throws std::runtime_error.
  [[nodiscard]] json fixture(const std::string& relative) const;
};

/// Collects the outcome of one check: every failed expectation is appended
/// to details["failures"].
class Recorder {
 public:
  void fail(json what);
  bool expect(bool ok, json what) {
    if (!ok) fail(std::move(what));
    return ok;
  }
  [[nodiscard]] bool ok() const { return ok_; }
  json& details() { return details_; }
  json& operator[](const char* key) { return details_[key]; }

 private:
  bool ok_ = true;
  json details_ = json::object();
};

struct CheckInfo {
  std::string id;
  std::string description;
  std::function<void(const Context&, Recorder&)> run;
};

/// All registered checks in report order.
[[nodiscard]] const std::vector<CheckInfo>& registry();

/// Throws std::out_of_range for an unknown id. Exceptions thrown by the
/// check itself become Status::error with the message in details.
[[nodiscard]] CheckResult run_check(const Context& ctx, std::string_view id);

/// Runs every check on up to `jobs` threads; results keep registry order.
[[nodiscard]] std::vector<CheckResult> run_all(const Context& ctx, std::size_t jobs);

/// Report with "schema": 1. Runtimes are omitted when include_runtime is
/// false so that reports of two runs compare byte for byte.
[[nodiscard]] json report_json(const std::vector<CheckResult>& results,
                               bool include_runtime = true);
[[nodiscard]] std::string report_text(const std::vector<CheckResult>& results);

/// 0 when every result passed, 1 otherwise.
[[nodiscard]] int exit_code(const std::vector<CheckResult>& results);

}  // namespace binmat::verify
