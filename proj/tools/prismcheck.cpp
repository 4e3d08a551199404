#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "binmat/catalog.hpp"
#include "binmat/connect.hpp"
#include "binmat/enumerate.hpp"
#include "binmat/verify.hpp"

using namespace binmat;
using verify::json;

namespace {

constexpr int kConfigError = 2;

void print_entry(const CatalogEntry& e) {
  std::cout << "name: " << e.name << "\n"
            << "provenance: " << e.provenance << "\n"
            << "rank: " << e.matroid.rank() << "  size: " << e.matroid.size() << "\n";
  auto flag = [](const char* what, const std::optional<bool>& v) {
    if (v) std::cout << "expected " << what << ": " << (*v ? "yes" : "no") << "\n";
  };
  flag("simple", e.expected.simple);
  flag("3-connected", e.expected.three_connected);
  flag("self-dual", e.expected.self_dual);
  flag("internally 4-connected", e.expected.internally_4_connected);
  if (!e.fingerprint.bytes.empty()) std::cout << "fingerprint: " << e.fingerprint.hex() << "\n";
  write_matroid(std::cout, e.matroid);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Binary matroid verification harness"};
  app.require_subcommand(1);
  std::string fixtures = default_fixtures_dir().string();
  app.add_option("--fixtures", fixtures, "fixture directory")->capture_default_str();

  auto* verify_cmd = app.add_subcommand("verify", "run checks");
  verify_cmd->require_subcommand(1);
  auto* run_cmd = verify_cmd->add_subcommand("run", "run one check");
  std::string check_id;
  run_cmd->add_option("id", check_id, "check id")->required();
  bool run_json = false;
  run_cmd->add_flag("--json-stdout", run_json, "print the JSON result");
  auto* all_cmd = verify_cmd->add_subcommand("all", "run every check");
  std::size_t jobs = 1;
  std::string json_path;
  bool no_runtime = false;
  all_cmd->add_option("--jobs,-j", jobs, "worker threads")->check(CLI::PositiveNumber);
  all_cmd->add_option("--json", json_path, "write the JSON report here");
  all_cmd->add_flag("--no-runtime", no_runtime, "leave runtimes out of the JSON report");
  verify_cmd->add_subcommand("list", "list check ids");

  auto* catalog_cmd = app.add_subcommand("catalog", "inspect the catalog");
  catalog_cmd->require_subcommand(1);
  catalog_cmd->add_subcommand("list", "list entries");
  auto* show_cmd = catalog_cmd->add_subcommand("show", "show one entry");
  std::string show_name;
  show_cmd->add_option("name", show_name)->required();

  auto* minor_cmd = app.add_subcommand("minor", "does M have an N-minor");
  std::string m_name, n_name;
  minor_cmd->add_option("M", m_name)->required();
  minor_cmd->add_option("N", n_name)->required();
  auto* iso_cmd = app.add_subcommand("iso", "are M and N isomorphic");
  iso_cmd->add_option("M", m_name)->required();
  iso_cmd->add_option("N", n_name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kConfigError;
  }

  if (verify_cmd->got_subcommand("list")) {
    for (const auto& c : verify::registry()) std::cout << c.id << "  " << c.description << "\n";
    return 0;
  }

  Catalog catalog;
  try {
    catalog = Catalog::load(fixtures);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
  const verify::Context ctx{&catalog, fixtures};

  try {
    if (run_cmd->parsed()) {
      const auto result = verify::run_check(ctx, check_id);
      if (run_json) {
        std::cout << verify::report_json({result}).dump(1) << "\n";
      } else {
        std::cout << verify::report_text({result});
      }
      if (result.status == verify::Status::error) return kConfigError;
      return verify::exit_code({result});
    }
    if (all_cmd->parsed()) {
      const auto results = verify::run_all(ctx, jobs);
      std::cout << verify::report_text(results);
      if (!json_path.empty()) {
        std::ofstream out(json_path);
        if (!out) {
          std::cerr << "error: cannot write " << json_path << "\n";
          return kConfigError;
        }
        out << verify::report_json(results, !no_runtime).dump(1) << "\n";
      }
      return verify::exit_code(results);
    }
    if (catalog_cmd->got_subcommand("list")) {
      for (const auto& n : catalog.names()) {
        const auto& e = catalog.get(n);
        std::cout << n << "  rank " << e.matroid.rank() << "  size " << e.matroid.size() << "  "
                  << e.provenance << "\n";
      }
      return 0;
    }
    if (show_cmd->parsed()) {
      print_entry(catalog.get(show_name));
      return 0;
    }
    if (minor_cmd->parsed()) {
      const auto& m = catalog.matroid(m_name);
      const auto& n = catalog.matroid(n_name);
      const auto w = has_minor(m, n);
      if (!w) {
        std::cout << m_name << " has no " << n_name << " minor\n";
        return 1;
      }
      std::cout << m_name << " / {";
      for (const auto& l : m.labels_of(w->contract_set)) std::cout << " " << l;
      std::cout << " } \\ {";
      for (const auto& l : m.labels_of(w->delete_set)) std::cout << " " << l;
      std::cout << " } is isomorphic to " << n_name << "\n";
      return 0;
    }
    if (iso_cmd->parsed()) {
      const auto& m = catalog.matroid(m_name);
      const auto& n = catalog.matroid(n_name);
      const auto iso = is_isomorphic(m, n);
      if (!iso) {
        std::cout << m_name << " and " << n_name << " are not isomorphic\n";
        return 1;
      }
      for (const auto& [a, b] : label_pairs(m, n, *iso)) std::cout << a << " -> " << b << "\n";
      return 0;
    }
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return 0;
}
