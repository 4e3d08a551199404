#include <algorithm>
#include <set>
#include <stdexcept>

#include "binmat/connect.hpp"
#include "verify_checks.hpp"

namespace binmat::verify {

namespace {

std::vector<ExtensionClass> classes_of(const std::string& kind, const BinaryMatroid& parent) {
  if (kind == "extension") return extensions(parent);
  if (kind == "coextension") return coextensions(parent);
  throw std::runtime_error("unknown table kind '" + kind + "'");
}

// Every block of a partition table, or only the block for `only`.
void partition_table(const Context& ctx, Recorder& rec, const std::string& file,
                     const std::string& only = "") {
  const json table = ctx.fixture("tables/" + file);
  const auto kind = table.at("kind").get<std::string>();
  const json& errata = table.contains("errata") ? table["errata"] : json::array();
  json blocks = json::array();
  bool found = false;
  for (const auto& block : table.at("blocks")) {
    const auto parent = block.at("parent").get<std::string>();
    if (!only.empty() && parent != only) continue;
    found = true;
    const auto computed = classes_of(kind, ctx.cat().matroid(parent));
    blocks.push_back(compare_partition(ctx, rec, parent, computed, apply_errata(block, errata)));
  }
  if (!found) throw std::runtime_error(file + " has no block for '" + only + "'");
  rec["blocks"] = blocks;
  rec["errata_applied"] = errata.size();
}

// Stated bijections between two representations. An erratum of the form
// {"bijection": k, "adopted": {"from", "to"}} replaces the endpoints.
void bijections(const Context& ctx, Recorder& rec, const json& table) {
  json out = json::array();
  std::size_t index = 0;
  for (const auto& b : table.at("bijections")) {
    ++index;
    auto from = b.at("from").get<std::string>();
    auto to = b.at("to").get<std::string>();
    for (const auto& e : table.value("errata", json::array())) {
      if (e.value("bijection", std::size_t{0}) != index) continue;
      from = e.at("adopted").value("from", from);
      to = e.at("adopted").value("to", to);
    }
    std::vector<Label> images;
    for (const auto& v : b.at("map")) images.push_back(std::to_string(v.get<int>()));
    const bool ok = verify_map(ctx.cat().matroid(from), ctx.cat().matroid(to), images);
    out.push_back({{"from", from}, {"to", to}, {"map", images}, {"verified", ok}});
    rec.expect(ok, {{"bijection", index}, {"problem", "map is not an isomorphism"}});
  }
  rec["bijections"] = out;
}

void table_1a(const Context& ctx, Recorder& rec) {
  partition_table(ctx, rec, "table-1a.json");
  const json table = ctx.fixture("tables/table-1a.json");
  const auto& closure = table.at("closure");
  json chains = json::array();
  for (const auto& start : closure.at("from")) {
    BinaryMatroid m = ctx.cat().matroid(start.get<std::string>());
    json steps = json::array();
    for (const auto& expected : closure.at("expected")) {
      const auto name = expected.get<std::string>();
      const auto classes = extensions(m);
      if (!rec.expect(classes.size() == 1, {{"from", start}, {"problem", "expected one extension class"},
                                             {"classes", classes.size()}})) {
        break;
      }
      m = classes.front().representative;
      steps.push_back({{"size", m.size()}, {"name", name}, {"matches", is_entry(ctx, m, name)}});
      rec.expect(is_entry(ctx, m, name), {{"from", start}, {"problem", "closure step is not " + name}});
    }
    rec.expect(extension_candidates(m, true).empty(),
               {{"from", start}, {"problem", "closure did not end at a full projective geometry"}});
    chains.push_back({{"from", start}, {"steps", steps}});
  }
  rec["closure"] = chains;
}

void table_3(const Context& ctx, Recorder& rec, const std::string& file) {
  partition_table(ctx, rec, file);
  bijections(ctx, rec, ctx.fixture("tables/" + file));
}

void table_5(const Context& ctx, Recorder& rec) {
  const json table = ctx.fixture("tables/table-5.json");
  const auto& base = ctx.cat().matroid(table.at("base").get<std::string>());
  const auto columns = table.at("columns").get<std::vector<std::string>>();
  const auto members = table.at("members");
  const json& errata = table.contains("errata") ? table["errata"] : json::array();

  // Each lettered matroid is E5 plus a subset of the seven columns; its
  // candidates are the columns it does not use yet.
  json blocks = json::array();
  for (const auto& block : table.at("blocks")) {
    const auto parent_name = block.at("parent").get<std::string>();
    const auto used = members.at(parent_name).get<std::vector<std::string>>();
    const BinaryMatroid parent = extend_all(base, used);
    rec.expect(is_entry(ctx, parent, parent_name),
               {{"parent", parent_name}, {"problem", "column subset does not give " + parent_name}});
    std::vector<Word> candidates;
    for (const auto& c : columns) {
      if (std::find(used.begin(), used.end(), c) == used.end()) candidates.push_back(parse_vector(c));
    }
    const auto computed = classify_extensions(parent, candidates, true);
    std::size_t covered = 0;
    for (const auto& c : computed) covered += c.members.size();
    rec.expect(covered == candidates.size(),
               {{"parent", parent_name}, {"problem", "some candidate column is not 3-connected"}});
    blocks.push_back(
        compare_partition(ctx, rec, parent_name, computed, apply_errata(block, errata)));
  }
  rec["blocks"] = blocks;
  rec["errata_applied"] = errata.size();

  // Prism-free growth from E5 must reach exactly the lettered chain.
  GrowthOptions options;
  options.max_rank = 5;
  options.max_size = 17;
  options.forbidden = {ctx.cat().matroid("prism")};
  const auto grown = grow_3connected(base, options);
  std::set<CanonicalForm> chain;
  for (const auto& n : table.at("chain")) chain.insert(ctx.cat().get(n.get<std::string>()).fingerprint);
  json reached = json::array();
  std::set<CanonicalForm> seen;
  bool top_is_r17 = false;
  for (const auto& c : grown.chains) {
    const auto& m = c.steps.back();
    const auto form = canonical_form(m);
    seen.insert(form);
    const auto name = ctx.cat().identify(m, table.at("chain").get<std::vector<std::string>>());
    reached.push_back({{"size", m.size()}, {"rank", m.rank()}, {"fingerprint", form.hex()},
                       {"name", name ? json(*name) : json(nullptr)}});
    rec.expect(name.has_value(), {{"problem", "growth reached a matroid outside the chain"},
                                  {"fingerprint", form.hex()}, {"size", m.size()}});
    rec.expect(has_splitter_shape(c), {{"problem", "chain without splitter shape"},
                                       {"fingerprint", form.hex()}});
    if (m.size() == 17 && is_entry(ctx, m, "R17")) top_is_r17 = true;
  }
  rec.expect(seen == chain, {{"problem", "growth does not reach every lettered matroid"},
                             {"reached", seen.size()}, {"expected", chain.size()}});
  rec.expect(top_is_r17, {{"problem", "no grown 17-element matroid is isomorphic to R17"}});
  rec["growth"] = reached;
}

}  // namespace

void register_table_checks(std::vector<CheckInfo>& out) {
  out.push_back({"table-1a", "rank-4 extensions of P9 and their closure up to PG(3,2)", table_1a});
  out.push_back({"table-1b", "cosimple coextensions of P9",
                 [](const Context& c, Recorder& r) { partition_table(c, r, "table-1b.json"); }});
  out.push_back({"table-2a", "3-connected extensions of E5 with their minors",
                 [](const Context& c, Recorder& r) { partition_table(c, r, "table-2a.json"); }});
  out.push_back({"table-3a", "extensions of M(K5\\e) and the stated bijections",
                 [](const Context& c, Recorder& r) { table_3(c, r, "table-3a.json"); }});
  out.push_back({"table-3b", "extensions of the prism and the stated bijections",
                 [](const Context& c, Recorder& r) { table_3(c, r, "table-3b.json"); }});
  out.push_back({"table-4", "coextensions of D1 and D2 with their minors",
                 [](const Context& c, Recorder& r) { partition_table(c, r, "table-4.json"); }});
  out.push_back({"table-5", "prism-free extensions of E5 up to R17", table_5});
  for (const char* p : {"A", "B", "C", "Z"}) {
    out.push_back({std::string("A1-partition-") + p, std::string("coextensions of ") + p,
                   [p](const Context& c, Recorder& r) { partition_table(c, r, "table-A1.json", p); }});
  }
  for (const char* p : {"X1", "X3"}) {
    out.push_back({std::string("A2-partition-") + p, std::string("coextensions of ") + p,
                   [p](const Context& c, Recorder& r) { partition_table(c, r, "table-A2.json", p); }});
  }
}

}  // namespace binmat::verify
