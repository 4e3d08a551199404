#include <algorithm>
#include <map>
#include <stdexcept>

#include "verify_checks.hpp"

namespace binmat::verify {

BinaryMatroid extend_all(BinaryMatroid m, const std::vector<std::string>& columns) {
  for (const auto& c : columns) m = extend(m, parse_vector(c), fresh_label(m));
  return m;
}

BinaryMatroid coextend_renumbered(const BinaryMatroid& m, const std::string& row) {
  if (row.size() != m.size() - m.rank()) {
    throw std::runtime_error("row '" + row + "' does not match the corank of the parent");
  }
  return renumbered(coextend(m, parse_vector(row), fresh_label(m)));
}

bool is_entry(const Context& ctx, const BinaryMatroid& m, const std::string& name) {
  const auto& entry = ctx.cat().get(name);
  if (m.size() != entry.matroid.size() || m.rank() != entry.matroid.rank()) return false;
  if (m.size() <= kMaxCanonicalSize) return canonical_form(m) == entry.fingerprint;
  return is_isomorphic(m, entry.matroid).has_value();
}

json minor_json(const BinaryMatroid& m, const BinaryMatroid& target) {
  const auto w = has_minor(m, target);
  if (!w) return nullptr;
  if (!verify_witness(m, target, *w)) throw std::logic_error("minor witness failed to verify");
  return json{{"contract", m.labels_of(w->contract_set)}, {"delete", m.labels_of(w->delete_set)}};
}

std::optional<Label> contraction_witness(const BinaryMatroid& m, const BinaryMatroid& target) {
  if (m.size() != target.size() + 1) return std::nullopt;
  const auto form = canonical_form(target);
  for (std::size_t e = 0; e < m.size(); ++e) {
    const auto c = contraction(m, ElementSet::single(e));
    if (c.rank() == target.rank() && canonical_form(c) == form) return m.label(e);
  }
  return std::nullopt;
}

std::vector<ListedClass> apply_errata(const json& block, const json& errata) {
  std::vector<ListedClass> out;
  std::size_t index = 0;
  for (const auto& c : block.at("classes")) {
    ListedClass lc;
    lc.index = ++index;
    if (c.contains("name") && !c["name"].is_null()) lc.name = c["name"].get<std::string>();
    for (const auto& row : c.at("listed")) {
      if (!lc.members.insert(row.get<std::string>()).second) lc.duplicates.insert(row.get<std::string>());
    }
    lc.source = c;
    out.push_back(std::move(lc));
  }
  const auto parent = block.at("parent").get<std::string>();
  for (const auto& e : errata) {
    if (e.value("parent", "") != parent || !e.contains("class")) continue;
    const auto k = e.at("class").get<std::size_t>();
    if (k == 0 || k > out.size()) throw std::runtime_error("erratum names a missing class");
    auto& target = out[k - 1];
    const auto field = e.value("field", "");
    if (field == "name") {
      target.name = e.at("adopted").get<std::string>();
      continue;
    }
    if (field == "minors" || field == "contraction_minors" || field == "deletion_minors") {
      auto& list = target.source[field];
      if (!e.at("listed").is_null()) {
        const auto it = std::find(list.begin(), list.end(), e["listed"]);
        if (it == list.end()) throw std::runtime_error("erratum minor is not listed");
        list.erase(it);
      }
      if (!e.at("adopted").is_null()) list.push_back(e["adopted"]);
      continue;
    }
    if (!e.at("listed").is_null()) {
      const auto row = e["listed"].get<std::string>();
      const auto& printed = target.source.at("listed");
      const auto copies = std::count(printed.begin(), printed.end(), row);
      // A duplicated row keeps one copy; otherwise the row leaves the class.
      if (copies == 0) throw std::runtime_error("erratum row '" + row + "' is not listed");
      if (copies == 1) target.members.erase(row);
      target.duplicates.erase(row);
    }
    if (!e.at("adopted").is_null()) target.members.insert(e["adopted"].get<std::string>());
  }
  return out;
}

json compare_partition(const Context& ctx, Recorder& rec, const std::string& parent_name,
                       const std::vector<ExtensionClass>& computed,
                       const std::vector<ListedClass>& listed) {
  std::map<std::set<std::string>, std::size_t> by_members;
  for (std::size_t i = 0; i < computed.size(); ++i) {
    const auto strings = computed[i].member_strings();
    by_members.emplace(std::set<std::string>(strings.begin(), strings.end()), i);
  }

  json classes = json::array();
  std::vector<bool> matched(computed.size(), false);
  for (const auto& lc : listed) {
    json item{{"class", lc.index}, {"members", lc.members}};
    if (!lc.duplicates.empty()) {
      rec.fail({{"parent", parent_name}, {"class", lc.index},
                {"problem", "rows listed twice"}, {"rows", lc.duplicates}});
    }
    const auto it = by_members.find(lc.members);
    if (it == by_members.end()) {
      // Report the computed class sharing the most rows for a readable diff.
      std::size_t best = 0;
      std::size_t best_overlap = 0;
      for (std::size_t i = 0; i < computed.size(); ++i) {
        std::size_t overlap = 0;
        for (const auto& s : computed[i].member_strings()) overlap += lc.members.count(s);
        if (overlap > best_overlap) best = i, best_overlap = overlap;
      }
      json diff{{"parent", parent_name}, {"class", lc.index}, {"problem", "no computed class has these rows"}};
      if (!computed.empty()) {
        const auto strings = computed[best].member_strings();
        const std::set<std::string> have(strings.begin(), strings.end());
        std::vector<std::string> listed_only, computed_only;
        std::set_difference(lc.members.begin(), lc.members.end(), have.begin(), have.end(),
                            std::back_inserter(listed_only));
        std::set_difference(have.begin(), have.end(), lc.members.begin(), lc.members.end(),
                            std::back_inserter(computed_only));
        diff["listed_only"] = listed_only;
        diff["computed_only"] = computed_only;
      }
      rec.fail(diff);
      item["matched"] = false;
      classes.push_back(item);
      continue;
    }
    const auto& cls = computed[it->second];
    matched[it->second] = true;
    item["matched"] = true;
    item["fingerprint"] = cls.fingerprint.hex();
    const auto& rep = cls.representative;

    if (lc.name) {
      const bool same = is_entry(ctx, rep, *lc.name);
      item["name"] = *lc.name;
      rec.expect(same, {{"parent", parent_name}, {"class", lc.index},
                        {"problem", "representative is not isomorphic to " + *lc.name}});
    }
    const auto& src = lc.source;
    if (src.contains("minors")) {
      for (const auto& t : src["minors"]) {
        const auto name = t.get<std::string>();
        const auto w = minor_json(rep, ctx.cat().matroid(name));
        item["minors"][name] = w;
        rec.expect(!w.is_null(), {{"parent", parent_name}, {"class", lc.index},
                                  {"problem", "no " + name + " minor"}});
      }
    }
    if (src.contains("contraction_minors")) {
      for (const auto& t : src["contraction_minors"]) {
        const auto name = t.get<std::string>();
        const auto e = contraction_witness(rep, ctx.cat().matroid(name));
        item["contraction_minors"][name] = e ? json(*e) : json(nullptr);
        rec.expect(e.has_value(), {{"parent", parent_name}, {"class", lc.index},
                                   {"problem", "no single contraction isomorphic to " + name}});
      }
    }
    if (src.contains("deletion_minors")) {
      for (const auto& t : src["deletion_minors"]) {
        const auto name = t.get<std::string>();
        const auto& target = ctx.cat().matroid(name);
        const auto w = target.rank() == rep.rank() ? minor_json(rep, target) : json(nullptr);
        item["deletion_minors"][name] = w;
        rec.expect(!w.is_null(), {{"parent", parent_name}, {"class", lc.index},
                                  {"problem", "no restriction isomorphic to " + name}});
      }
    }
    classes.push_back(item);
  }
  for (std::size_t i = 0; i < computed.size(); ++i) {
    if (matched[i]) continue;
    rec.fail({{"parent", parent_name},
              {"problem", "computed class missing from the listing"},
              {"members", computed[i].member_strings()}});
  }
  return json{{"parent", parent_name},
              {"computed_classes", computed.size()},
              {"listed_classes", listed.size()},
              {"classes", classes}};
}

}  // namespace binmat::verify
