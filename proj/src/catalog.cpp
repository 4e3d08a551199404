#include "binmat/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <stdexcept>

#include "binmat/connect.hpp"
#include "binmat/enumerate.hpp"
#include "binmat/iso.hpp"
#include "json.hpp"

#ifndef BINMAT_FIXTURES_DIR
#define BINMAT_FIXTURES_DIR "fixtures"
#endif

namespace binmat {

using nlohmann::json;

std::filesystem::path default_fixtures_dir() {
  if (const char* env = std::getenv("BINMAT_FIXTURES"); env != nullptr && *env != '\0') {
    return env;
  }
  return BINMAT_FIXTURES_DIR;
}

BinaryMatroid build_Z(std::size_t r) {
  if (r < 4) throw std::invalid_argument("Z_r needs r >= 4");
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < r; ++i) {
    std::string row(r + 1, '1');
    row[i] = '0';
    rows.push_back(row);
  }
  std::vector<Label> labels = numbered_labels(r);
  for (std::size_t i = 1; i <= r; ++i) labels.push_back("b" + std::to_string(i));
  labels.push_back("c" + std::to_string(r));
  return from_standard_form(BitMatrix::from_strings(rows), labels);
}

BinaryMatroid build_family(Family kind, std::size_t param, std::size_t extra) {
  switch (kind) {
    case Family::wheel: {
      if (param < 3) throw std::invalid_argument("wheels need at least 3 spokes");
      const int r = static_cast<int>(param);
      std::vector<Edge> edges;
      for (int i = 1; i <= r; ++i) edges.emplace_back(0, i);
      for (int i = 1; i <= r; ++i) edges.emplace_back(i, i % r + 1);
      return from_graph(edges);
    }
    case Family::k3p: {
      if (param < 3) throw std::invalid_argument("K_{3,p} needs p >= 3");
      if (extra > 3) throw std::invalid_argument("at most three extra edges");
      const int p = static_cast<int>(param);
      std::vector<Edge> edges;
      for (int a = 0; a < 3; ++a) {
        for (int b = 0; b < p; ++b) edges.emplace_back(a, 3 + b);
      }
      const Edge inside[] = {{0, 1}, {1, 2}, {0, 2}};
      for (std::size_t i = 0; i < extra; ++i) edges.push_back(inside[i]);
      return from_graph(edges);
    }
    case Family::pg32_minus: {
      if (param > 2) throw std::invalid_argument("only up to two points may be removed");
      std::vector<Word> columns;
      for (Word v = 1; v < 16 - param; ++v) columns.push_back(v);
      return BinaryMatroid(BitMatrix::from_columns(columns, 4), numbered_labels(columns.size()));
    }
  }
  throw std::invalid_argument("unknown family");
}

std::vector<std::string> expected_mismatches(const CatalogEntry& entry) {
  const auto& m = entry.matroid;
  const auto& e = entry.expected;
  std::vector<std::string> out;
  if (m.rank() != e.rank) out.push_back("rank");
  if (m.size() != e.size) out.push_back("size");
  if (e.simple && is_simple(m) != *e.simple) out.push_back("simple");
  if (e.three_connected && is_3_connected(m) != *e.three_connected) {
    out.push_back("three_connected");
  }
  if (e.self_dual && is_isomorphic(m, dual(m)).has_value() != *e.self_dual) {
    out.push_back("self_dual");
  }
  if (e.internally_4_connected &&
      is_internally_4_connected(m) != *e.internally_4_connected) {
    out.push_back("internally_4_connected");
  }
  return out;
}

namespace {

Family family_kind(const std::string& name) {
  if (name == "wheel") return Family::wheel;
  if (name == "k3p") return Family::k3p;
  if (name == "pg32_minus") return Family::pg32_minus;
  throw std::runtime_error("unknown family '" + name + "'");
}

ExpectedFacts parse_expected(const json& j) {
  ExpectedFacts e;
  e.rank = j.at("rank").get<std::size_t>();
  e.size = j.at("size").get<std::size_t>();
  auto flag = [&](const char* key, std::optional<bool>& out) {
    if (j.contains(key)) out = j.at(key).get<bool>();
  };
  flag("simple", e.simple);
  flag("three_connected", e.three_connected);
  flag("self_dual", e.self_dual);
  flag("internally_4_connected", e.internally_4_connected);
  return e;
}

}  // namespace

Catalog Catalog::load(const std::filesystem::path& dir) {
  const auto index = dir / "catalog.json";
  std::ifstream in(index);
  if (!in) throw std::runtime_error("cannot open " + index.string());
  json doc;
  try {
    doc = json::parse(in, nullptr, true, true);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(index.string() + ": " + e.what());
  }

  Catalog cat;
  cat.dir_ = dir;
  for (const auto& item : doc.at("entries")) {
    const auto name = item.at("name").get<std::string>();
    try {
      auto base = [&](const char* key) -> const BinaryMatroid& {
        return cat.matroid(item.at(key).get<std::string>());
      };
      BinaryMatroid m;
      if (item.contains("file")) {
        m = load_matroid((dir / item.at("file").get<std::string>()).string());
      } else if (item.contains("extend")) {
        m = base("extend");
        for (const auto& c : item.at("columns")) {
          m = extend(m, parse_vector(c.get<std::string>()), fresh_label(m));
        }
      } else if (item.contains("coextend")) {
        const auto& parent = base("coextend");
        m = renumbered(
            coextend(parent, parse_vector(item.at("row").get<std::string>()), fresh_label(parent)));
      } else if (item.contains("dual")) {
        m = dual(base("dual"));
      } else if (item.contains("delete")) {
        const auto& parent = base("delete");
        m = deletion(parent, parent.set_of(item.at("labels").get<std::vector<Label>>()));
      } else if (item.contains("graph")) {
        m = from_graph(item.at("graph").get<std::vector<Edge>>());
      } else if (item.contains("vectors")) {
        std::vector<Word> columns;
        std::size_t width = 0;
        for (const auto& v : item.at("vectors")) {
          const auto s = v.get<std::string>();
          width = s.size();
          columns.push_back(parse_vector(s));
        }
        m = BinaryMatroid(BitMatrix::from_columns(columns, width),
                          numbered_labels(columns.size()));
      } else if (item.contains("family")) {
        const auto kind = item.at("family").get<std::string>();
        const auto param = item.at("param").get<std::size_t>();
        m = kind == "Z" ? build_Z(param)
                        : build_family(family_kind(kind), param, item.value("extra", 0));
      } else {
        throw std::runtime_error("no recipe");
      }
      CatalogEntry entry{name, std::move(m), item.value("provenance", ""),
                         parse_expected(item.at("expected")), {}};
      if (entry.matroid.size() <= kMaxCanonicalSize) {
        entry.fingerprint = canonical_form(entry.matroid);
      }
      if (!cat.entries_.emplace(name, std::move(entry)).second) {
        throw std::runtime_error("duplicate name");
      }
      cat.order_.push_back(name);
    } catch (const std::exception& e) {
      throw std::runtime_error("catalog entry '" + name + "': " + e.what());
    }
  }
  return cat;
}

const CatalogEntry& Catalog::get(std::string_view name) const {
  const auto it = entries_.find(name);
  if (it == entries_.end()) throw std::out_of_range("unknown catalog entry '" + std::string(name) + "'");
  return it->second;
}

bool Catalog::contains(std::string_view name) const { return entries_.find(name) != entries_.end(); }

std::optional<std::string> Catalog::identify(const BinaryMatroid& m) const {
  return identify(m, order_);
}

std::optional<std::string> Catalog::identify(const BinaryMatroid& m,
                                             const std::vector<std::string>& among) const {
  if (m.size() > kMaxCanonicalSize) return std::nullopt;
  const auto form = canonical_form(m);
  for (const auto& name : among) {
    if (get(name).fingerprint == form) return name;
  }
  return std::nullopt;
}

}  // namespace binmat
