#include "binmat/enumerate.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "binmat/connect.hpp"

namespace binmat {

std::vector<std::string> ExtensionClass::member_strings() const {
  std::vector<std::string> out;
  out.reserve(members.size());
  for (Word w : members) out.push_back(format_vector(w, width));
  return out;
}

Label fresh_label(const BinaryMatroid& m) {
  long long top = 0;
  bool numeric = true;
  for (const auto& l : m.labels()) {
    long long v = 0;
    const auto [ptr, ec] = std::from_chars(l.data(), l.data() + l.size(), v);
    if (ec != std::errc() || ptr != l.data() + l.size()) {
      numeric = false;
      break;
    }
    top = std::max(top, v);
  }
  if (numeric) return std::to_string(top + 1);
  for (std::size_t k = m.size() + 1;; ++k) {
    Label l = "e" + std::to_string(k);
    if (std::find(m.labels().begin(), m.labels().end(), l) == m.labels().end()) return l;
  }
}

std::vector<Word> extension_candidates(const BinaryMatroid& m, bool require_simple) {
  const std::size_t r = m.rank();
  if (r == 0) throw std::invalid_argument("rank-0 matroids have no extension columns");
  if (r > 24) throw std::invalid_argument("extension enumeration supports rank <= 24");
  std::unordered_set<Word> present(m.columns().begin(), m.columns().end());
  std::vector<Word> out;
  for (Word v = require_simple ? 1 : 0; v < (Word{1} << r); ++v) {
    if (require_simple && present.contains(v)) continue;
    out.push_back(v);
  }
  return out;
}

std::vector<Word> coextension_candidates(const BinaryMatroid& m, bool require_cosimple) {
  const std::size_t k = m.size() - m.rank();
  if (k > 24) throw std::invalid_argument("coextension enumeration supports corank <= 24");
  const BitMatrix d = m.d_block();
  std::unordered_set<Word> rows(d.row_words().begin(), d.row_words().end());
  std::vector<Word> out;
  for (Word v = require_cosimple ? 1 : 0; v < (Word{1} << k); ++v) {
    // A unit row puts the new element in series with an old one; a row of
    // D makes it parallel to a basis element in the dual.
    if (require_cosimple && (std::has_single_bit(v) || rows.contains(v))) continue;
    out.push_back(v);
  }
  return out;
}

namespace {

template <typename Build>
std::vector<ExtensionClass> classify(std::span<const Word> candidates, std::size_t width,
                                     bool require_3_connected, Build&& build) {
  std::map<CanonicalForm, std::vector<Word>> groups;
  for (Word v : candidates) {
    const BinaryMatroid grown = build(v);
    if (require_3_connected && !is_3_connected(grown)) continue;
    groups[canonical_form(grown)].push_back(v);
  }
  std::vector<ExtensionClass> out;
  for (auto& [form, members] : groups) {
    std::sort(members.begin(), members.end(), [&](Word a, Word b) {
      return format_vector(a, width) < format_vector(b, width);
    });
    ExtensionClass cls;
    cls.representative = build(members.front());
    cls.members = std::move(members);
    cls.width = width;
    cls.fingerprint = form;
    out.push_back(std::move(cls));
  }
  std::sort(out.begin(), out.end(), [&](const ExtensionClass& a, const ExtensionClass& b) {
    return format_vector(a.members.front(), width) < format_vector(b.members.front(), width);
  });
  return out;
}

}  // namespace

std::vector<ExtensionClass> classify_extensions(const BinaryMatroid& m,
                                                std::span<const Word> candidates,
                                                bool require_3_connected) {
  const Label label = fresh_label(m);
  return classify(candidates, m.rank(), require_3_connected,
                  [&](Word v) { return extend(m, v, label); });
}

std::vector<ExtensionClass> classify_coextensions(const BinaryMatroid& m,
                                                  std::span<const Word> candidates,
                                                  bool require_3_connected) {
  const Label label = fresh_label(m);
  return classify(candidates, m.size() - m.rank(), require_3_connected,
                  [&](Word v) { return coextend(m, v, label); });
}

std::vector<ExtensionClass> extensions(const BinaryMatroid& m, const ExtensionOptions& options) {
  const auto candidates = extension_candidates(m, options.require_simple);
  return classify_extensions(m, candidates, options.require_3_connected);
}

std::vector<ExtensionClass> coextensions(const BinaryMatroid& m,
                                         const CoextensionOptions& options) {
  const auto candidates = coextension_candidates(m, options.require_cosimple);
  return classify_coextensions(m, candidates, options.require_3_connected);
}

DecomposerReport decomposer_criterion(const BinaryMatroid& n, ElementSet a,
                                      const ClassFilter& include) {
  DecomposerReport report;
  auto fail = [&](std::string why) { report.precondition_failures.push_back(std::move(why)); };
  if (!a.subset_of(n.ground())) {
    fail("set is not inside the ground set");
    return report;
  }
  if (n.size() < 8) fail("fewer than 8 elements");
  if (a.size() != 4) fail("set does not have 4 elements");
  if (!is_3_connected(n)) fail("matroid is not 3-connected");
  if (!is_circuit(n, a)) fail("set is not a circuit");
  if (!is_cocircuit(n, a)) fail("set is not a cocircuit");
  const auto sep = classify_separation(n, a, 3);
  if (!sep || !sep->exact || sep->minimal) fail("not a non-minimal exact 3-separation");
  if (!report.precondition_ok()) return report;

  const auto labels = n.labels_of(a);
  auto examine = [&](GrowthKind kind, const std::vector<ExtensionClass>& classes) {
    for (const auto& cls : classes) {
      DecomposerClass entry;
      entry.kind = kind;
      entry.cls = cls;
      entry.included = !include || include(cls.representative);
      const auto& rep = cls.representative;
      const ElementSet rep_a = rep.set_of(labels);
      entry.preserved_in_representative = is_circuit(rep, rep_a) && is_cocircuit(rep, rep_a);
      entry.preserved_in_all_members = true;
      const Label fresh = fresh_label(n);
      for (Word v : cls.members) {
        const BinaryMatroid grown =
            kind == GrowthKind::extension ? extend(n, v, fresh) : coextend(n, v, fresh);
        const ElementSet image = grown.set_of(labels);
        DecomposerMember member;
        member.kind = kind;
        member.vector = v;
        member.width = cls.width;
        member.class_index = report.classes.size();
        member.circuit = is_circuit(grown, image);
        member.cocircuit = is_cocircuit(grown, image);
        entry.preserved_in_all_members = entry.preserved_in_all_members && member.preserved();
        report.members.push_back(member);
      }
      report.classes.push_back(std::move(entry));
    }
  };
  examine(GrowthKind::extension, extensions(n));
  examine(GrowthKind::coextension, coextensions(n));

  report.preserved = true;
  for (const auto& member : report.members) {
    if (report.classes[member.class_index].included && !member.preserved()) {
      report.preserved = false;
    }
  }
  return report;
}

TypedRows typed_coextension_rows(const BinaryMatroid& parent, std::span<const Word> base_rows) {
  TypedRows out;
  const std::size_t k = parent.size() - parent.rank();
  if (k == 0) throw std::invalid_argument("parent has no distinguished last column");
  out.width = k;
  const Word last = Word{1} << (k - 1);
  for (Word w : base_rows) {
    if ((w & ~(last - 1)) != 0) throw std::invalid_argument("base row is too wide");
    out.type_one.push_back(w);
    out.type_one.push_back(w | last);
  }
  for (std::size_t i = 0; i + 1 < k; ++i) out.type_two.push_back((Word{1} << i) | last);
  const BitMatrix d = parent.d_block();
  for (Word row : d.row_words()) out.type_three.push_back(row ^ last);
  return out;
}

}  // namespace binmat
