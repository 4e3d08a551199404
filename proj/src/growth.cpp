#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

#include "binmat/connect.hpp"
#include "binmat/enumerate.hpp"

namespace binmat {

namespace {

struct State {
  BinaryMatroid matroid;
  std::size_t parent = 0;  // index into the state list; the seed points at itself
  GrowthKind kind = GrowthKind::extension;
  // Extensions since the last coextension, capped at 3.
  std::size_t run = 0;
  // Labels added by the most recent extensions of the current run (at most two).
  std::vector<Label> recent;
};

// The triad rule depends on which elements were added last, so states in
// the middle of a run are keyed with those elements marked. Marking adds one
// parallel copy to the newest element and two to the one before it.
std::vector<std::uint8_t> state_key(const State& s) {
  std::vector<std::uint8_t> key{static_cast<std::uint8_t>(s.run)};
  BinaryMatroid marked = s.matroid;
  std::size_t copies = 1;
  for (auto it = s.recent.rbegin(); it != s.recent.rend(); ++it, ++copies) {
    const Word column = marked.column(marked.index_of(*it));
    for (std::size_t c = 0; c < copies; ++c) {
      marked = extend(marked, column, *it + "'" + std::to_string(c) + "'" + std::to_string(copies));
    }
  }
  if (marked.size() > kMaxCanonicalSize) {
    // Too large to mark; fall back to the plain form plus the mark labels.
    marked = s.matroid;
    for (const auto& l : s.recent) {
      key.insert(key.end(), l.begin(), l.end());
      key.push_back(0);
    }
  }
  const auto form = canonical_form(marked);
  key.insert(key.end(), form.bytes.begin(), form.bytes.end());
  return key;
}

bool has_forbidden_minor(const BinaryMatroid& m, const std::vector<BinaryMatroid>& forbidden) {
  return std::any_of(forbidden.begin(), forbidden.end(),
                     [&](const BinaryMatroid& f) { return has_minor(m, f).has_value(); });
}

}  // namespace

GrowthResult grow_3connected(const BinaryMatroid& seed, const GrowthOptions& options) {
  if (!is_3_connected(seed)) throw std::invalid_argument("seed is not 3-connected");

  std::vector<State> states;
  std::set<std::vector<std::uint8_t>> seen;
  std::deque<std::size_t> queue;
  auto admit = [&](State s) {
    if (!seen.insert(state_key(s)).second) return;
    if (states.size() >= options.max_states) {
      throw std::length_error("grow_3connected exceeded max_states");
    }
    states.push_back(std::move(s));
    queue.push_back(states.size() - 1);
  };
  admit(State{seed, 0, GrowthKind::extension, 0, {}});

  while (!queue.empty()) {
    const std::size_t index = queue.front();
    queue.pop_front();
    const State current = states[index];
    const BinaryMatroid& m = current.matroid;
    if (m.size() >= options.max_size) continue;
    const Label label = fresh_label(m);

    if (m.rank() > 0) {
      // The run's marked elements only matter while a coextension can still
      // follow; otherwise one member per class stands for all of them.
      const bool marks_matter = m.rank() < options.max_rank && current.run < 2;
      for (const auto& cls : extensions(m)) {
        const std::size_t count = marks_matter ? cls.members.size() : 1;
        for (std::size_t i = 0; i < count; ++i) {
          BinaryMatroid child = i == 0 ? cls.representative : extend(m, cls.members[i], label);
          if (has_forbidden_minor(child, options.forbidden)) break;
          State next{std::move(child), index, GrowthKind::extension, 3, {}};
          if (marks_matter) {
            next.run = current.run + 1;
            next.recent = current.recent;
            next.recent.push_back(label);
          }
          admit(std::move(next));
        }
      }
    }

    if (m.rank() < options.max_rank && current.run <= 2) {
      for (const auto& cls : coextensions(m)) {
        for (Word row : cls.members) {
          BinaryMatroid child = coextend(m, row, label);
          if (current.run == 2) {
            auto triad = child.set_of(current.recent).with(child.index_of(label));
            if (!is_cocircuit(child, triad)) continue;
          }
          if (has_forbidden_minor(child, options.forbidden)) continue;
          admit(State{std::move(child), index, GrowthKind::coextension, 0, {}});
          // Only the triad rule tells members of one class apart.
          if (current.run < 2) break;
        }
      }
    }
  }

  // One chain per distinct matroid, reached through its first discovery.
  std::map<CanonicalForm, std::size_t> first;
  for (std::size_t i = 0; i < states.size(); ++i) {
    first.emplace(canonical_form(states[i].matroid), i);
  }
  std::vector<std::pair<CanonicalForm, std::size_t>> order(first.begin(), first.end());
  std::sort(order.begin(), order.end(), [&](const auto& a, const auto& b) {
    const auto& ma = states[a.second].matroid;
    const auto& mb = states[b.second].matroid;
    if ((a.second == 0) != (b.second == 0)) return a.second == 0;
    if (ma.size() != mb.size()) return ma.size() < mb.size();
    if (ma.rank() != mb.rank()) return ma.rank() < mb.rank();
    return a.first < b.first;
  });

  GrowthResult result;
  for (const auto& [form, index] : order) {
    SplitterChain chain;
    std::size_t i = index;
    while (true) {
      chain.steps.push_back(states[i].matroid);
      if (i == 0) break;
      chain.kinds.push_back(states[i].kind);
      i = states[i].parent;
    }
    std::reverse(chain.steps.begin(), chain.steps.end());
    std::reverse(chain.kinds.begin(), chain.kinds.end());
    result.chains.push_back(std::move(chain));
  }
  return result;
}

bool has_splitter_shape(const SplitterChain& chain) {
  if (chain.steps.empty()) return false;
  if (chain.kinds.size() + 1 != chain.steps.size()) return false;
  for (const auto& step : chain.steps) {
    if (!is_3_connected(step)) return false;
  }
  std::size_t run = 0;
  for (std::size_t i = 0; i < chain.kinds.size(); ++i) {
    const auto& before = chain.steps[i];
    const auto& after = chain.steps[i + 1];
    if (after.size() != before.size() + 1) return false;
    if (chain.kinds[i] == GrowthKind::extension) {
      if (after.rank() != before.rank()) return false;
      ++run;
      continue;
    }
    if (after.rank() != before.rank() + 1) return false;
    if (run > 2) return false;
    if (run == 2) {
      // The three elements new to this group form a triad.
      std::vector<Label> fresh;
      for (const auto& l : after.labels()) {
        const auto& old = chain.steps[i - 2].labels();
        if (std::find(old.begin(), old.end(), l) == old.end()) fresh.push_back(l);
      }
      if (fresh.size() != 3 || !is_cocircuit(after, after.set_of(fresh))) return false;
    }
    run = 0;
  }
  return true;
}

}  // namespace binmat
