#include "binmat/connect.hpp"

#include <set>
#include <stdexcept>

namespace binmat {

std::size_t connectivity(const BinaryMatroid& m, ElementSet x) {
  return rank_of(m, x) + rank_of(m, m.ground() - x) - m.rank();
}

bool is_k_separation(const BinaryMatroid& m, ElementSet x, std::size_t k) {
  return classify_separation(m, x, k).has_value();
}

std::optional<Separation> classify_separation(const BinaryMatroid& m, ElementSet x,
                                              std::size_t k) {
  if (k == 0) throw std::invalid_argument("separation order must be at least 1");
  const ElementSet y = m.ground() - x;
  if (x.size() < k || y.size() < k) return std::nullopt;
  const std::size_t lambda = connectivity(m, x);
  if (lambda > k - 1) return std::nullopt;
  Separation s;
  s.side_a = x;
  s.order = k;
  s.exact = lambda == k - 1;
  s.minimal = s.exact && (x.size() == k || y.size() == k);
  return s;
}

namespace {

// Calls fn(x) for each subset x of the ground set that omits the last
// element, so that each unordered partition is visited once. Stops early
// when fn returns true and reports whether it did.
template <typename Fn>
bool scan_partitions(const BinaryMatroid& m, Fn&& fn) {
  const std::size_t n = m.size();
  if (n == 0) return false;
  const Word limit = Word{1} << (n - 1);
  for (Word bits = 0; bits < limit; ++bits) {
    if (fn(ElementSet(bits))) return true;
  }
  return false;
}

}  // namespace

std::vector<Separation> separations(const BinaryMatroid& m, std::size_t k) {
  std::vector<Separation> out;
  scan_partitions(m, [&](ElementSet x) {
    if (auto s = classify_separation(m, x, k)) out.push_back(*s);
    return false;
  });
  return out;
}

bool is_3_connected(const BinaryMatroid& m) {
  if (m.size() <= 3) return is_simple(m) && is_cosimple(m);
  const std::size_t n = m.size();
  const bool separated = scan_partitions(m, [&](ElementSet x) {
    const std::size_t a = x.size();
    const std::size_t b = n - a;
    if (a == 0 || b == 0) return false;
    const std::size_t lambda = connectivity(m, x);
    if (lambda == 0) return true;
    return lambda <= 1 && a >= 2 && b >= 2;
  });
  return !separated;
}

std::optional<Separation> find_nonminimal_3_separation(const BinaryMatroid& m) {
  std::optional<Separation> found;
  scan_partitions(m, [&](ElementSet x) {
    if (x.size() < 4 || m.size() - x.size() < 4) return false;
    if (connectivity(m, x) == 2) {
      found = Separation{x, 3, true, false};
      return true;
    }
    return false;
  });
  return found;
}

bool is_internally_4_connected(const BinaryMatroid& m) {
  if (!is_3_connected(m)) return false;
  const std::size_t n = m.size();
  const bool separated = scan_partitions(m, [&](ElementSet x) {
    if (x.size() < 4 || n - x.size() < 4) return false;
    return connectivity(m, x) < 3;
  });
  return !separated;
}

bool induces_separation(const BinaryMatroid& host, const std::vector<Label>& a,
                        const std::vector<Label>& b, const LabelMap& embedding) {
  std::set<Label> images;
  for (const auto& [from, to] : embedding) {
    if (!images.insert(to).second) throw std::invalid_argument("embedding is not injective");
  }
  auto image_of = [&](const std::vector<Label>& side) {
    ElementSet s;
    for (const auto& l : side) {
      const auto it = embedding.find(l);
      if (it == embedding.end()) throw std::invalid_argument("embedding misses label " + l);
      try {
        s = s.with(host.index_of(it->second));
      } catch (const std::out_of_range&) {
        throw std::invalid_argument("embedding targets unknown label " + it->second);
      }
    }
    return s;
  };
  const ElementSet x0 = image_of(a);
  const ElementSet y0 = image_of(b);
  if (!(x0 & y0).empty()) throw std::invalid_argument("separation sides overlap");
  const auto free = (host.ground() - x0 - y0).indices();
  const Word combos = Word{1} << free.size();
  for (Word pick = 0; pick < combos; ++pick) {
    ElementSet x = x0;
    for (std::size_t i = 0; i < free.size(); ++i) {
      if (((pick >> i) & 1U) != 0) x = x.with(free[i]);
    }
    if (is_k_separation(host, x, 3)) return true;
  }
  return false;
}

}  // namespace binmat
