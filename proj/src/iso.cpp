#include "binmat/iso.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace binmat {

namespace {

constexpr std::size_t kTableRank = 7;

// perm_tables()[r][p * 2^r + x] is x with its bits reordered by the p-th
// permutation of {0..r-1} (in next_permutation order): bit k of the result
// is bit perm[k] of x.
const std::vector<std::vector<std::uint16_t>>& perm_tables() {
  static const auto tables = [] {
    std::vector<std::vector<std::uint16_t>> out(kTableRank + 1);
    for (std::size_t r = 0; r <= kTableRank; ++r) {
      std::vector<std::size_t> perm(r);
      std::iota(perm.begin(), perm.end(), 0);
      const std::size_t width = std::size_t{1} << r;
      do {
        for (std::size_t x = 0; x < width; ++x) {
          std::uint16_t y = 0;
          for (std::size_t k = 0; k < r; ++k) y |= ((x >> perm[k]) & 1U) << k;
          out[r].push_back(y);
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    return out;
  }();
  return tables;
}

struct CanonicalSearch {
  std::vector<std::uint16_t> best;      // sorted coordinate values
  std::vector<std::size_t> best_order;  // basis in order, then sorted non-basis
  bool found = false;
};

// Core search on column vectors of a rank-r matroid with r <= n - r.
CanonicalSearch search(std::span<const Word> cols, std::size_t r) {
  const std::size_t n = cols.size();
  CanonicalSearch result;
  const std::size_t k = n - r;

  std::vector<std::size_t> pick(r);
  std::iota(pick.begin(), pick.end(), 0);
  std::vector<Word> basis_cols(r);
  std::vector<std::size_t> rest(k);
  std::vector<Word> coords(k);
  std::vector<std::pair<std::uint16_t, std::size_t>> current(k);
  std::vector<std::size_t> perm(r);

  const bool tabled = r <= kTableRank;
  const std::uint16_t* table = tabled ? perm_tables()[r].data() : nullptr;
  const std::size_t width = std::size_t{1} << std::min(r, kTableRank);

  auto consider = [&](std::size_t perm_index) {
    for (std::size_t j = 0; j < k; ++j) {
      std::uint16_t y = 0;
      if (tabled) {
        y = table[perm_index * width + coords[j]];
      } else {
        for (std::size_t b = 0; b < r; ++b) {
          y |= static_cast<std::uint16_t>(((coords[j] >> perm[b]) & 1U) << b);
        }
      }
      current[j] = {y, rest[j]};
    }
    std::sort(current.begin(), current.end());
    bool better = !result.found;
    if (!better) {
      for (std::size_t j = 0; j < k; ++j) {
        if (current[j].first != result.best[j]) {
          better = current[j].first < result.best[j];
          break;
        }
      }
    }
    if (!better) return;
    result.found = true;
    result.best.resize(k);
    result.best_order.clear();
    for (std::size_t b = 0; b < r; ++b) result.best_order.push_back(pick[perm[b]]);
    for (std::size_t j = 0; j < k; ++j) {
      result.best[j] = current[j].first;
      result.best_order.push_back(current[j].second);
    }
  };

  while (true) {
    for (std::size_t i = 0; i < r; ++i) basis_cols[i] = cols[pick[i]];
    const auto inv = invert_columns(basis_cols);
    if (!inv.empty() || r == 0) {
      std::size_t j = 0;
      std::size_t p = 0;
      for (std::size_t e = 0; e < n; ++e) {
        if (p < r && pick[p] == e) {
          ++p;
          continue;
        }
        rest[j] = e;
        coords[j] = r == 0 ? 0 : apply_columns(inv, cols[e]);
        ++j;
      }
      std::iota(perm.begin(), perm.end(), 0);
      std::size_t perm_index = 0;
      do {
        consider(perm_index++);
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    // Next combination of r out of n.
    std::size_t i = r;
    while (i > 0 && pick[i - 1] == n - r + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t t = i; t < r; ++t) pick[t] = pick[t - 1] + 1;
  }
  return result;
}

struct Canonical {
  CanonicalForm form;
  std::vector<std::size_t> order;
};

Canonical canonicalize(const BinaryMatroid& m) {
  if (m.size() > kMaxCanonicalSize) {
    throw std::length_error("canonical_form supports at most 20 elements");
  }
  const std::size_t n = m.size();
  const bool use_dual = m.rank() > n - m.rank();
  const BinaryMatroid side = use_dual ? dual(m) : m;
  const auto s = search(side.columns(), side.rank());
  Canonical c;
  auto& bytes = c.form.bytes;
  bytes.push_back(static_cast<std::uint8_t>(m.rank()));
  bytes.push_back(static_cast<std::uint8_t>(n));
  bytes.push_back(use_dual ? 1 : 0);
  for (std::uint16_t v : s.best) {
    bytes.push_back(static_cast<std::uint8_t>(v >> 8));
    bytes.push_back(static_cast<std::uint8_t>(v & 0xFF));
  }
  c.order = s.best_order;
  return c;
}

}  // namespace

std::string CanonicalForm::hex() const {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out += kDigits[b >> 4];
    out += kDigits[b & 0xF];
  }
  return out;
}

Isomorphism Isomorphism::inverse() const {
  Isomorphism inv;
  inv.image.resize(image.size());
  for (std::size_t i = 0; i < image.size(); ++i) inv.image.at(image[i]) = i;
  return inv;
}

Isomorphism Isomorphism::then(const Isomorphism& other) const {
  Isomorphism out;
  out.image.reserve(image.size());
  for (std::size_t i : image) out.image.push_back(other.image.at(i));
  return out;
}

CanonicalForm canonical_form(const BinaryMatroid& m) { return canonicalize(m).form; }

std::optional<Isomorphism> is_isomorphic(const BinaryMatroid& m, const BinaryMatroid& n) {
  if (m.size() != n.size() || m.rank() != n.rank()) return std::nullopt;
  const Canonical a = canonicalize(m);
  const Canonical b = canonicalize(n);
  if (a.form != b.form) return std::nullopt;
  Isomorphism iso;
  iso.image.resize(m.size());
  for (std::size_t i = 0; i < a.order.size(); ++i) iso.image[a.order[i]] = b.order[i];
  return iso;
}

bool verify_map(const BinaryMatroid& m, const BinaryMatroid& n, const Isomorphism& map) {
  const std::size_t size = m.size();
  if (map.image.size() != size || n.size() != size) {
    throw std::invalid_argument("map is not a bijection between the ground sets");
  }
  std::vector<bool> hit(size, false);
  for (std::size_t t : map.image) {
    if (t >= size || hit[t]) throw std::invalid_argument("map is not a bijection");
    hit[t] = true;
  }
  if (m.rank() != n.rank()) return false;

  // Certificate: the image of m's standard basis is a basis of n and every
  // element has the same coordinates relative to the two bases.
  const auto& basis = m.standard_basis();
  std::vector<Word> image_basis;
  for (std::size_t b : basis) image_basis.push_back(n.column(map.image[b]));
  const auto inv = invert_columns(image_basis);
  if (inv.empty() && !basis.empty()) return false;
  for (std::size_t e = 0; e < size; ++e) {
    const Word theirs = basis.empty() ? 0 : apply_columns(inv, n.column(map.image[e]));
    if (theirs != m.column(e)) return false;
  }

  if (size <= 12) {
    for (Word bits = 0; bits < (Word{1} << size); ++bits) {
      ElementSet image;
      for (std::size_t i : ElementSet(bits).indices()) image = image.with(map.image[i]);
      if (rank_of(m, ElementSet(bits)) != rank_of(n, image)) return false;
    }
  }
  return true;
}

bool verify_map(const BinaryMatroid& m, const BinaryMatroid& n,
                const std::vector<Label>& images) {
  if (images.size() != m.size()) throw std::invalid_argument("map has the wrong size");
  Isomorphism iso;
  for (const auto& l : images) {
    try {
      iso.image.push_back(n.index_of(l));
    } catch (const std::out_of_range&) {
      throw std::invalid_argument("map targets unknown label " + l);
    }
  }
  return verify_map(m, n, iso);
}

std::vector<std::pair<Label, Label>> label_pairs(const BinaryMatroid& m, const BinaryMatroid& n,
                                                 const Isomorphism& map) {
  std::vector<std::pair<Label, Label>> out;
  for (std::size_t i = 0; i < map.image.size(); ++i) {
    out.emplace_back(m.label(i), n.label(map.image[i]));
  }
  return out;
}

}  // namespace binmat
