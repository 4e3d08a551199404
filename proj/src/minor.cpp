#include <bit>
#include <numeric>
#include <stdexcept>

#include "binmat/enumerate.hpp"

namespace binmat {

namespace {

// Packs the bits of v selected by mask into the low bits of the result.
Word compress(Word v, Word mask) {
  Word out = 0;
  std::size_t k = 0;
  while (mask != 0) {
    const Word low = mask & (~mask + 1);
    if ((v & low) != 0) out |= Word{1} << k;
    ++k;
    mask &= mask - 1;
  }
  return out;
}

// Embedding search for a fixed contraction: looks for an ordered basis of
// the contracted matroid onto which the target's standard basis maps such
// that every other target column lands on an available element.
class Embedder {
 public:
  Embedder(const BinaryMatroid& target, std::vector<std::size_t> elements,
           std::vector<Word> vectors, std::size_t rank)
      : elements_(std::move(elements)), vectors_(std::move(vectors)), rank_(rank) {
    const auto& basis = target.standard_basis();
    target_basis_ = basis;
    target_rest_ = target.nonbasis();
    for (std::size_t j : target_rest_) demand_.push_back(target.column(j));
    by_level_.resize(rank_ + 1);
    for (std::size_t j = 0; j < demand_.size(); ++j) {
      const std::size_t level =
          demand_[j] == 0 ? 0 : static_cast<std::size_t>(std::bit_width(demand_[j]));
      by_level_[level].push_back(j);
    }
    const std::size_t values = std::size_t{1} << rank_;
    available_.assign(values, 0);
    buckets_.assign(values, {});
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
      ++available_[vectors_[i]];
      buckets_[vectors_[i]].push_back(i);
    }
    taken_.assign(values, 0);
    in_tuple_.assign(vectors_.size(), false);
  }

  // On success fills assignment: target position -> index into elements.
  bool run(std::vector<std::size_t>& assignment) {
    // Loops of the target need loops here before any basis is chosen.
    for (std::size_t t = 0; t < by_level_[0].size(); ++t) {
      if (!take(0)) return false;
    }
    tuple_.clear();
    map_.clear();
    if (!descend()) return false;
    assignment.assign(target_basis_.size() + target_rest_.size(), 0);
    std::vector<std::size_t> cursor(available_.size(), 0);
    for (std::size_t b = 0; b < rank_; ++b) assignment[target_basis_[b]] = elements_[tuple_[b]];
    for (std::size_t j = 0; j < demand_.size(); ++j) {
      const Word v = apply_columns(map_, demand_[j]);
      auto& bucket = buckets_[v];
      std::size_t& c = cursor[v];
      while (in_tuple_[bucket[c]]) ++c;
      assignment[target_rest_[j]] = elements_[bucket[c]];
      ++c;
    }
    return true;
  }

 private:
  bool take(Word v) {
    if (++taken_[v] > available_[v]) {
      --taken_[v];
      return false;
    }
    return true;
  }

  bool descend() {
    const std::size_t depth = tuple_.size();
    if (depth == rank_) return true;
    for (std::size_t i = 0; i < vectors_.size(); ++i) {
      if (in_tuple_[i]) continue;
      const Word u = vectors_[i];
      XorBasis span = span_;
      if (!span.insert(u)) continue;
      if (!take(u)) continue;
      // Target columns whose highest coordinate is this basis position are
      // now fully determined.
      map_.push_back(u);
      std::size_t placed = 0;
      bool ok = true;
      for (std::size_t j : by_level_[depth + 1]) {
        if (!take(apply_columns(map_, demand_[j]))) {
          ok = false;
          break;
        }
        ++placed;
      }
      if (ok) {
        const XorBasis saved = span_;
        span_ = span;
        tuple_.push_back(i);
        in_tuple_[i] = true;
        if (descend()) return true;
        in_tuple_[i] = false;
        tuple_.pop_back();
        span_ = saved;
      }
      const auto& level = by_level_[depth + 1];
      for (std::size_t t = 0; t < placed; ++t) --taken_[apply_columns(map_, demand_[level[t]])];
      map_.pop_back();
      --taken_[u];
    }
    return false;
  }

  std::vector<std::size_t> elements_;
  std::vector<Word> vectors_;
  std::size_t rank_;
  std::vector<std::size_t> target_basis_;
  std::vector<std::size_t> target_rest_;
  std::vector<Word> demand_;
  std::vector<std::vector<std::size_t>> by_level_;
  std::vector<std::size_t> available_;
  std::vector<std::vector<std::size_t>> buckets_;
  std::vector<std::size_t> taken_;
  std::vector<bool> in_tuple_;
  std::vector<std::size_t> tuple_;
  std::vector<Word> map_;
  XorBasis span_;
};

}  // namespace

std::optional<MinorWitness> has_minor(const BinaryMatroid& m, const BinaryMatroid& target) {
  if (target.rank() > m.rank() || target.size() > m.size()) return std::nullopt;
  const std::size_t k = m.rank() - target.rank();
  if (target.size() + k > m.size()) return std::nullopt;
  if (target.rank() > 20) throw std::invalid_argument("target rank too large for has_minor");

  const std::size_t n = m.size();
  std::vector<std::size_t> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  while (true) {
    XorBasis contracted;
    bool independent = true;
    for (std::size_t i : pick) independent = independent && contracted.insert(m.column(i));
    if (independent) {
      // Project the other columns onto the quotient by span(pick).
      const Word keep_bits =
          ElementSet::first(m.rank()).bits() & ~contracted.pivot_mask();
      std::vector<std::size_t> elements;
      std::vector<Word> vectors;
      ElementSet contract_set;
      for (std::size_t i : pick) contract_set = contract_set.with(i);
      for (std::size_t e = 0; e < n; ++e) {
        if (contract_set.contains(e)) continue;
        elements.push_back(e);
        vectors.push_back(compress(contracted.reduce(m.column(e)), keep_bits));
      }
      Embedder embedder(target, elements, vectors, target.rank());
      std::vector<std::size_t> assignment;
      if (embedder.run(assignment)) {
        MinorWitness w;
        w.contract_set = contract_set;
        ElementSet used;
        for (std::size_t e : assignment) used = used.with(e);
        w.delete_set = m.ground() - contract_set - used;
        // Minor ground set is m's surviving elements in order.
        const auto survivors = used.indices();
        std::vector<std::size_t> position(n, 0);
        for (std::size_t i = 0; i < survivors.size(); ++i) position[survivors[i]] = i;
        Isomorphism to_minor;  // target -> minor
        for (std::size_t e : assignment) to_minor.image.push_back(position[e]);
        w.iso = to_minor.inverse();
        return w;
      }
    }
    if (k == 0) break;
    std::size_t i = k;
    while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++pick[i - 1];
    for (std::size_t t = i; t < k; ++t) pick[t] = pick[t - 1] + 1;
  }
  return std::nullopt;
}

bool verify_witness(const BinaryMatroid& m, const BinaryMatroid& target,
                    const MinorWitness& witness) {
  if (!(witness.contract_set & witness.delete_set).empty()) return false;
  const BinaryMatroid result = minor(m, witness.contract_set, witness.delete_set);
  if (result.size() != target.size()) return false;
  return verify_map(result, target, witness.iso);
}

}  // namespace binmat
