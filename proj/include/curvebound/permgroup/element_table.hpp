#pragma once

#include "curvebound/exact.hpp"
#include "curvebound/permgroup/perm_group.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace curvebound::perm {

/// Dense indexing of the elements of a small group. An element is determined
/// by its images of the base points, so products are located in O(|base|).
class ElementTable {
public:
  using Index = std::uint32_t;

  explicit ElementTable(const PermGroup &G, std::uint64_t cap = 10'000) : base_(G.base()), degree_(G.degree())
  {
    elements_ = G.elements(cap);
    dense_ = can_use_dense();
    if (dense_)
      dense_index_.assign(dense_size(), UINT32_MAX);
    for (Index i = 0; i < elements_.size(); ++i)
      insert_key(key_of(elements_[i]), i);
    inverse_.resize(elements_.size());
    orders_.resize(elements_.size());
    for (Index i = 0; i < elements_.size(); ++i) {
      inverse_[i] = index_of(elements_[i].inverse());
      orders_[i] = elements_[i].order();
    }
  }

  std::size_t size() const { return elements_.size(); }
  const Permutation &operator[](Index i) const { return elements_[i]; }
  const std::vector<Permutation> &elements() const { return elements_; }
  Index identity() const { return 0; } // the identity sorts first
  Index inverse(Index i) const { return inverse_[i]; }
  std::uint64_t order(Index i) const { return orders_[i]; }

  Index mul(Index a, Index b) const
  {
    const auto &pa = elements_[a];
    const auto &pb = elements_[b];
    std::uint64_t key = 0;
    for (Point beta : base_)
      key = key * degree_ + pb[pa[beta]];
    return lookup(key);
  }

  /// g^-1 x g
  Index conj(Index x, Index g) const { return mul(mul(inverse_[g], x), g); }

  Index index_of(const Permutation &p) const
  {
    std::uint64_t key = key_of(p);
    Index i = lookup(key);
    if (!(elements_[i] == p))
      throw Error("permutation is not an element of the indexed group");
    return i;
  }

  bool contains(const Permutation &p) const
  {
    if (p.degree() != degree_)
      return false;
    std::uint64_t key = key_of(p);
    Index i = dense_ ? (key < dense_index_.size() ? dense_index_[key] : UINT32_MAX) : find_sparse(key);
    return i != UINT32_MAX && elements_[i] == p;
  }

private:
  std::uint64_t key_of(const Permutation &p) const
  {
    std::uint64_t key = 0;
    for (Point beta : base_)
      key = key * degree_ + p[beta];
    return key;
  }

  bool can_use_dense() const
  {
    double size = 1;
    for (std::size_t i = 0; i < base_.size(); ++i)
      size *= static_cast<double>(degree_);
    return size <= double(1u << 22);
  }

  std::size_t dense_size() const
  {
    std::size_t size = 1;
    for (std::size_t i = 0; i < base_.size(); ++i)
      size *= degree_;
    return size;
  }

  void insert_key(std::uint64_t key, Index i)
  {
    if (dense_)
      dense_index_[key] = i;
    else
      sparse_index_.emplace(key, i);
  }

  Index find_sparse(std::uint64_t key) const
  {
    auto it = sparse_index_.find(key);
    return it == sparse_index_.end() ? UINT32_MAX : it->second;
  }

  Index lookup(std::uint64_t key) const
  {
    Index i = dense_ ? dense_index_[key] : find_sparse(key);
    if (i == UINT32_MAX)
      throw Error("element lookup failed");
    return i;
  }

  std::vector<Point> base_;
  std::size_t degree_;
  std::vector<Permutation> elements_;
  std::vector<Index> inverse_;
  std::vector<std::uint64_t> orders_;
  bool dense_ = false;
  std::vector<Index> dense_index_;
  std::unordered_map<std::uint64_t, Index> sparse_index_;
};

/// Subset of an ElementTable as a bitset.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n) : bits_((n + 63) / 64, 0), n_(n) {}

  bool test(std::uint32_t i) const { return (bits_[i / 64] >> (i % 64)) & 1u; }
  void set(std::uint32_t i)
  {
    auto &word = bits_[i / 64];
    std::uint64_t mask = std::uint64_t{1} << (i % 64);
    if (!(word & mask)) {
      word |= mask;
      ++count_;
    }
  }
  std::size_t count() const { return count_; }
  std::size_t universe() const { return n_; }
  const std::vector<std::uint64_t> &words() const { return bits_; }

  std::vector<std::uint32_t> members() const
  {
    std::vector<std::uint32_t> out;
    out.reserve(count_);
    for (std::uint32_t i = 0; i < n_; ++i)
      if (test(i))
        out.push_back(i);
    return out;
  }

  friend bool operator==(const ElementSet &a, const ElementSet &b) { return a.bits_ == b.bits_; }

  /// Lexicographic order on the sorted member lists of two sets of equal
  /// size: the set holding the smallest element of the symmetric difference
  /// comes first.
  friend bool members_less(const ElementSet &a, const ElementSet &b)
  {
    for (std::size_t w = 0; w < a.bits_.size(); ++w) {
      std::uint64_t x = a.bits_[w], y = b.bits_[w];
      if (x == y)
        continue;
      std::uint64_t diff = x ^ y;
      std::uint64_t low = diff & (~diff + 1);
      return (x & low) != 0;
    }
    return false;
  }

private:
  std::vector<std::uint64_t> bits_;
  std::size_t n_ = 0;
  std::size_t count_ = 0;
};

struct ElementSetHash {
  std::size_t operator()(const ElementSet &s) const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    for (std::uint64_t w : s.words()) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

} // namespace curvebound::perm
