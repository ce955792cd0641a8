#pragma once

#include "curvebound/exact.hpp"
#include "curvebound/permgroup/element_table.hpp"
#include "curvebound/permgroup/perm_group.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <unordered_set>
#include <utility>
#include <vector>

namespace curvebound::perm {

inline constexpr std::uint64_t kElementScanCap = 10'000'000;
inline constexpr std::uint64_t kSubgroupClassCap = 10'000;

inline bool is_subgroup(const PermGroup &H, const PermGroup &G)
{
  return H.degree() == G.degree() && G.contains_all(H.generators());
}

inline PermGroup extend(const PermGroup &H, const std::vector<Permutation> &extra)
{
  std::vector<Permutation> gens = H.generators();
  gens.insert(gens.end(), extra.begin(), extra.end());
  return PermGroup::from_generators(H.degree(), std::move(gens));
}

/// Smallest normal subgroup of G containing `seeds` (which must lie in G).
inline PermGroup normal_closure(const PermGroup &G, const std::vector<Permutation> &seeds)
{
  PermGroup N = PermGroup::from_generators(G.degree(), seeds);
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto &n : N.generators()) {
      for (const auto &g : G.generators()) {
        Permutation c = n.conjugate_by(g);
        if (!N.contains(c)) {
          N = extend(N, {c});
          grew = true;
          break;
        }
      }
      if (grew)
        break;
    }
  }
  return N;
}

inline Permutation commutator(const Permutation &a, const Permutation &b)
{
  return a.inverse() * b.inverse() * a * b;
}

inline PermGroup derived_subgroup(const PermGroup &G)
{
  std::vector<Permutation> comms;
  const auto &gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j) {
      Permutation c = commutator(gens[i], gens[j]);
      if (!c.is_identity())
        comms.push_back(std::move(c));
    }
  return normal_closure(G, comms);
}

/// Orders of the terms of the derived series, ending at a perfect group.
inline std::vector<BigInt> derived_series_orders(const PermGroup &G)
{
  std::vector<BigInt> orders{G.order()};
  PermGroup D = G;
  while (!D.is_trivial()) {
    PermGroup next = derived_subgroup(D);
    if (next.order() == D.order())
      break;
    D = std::move(next);
    orders.push_back(D.order());
  }
  return orders;
}

inline bool is_solvable(const PermGroup &G) { return derived_series_orders(G).back() == 1; }

inline bool is_abelian(const PermGroup &G)
{
  const auto &gens = G.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (!(gens[i] * gens[j] == gens[j] * gens[i]))
        return false;
  return true;
}

inline void require_scan_cap(const PermGroup &G, std::uint64_t cap)
{
  if (G.order() > cap)
    throw Error("group of order " + G.order().str() + " exceeds the element-scan cap " + std::to_string(cap));
}

inline std::set<std::uint64_t> element_order_set(const PermGroup &G, std::uint64_t cap = kElementScanCap)
{
  require_scan_cap(G, cap);
  std::set<std::uint64_t> orders;
  G.for_each_element([&](const Permutation &g) { orders.insert(g.order()); });
  return orders;
}

inline bool is_cyclic(const PermGroup &G)
{
  std::uint64_t n = G.order_u64();
  return element_order_set(G).count(n) > 0;
}

/// Abelian with every non-identity element of order p.
inline bool is_elementary_abelian(const PermGroup &G, std::uint64_t p)
{
  if (!is_abelian(G))
    return false;
  for (const auto &g : G.generators())
    if (g.order() != p)
      return false;
  return true;
}

/// N_G(H) by scanning the elements of G.
inline PermGroup normalizer(const PermGroup &G, const PermGroup &H)
{
  if (!is_subgroup(H, G))
    throw Error("normalizer: H is not a subgroup of G");
  require_scan_cap(G, kElementScanCap);
  PermGroup N = H;
  G.for_each_element([&](const Permutation &g) {
    if (N.contains(g))
      return;
    for (const auto &h : H.generators())
      if (!H.contains(h.conjugate_by(g)))
        return;
    N = extend(N, {g});
  });
  return N;
}

inline bool is_p_power(std::uint64_t n, std::uint64_t p)
{
  if (n == 0)
    return false;
  while (n % p == 0)
    n /= p;
  return n == 1;
}

/// A Sylow p-subgroup: start from the first element of order p in the
/// lexicographic element order, then repeatedly adjoin the first p-element
/// of the normalizer that lies outside the current p-subgroup.
inline PermGroup sylow_subgroup(const PermGroup &G, std::uint64_t p)
{
  if (!is_prime(p))
    throw Error("sylow_subgroup: " + std::to_string(p) + " is not prime");
  BigInt target = p_part(G.order(), p);
  if (target == 1)
    return PermGroup::trivial(G.degree());
  require_scan_cap(G, kElementScanCap);

  std::optional<Permutation> seed;
  for (const auto &g : G.elements(kElementScanCap))
    if (g.order() == p) {
      seed = g;
      break;
    }
  PermGroup P = PermGroup::from_generators(G.degree(), {*seed});
  while (P.order() < target) {
    PermGroup N = normalizer(G, P);
    std::optional<Permutation> next;
    for (const auto &y : N.elements(kElementScanCap))
      if (is_p_power(y.order(), p) && !P.contains(y)) {
        next = y;
        break;
      }
    if (!next)
      throw Error("sylow_subgroup: normalizer contains no p-element outside P");
    P = extend(P, {*next});
  }
  return P;
}

/// Representatives of the conjugacy classes of elements, with class sizes,
/// in element-table order of the first member found.
inline std::vector<std::pair<Permutation, std::uint64_t>> conjugacy_classes(const PermGroup &G)
{
  ElementTable T(G, kSubgroupClassCap);
  std::vector<ElementTable::Index> gens;
  for (const auto &g : G.generators())
    gens.push_back(T.index_of(g));
  std::vector<bool> seen(T.size(), false);
  std::vector<std::pair<Permutation, std::uint64_t>> out;
  for (ElementTable::Index x = 0; x < T.size(); ++x) {
    if (seen[x])
      continue;
    std::vector<ElementTable::Index> cls{x};
    seen[x] = true;
    for (std::size_t i = 0; i < cls.size(); ++i)
      for (auto s : gens) {
        auto y = T.conj(cls[i], s);
        if (!seen[y]) {
          seen[y] = true;
          cls.push_back(y);
        }
      }
    out.emplace_back(T[x], cls.size());
  }
  return out;
}

/// Simple: nontrivial, and the normal closure of every non-identity class
/// representative is the whole group.
inline bool is_simple(const PermGroup &G)
{
  if (G.is_trivial())
    return false;
  for (const auto &[rep, size] : conjugacy_classes(G)) {
    if (rep.is_identity())
      continue;
    if (normal_closure(G, {rep}).order() != G.order())
      return false;
  }
  return true;
}

struct SubgroupRecord {
  PermGroup representative;
  BigInt order;
  bool is_solvable = false;
  BigInt class_size;
};

namespace detail {

// Conjugacy classes of subgroups by cyclic extension over an element table.
class SubgroupLattice {
public:
  using Index = ElementTable::Index;

  SubgroupLattice(const PermGroup &G, std::uint64_t max_order) : G_(G), T_(G, kSubgroupClassCap), max_order_(max_order)
  {
    for (const auto &g : G.generators())
      group_gens_.push_back(T_.index_of(g));
    for (Index x = 0; x < T_.size(); ++x)
      if (x != T_.identity() && is_prime_power(T_.order(x)))
        prime_power_elements_.push_back(x);
  }

  std::vector<SubgroupRecord> run()
  {
    ElementSet trivial(T_.size());
    trivial.set(T_.identity());
    register_class(trivial, {});
    for (std::size_t c = 0; c < classes_.size(); ++c) {
      if (classes_[c].set.count() >= max_order_)
        continue;
      extend_class(c);
    }

    std::vector<std::size_t> idx(classes_.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
      const auto &x = classes_[a], &y = classes_[b];
      if (x.set.count() != y.set.count())
        return x.set.count() < y.set.count();
      if (x.class_size != y.class_size)
        return x.class_size < y.class_size;
      return members_less(x.set, y.set);
    });

    std::vector<SubgroupRecord> out;
    for (std::size_t i : idx) {
      const auto &cls = classes_[i];
      std::vector<Permutation> gens;
      for (Index g : cls.gens)
        gens.push_back(T_[g]);
      SubgroupRecord rec;
      rec.representative = PermGroup::from_generators(G_.degree(), std::move(gens));
      rec.order = cls.set.count();
      rec.is_solvable = is_solvable(rec.representative);
      rec.class_size = cls.class_size;
      out.push_back(std::move(rec));
    }
    return out;
  }

private:
  struct Class {
    ElementSet set; // lexicographically least member of the class
    std::vector<Index> gens;
    std::uint64_t class_size = 0;
  };

  static bool is_prime_power(std::uint64_t n)
  {
    auto f = factorize(n);
    return f.size() == 1;
  }

  std::optional<ElementSet> closure(const std::vector<Index> &gens) const
  {
    ElementSet set(T_.size());
    std::vector<Index> list{T_.identity()};
    set.set(T_.identity());
    for (std::size_t i = 0; i < list.size(); ++i)
      for (Index s : gens) {
        Index y = T_.mul(list[i], s);
        if (!set.test(y)) {
          set.set(y);
          list.push_back(y);
          if (list.size() > max_order_)
            return std::nullopt;
        }
      }
    return set;
  }

  ElementSet conjugate(const ElementSet &set, Index g) const
  {
    ElementSet out(T_.size());
    for (Index m : set.members())
      out.set(T_.conj(m, g));
    return out;
  }

  // Orbit of the subgroup under conjugation by the generators of G. Every
  // member of the orbit is recorded as known; the least one becomes the
  // class representative.
  void register_class(const ElementSet &set, const std::vector<Index> &gens)
  {
    if (known_.count(set))
      return;
    std::vector<std::pair<ElementSet, Index>> orbit{{set, T_.identity()}};
    known_.insert(set);
    std::size_t best = 0;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (Index s : group_gens_) {
        ElementSet c = conjugate(orbit[i].first, s);
        if (known_.count(c))
          continue;
        known_.insert(c);
        orbit.emplace_back(std::move(c), T_.mul(orbit[i].second, s));
        if (members_less(orbit.back().first, orbit[best].first))
          best = orbit.size() - 1;
      }
    Class cls;
    cls.set = orbit[best].first;
    for (Index g : gens)
      cls.gens.push_back(T_.conj(g, orbit[best].second));
    cls.class_size = orbit.size();
    classes_.push_back(std::move(cls));
  }

  void extend_class(std::size_t c)
  {
    const ElementSet H = classes_[c].set;
    const std::vector<Index> gens = classes_[c].gens;
    ElementSet done = H;
    for (Index x : prime_power_elements_) {
      if (done.test(x))
        continue;
      mark_double_coset(done, gens, x);
      std::vector<Index> kgens = gens;
      kgens.push_back(x);
      if (auto K = closure(kgens))
        register_class(*K, kgens);
    }
  }

  // <H, hxh'> = <H, x>, so one representative per double coset suffices.
  void mark_double_coset(ElementSet &done, const std::vector<Index> &hgens, Index x) const
  {
    std::vector<Index> list{x};
    done.set(x);
    for (std::size_t i = 0; i < list.size(); ++i)
      for (Index s : hgens)
        for (Index y : {T_.mul(list[i], s), T_.mul(s, list[i])})
          if (!done.test(y)) {
            done.set(y);
            list.push_back(y);
          }
  }

  const PermGroup &G_;
  ElementTable T_;
  std::uint64_t max_order_;
  std::vector<Index> group_gens_;
  std::vector<Index> prime_power_elements_;
  std::vector<Class> classes_;
  std::unordered_set<ElementSet, ElementSetHash> known_;
};

} // namespace detail

/// One record per conjugacy class of subgroups of order at most max_order,
/// ordered by (order, class size, least element list of the representative).
inline std::vector<SubgroupRecord> subgroup_classes(const PermGroup &G, std::uint64_t max_order)
{
  if (G.order() > kSubgroupClassCap)
    throw Error("subgroup_classes: group order " + G.order().str() + " exceeds the cap " +
                std::to_string(kSubgroupClassCap));
  return detail::SubgroupLattice(G, max_order).run();
}

inline std::vector<SubgroupRecord> subgroup_classes(const PermGroup &G)
{
  return subgroup_classes(G, G.order_u64());
}

/// A subgroup Q⋊<c> with Q a nontrivial p-subgroup and c a p'-element of
/// N_G(Q); recorded by |Q| and the order of c.
struct PCyclicPair {
  std::uint64_t q = 1;
  std::uint64_t e = 1;
  auto operator<=>(const PCyclicPair &) const = default;
};

/// Every (|Q|, ord c) realized in G. Q runs over the subgroups of one Sylow
/// p-subgroup, which meets every conjugacy class of p-subgroups.
inline std::vector<PCyclicPair> p_cyclic_pairs(const PermGroup &G, std::uint64_t p)
{
  std::set<PCyclicPair> pairs;
  PermGroup P = sylow_subgroup(G, p);
  if (P.is_trivial())
    return {};
  for (const auto &rec : subgroup_classes(P)) {
    if (rec.order == 1)
      continue;
    PermGroup N = normalizer(G, rec.representative);
    for (std::uint64_t o : element_order_set(N))
      if (o % p != 0)
        pairs.insert({to_u64(rec.order), o});
  }
  return {pairs.begin(), pairs.end()};
}

/// Largest |Q|·ord(c) over p_cyclic_pairs; such a subgroup is solvable with
/// Sylow p-subgroup Q and cyclic complement <c>.
inline std::uint64_t max_solvable_with_cyclic_complement(const PermGroup &G, std::uint64_t p)
{
  if (!is_prime(p) || G.order() % p != 0)
    throw Error("max_solvable_with_cyclic_complement: p must be a prime dividing |G|");
  std::uint64_t best = 0;
  for (const auto &pair : p_cyclic_pairs(G, p))
    best = std::max(best, pair.q * pair.e);
  return best;
}

} // namespace curvebound::perm
