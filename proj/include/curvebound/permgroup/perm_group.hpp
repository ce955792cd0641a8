#pragma once

#include "curvebound/exact.hpp"
#include "curvebound/permgroup/permutation.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace curvebound::perm {

/// A permutation group together with a base and strong generating set
/// produced by the deterministic Schreier-Sims algorithm. Immutable after
/// construction.
class PermGroup {
public:
  /// Level i of the stabilizer chain: the base point, the strong generators
  /// fixing all earlier base points, and a transversal u with base^u[x] = x.
  struct Level {
    Point base_point = 0;
    std::vector<Permutation> generators;
    std::vector<Point> orbit;
    std::vector<std::optional<Permutation>> transversal;
  };

  PermGroup() = default;

  /// The group generated by `gens` acting on {1..degree}. An empty list
  /// yields the trivial group.
  static PermGroup from_generators(std::size_t degree, std::vector<Permutation> gens)
  {
    for (const auto &g : gens)
      if (g.degree() != degree)
        throw Error("generator degree " + std::to_string(g.degree()) +
                    " does not match group degree " + std::to_string(degree));
    PermGroup G;
    G.degree_ = degree;
    for (auto &g : gens)
      if (!g.is_identity())
        G.generators_.push_back(std::move(g));
    G.schreier_sims();
    return G;
  }

  /// Degree is taken from the first generator; the list must be non-empty.
  static PermGroup from_generators(std::vector<Permutation> gens)
  {
    if (gens.empty())
      throw Error("cannot infer the degree of an empty generator list");
    std::size_t degree = gens.front().degree();
    return from_generators(degree, std::move(gens));
  }

  static PermGroup trivial(std::size_t degree) { return from_generators(degree, {}); }

  std::size_t degree() const { return degree_; }
  const std::vector<Permutation> &generators() const { return generators_; }
  const std::vector<Level> &levels() const { return levels_; }
  Permutation identity() const { return Permutation(degree_); }

  std::vector<Point> base() const
  {
    std::vector<Point> b;
    for (const auto &l : levels_)
      b.push_back(l.base_point);
    return b;
  }

  /// Product of the fundamental orbit lengths.
  BigInt order() const
  {
    BigInt n = 1;
    for (const auto &l : levels_)
      n *= l.orbit.size();
    return n;
  }

  std::uint64_t order_u64() const { return to_u64(order()); }

  bool is_trivial() const { return levels_.empty(); }

  /// Sifts x through the stabilizer chain. Returns the residue and the level
  /// at which sifting stopped (levels().size() when it went all the way).
  std::pair<Permutation, std::size_t> strip(Permutation x, std::size_t from_level = 0) const
  {
    for (std::size_t i = from_level; i < levels_.size(); ++i) {
      const Level &l = levels_[i];
      Point beta = x[l.base_point];
      if (!l.transversal[beta])
        return {std::move(x), i};
      x = x * l.transversal[beta]->inverse();
    }
    return {std::move(x), levels_.size()};
  }

  bool contains(const Permutation &x) const
  {
    if (x.degree() != degree_)
      throw Error("membership test: permutation degree " + std::to_string(x.degree()) +
                  " differs from group degree " + std::to_string(degree_));
    auto [residue, level] = strip(x);
    return level == levels_.size() && residue.is_identity();
  }

  bool contains_all(const std::vector<Permutation> &xs) const
  {
    for (const auto &x : xs)
      if (!contains(x))
        return false;
    return true;
  }

  /// Visits every element once, in a fixed order determined by the
  /// stabilizer chain. Nothing is materialized beyond one word per level.
  template <class F>
  void for_each_element(F &&visit) const
  {
    visit_level(levels_.size(), identity(), visit);
  }

  /// All elements, sorted by image list. Refuses groups above `cap`.
  std::vector<Permutation> elements(std::uint64_t cap = 10'000'000) const
  {
    if (order() > cap)
      throw Error("group of order " + order().str() + " exceeds the enumeration cap " +
                  std::to_string(cap));
    std::vector<Permutation> out;
    out.reserve(order_u64());
    for_each_element([&](const Permutation &g) { out.push_back(g); });
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Orbit of a point under the generators, in discovery order.
  std::vector<Point> orbit(Point x) const { return orbit_of(x, generators_); }

private:
  // Every element is u_{k-1} ... u_1 u_0 with u_i from the transversal of
  // level i; `prefix` holds the factors of the deeper levels.
  template <class F>
  void visit_level(std::size_t level, const Permutation &prefix, F &visit) const
  {
    if (level == 0) {
      visit(prefix);
      return;
    }
    const Level &l = levels_[level - 1];
    for (Point beta : l.orbit)
      visit_level(level - 1, prefix * *l.transversal[beta], visit);
  }

  static std::vector<Point> orbit_of(Point x, const std::vector<Permutation> &gens)
  {
    std::vector<Point> out{x};
    std::vector<bool> seen;
    if (!gens.empty())
      seen.assign(gens.front().degree(), false);
    else
      return out;
    seen[x] = true;
    for (std::size_t i = 0; i < out.size(); ++i)
      for (const auto &g : gens) {
        Point y = g[out[i]];
        if (!seen[y]) {
          seen[y] = true;
          out.push_back(y);
        }
      }
    return out;
  }

  void rebuild_transversal(Level &l) const
  {
    l.transversal.assign(degree_, std::nullopt);
    l.transversal[l.base_point] = identity();
    l.orbit.assign(1, l.base_point);
    for (std::size_t i = 0; i < l.orbit.size(); ++i) {
      Point x = l.orbit[i];
      for (const auto &g : l.generators) {
        Point y = g[x];
        if (!l.transversal[y]) {
          l.transversal[y] = *l.transversal[x] * g;
          l.orbit.push_back(y);
        }
      }
    }
  }

  static std::optional<Point> first_moved_point(const Permutation &g)
  {
    for (Point x = 0; x < g.degree(); ++x)
      if (g[x] != x)
        return x;
    return std::nullopt;
  }

  void add_base_point_for(const Permutation &g)
  {
    auto moved = first_moved_point(g);
    Level l;
    l.base_point = *moved;
    levels_.push_back(std::move(l));
  }

  bool fixes_base_prefix(const Permutation &g, std::size_t upto) const
  {
    for (std::size_t j = 0; j < upto; ++j)
      if (g[levels_[j].base_point] != levels_[j].base_point)
        return false;
    return true;
  }

  // Deterministic Schreier-Sims: every Schreier generator of every level is
  // sifted; residues extend the strong generating set from the level they
  // stopped at.
  void schreier_sims()
  {
    levels_.clear();
    if (generators_.empty())
      return;
    for (const auto &g : generators_) {
      bool fixes_base = true;
      for (const auto &l : levels_)
        if (g[l.base_point] != l.base_point) {
          fixes_base = false;
          break;
        }
      if (fixes_base)
        add_base_point_for(g);
    }
    for (std::size_t i = 0; i < levels_.size(); ++i) {
      for (const auto &g : generators_)
        if (fixes_base_prefix(g, i))
          levels_[i].generators.push_back(g);
      rebuild_transversal(levels_[i]);
    }

    std::size_t i = levels_.size();
    while (i-- > 0) {
      bool restarted = false;
      // levels_ may reallocate inside the loop; index rather than hold references.
      for (std::size_t oi = 0; !restarted && oi < levels_[i].orbit.size(); ++oi) {
        Point beta = levels_[i].orbit[oi];
        for (std::size_t gi = 0; !restarted && gi < levels_[i].generators.size(); ++gi) {
          const Level &li = levels_[i];
          const Permutation &s = li.generators[gi];
          Permutation h = *li.transversal[beta] * s * li.transversal[s[beta]]->inverse();
          auto [residue, j] = strip(std::move(h), i + 1);
          if (j == levels_.size() && residue.is_identity())
            continue;
          if (j == levels_.size())
            add_base_point_for(residue);
          for (std::size_t l2 = i + 1; l2 <= j; ++l2) {
            levels_[l2].generators.push_back(residue);
            rebuild_transversal(levels_[l2]);
          }
          i = j + 1; // the loop decrement resumes at level j
          restarted = true;
        }
      }
    }
  }

  std::size_t degree_ = 0;
  std::vector<Permutation> generators_;
  std::vector<Level> levels_;
};

} // namespace curvebound::perm
