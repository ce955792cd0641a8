#pragma once

#include "curvebound/exact.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numeric>
#include <string>
#include <vector>

namespace curvebound::perm {

/// Points are stored 0-based; text I/O is 1-based.
using Point = std::uint32_t;

/// A bijection of {0,...,n-1}. Products act on the right:
/// x^(a*b) = (x^a)^b, i.e. a is applied first.
class Permutation {
public:
  Permutation() = default;

  explicit Permutation(std::size_t degree) : images_(degree)
  {
    std::iota(images_.begin(), images_.end(), Point{0});
  }

  static Permutation from_images(std::vector<Point> images)
  {
    std::vector<bool> seen(images.size(), false);
    for (Point x : images) {
      if (x >= images.size() || seen[x])
        throw Error("image list is not a bijection");
      seen[x] = true;
    }
    Permutation p;
    p.images_ = std::move(images);
    return p;
  }

  /// Cycles are given with 1-based points.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<Point>> &cycles)
  {
    Permutation p(degree);
    std::vector<bool> used(degree, false);
    for (const auto &cycle : cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        Point from = cycle[i];
        Point to = cycle[(i + 1) % cycle.size()];
        if (from == 0 || from > degree || to == 0 || to > degree)
          throw Error("cycle point out of range 1.." + std::to_string(degree));
        if (used[from - 1])
          throw Error("point " + std::to_string(from) + " occurs twice in cycle notation");
        used[from - 1] = true;
        p.images_[from - 1] = to - 1;
      }
    }
    return p;
  }

  std::size_t degree() const { return images_.size(); }

  Point operator[](Point x) const { return images_[x]; }

  const std::vector<Point> &images() const { return images_; }

  bool is_identity() const
  {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != i)
        return false;
    return true;
  }

  Permutation operator*(const Permutation &rhs) const
  {
    check_degree(rhs);
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      out.images_[i] = rhs.images_[images_[i]];
    return out;
  }

  Permutation inverse() const
  {
    Permutation out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i)
      out.images_[images_[i]] = static_cast<Point>(i);
    return out;
  }

  Permutation pow(std::int64_t k) const
  {
    Permutation base = k < 0 ? inverse() : *this;
    std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
    Permutation result(degree());
    while (e) {
      if (e & 1u)
        result = result * base;
      e >>= 1u;
      if (e)
        base = base * base;
    }
    return result;
  }

  /// g^-1 * this * g
  Permutation conjugate_by(const Permutation &g) const { return g.inverse() * *this * g; }

  std::vector<std::vector<Point>> cycles() const
  {
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(images_.size(), false);
    for (Point start = 0; start < images_.size(); ++start) {
      if (seen[start] || images_[start] == start)
        continue;
      std::vector<Point> cycle;
      for (Point x = start; !seen[x]; x = images_[x]) {
        seen[x] = true;
        cycle.push_back(x);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  /// Element order: lcm of the cycle lengths.
  std::uint64_t order() const
  {
    std::uint64_t result = 1;
    for (const auto &c : cycles())
      result = std::lcm(result, static_cast<std::uint64_t>(c.size()));
    return result;
  }

  /// Parity by cycle type.
  bool is_even() const
  {
    std::size_t transpositions = 0;
    for (const auto &c : cycles())
      transpositions += c.size() - 1;
    return transpositions % 2 == 0;
  }

  /// Cycle notation with 1-based points; the identity prints as "()".
  std::string to_string() const
  {
    std::string out;
    for (const auto &c : cycles()) {
      out += '(';
      for (std::size_t i = 0; i < c.size(); ++i) {
        if (i)
          out += ',';
        out += std::to_string(c[i] + 1);
      }
      out += ')';
    }
    return out.empty() ? "()" : out;
  }

  friend bool operator==(const Permutation &, const Permutation &) = default;
  friend auto operator<=>(const Permutation &a, const Permutation &b) { return a.images_ <=> b.images_; }

private:
  void check_degree(const Permutation &other) const
  {
    if (other.degree() != degree())
      throw Error("permutation degree mismatch: " + std::to_string(degree()) + " vs " +
                  std::to_string(other.degree()));
  }

  std::vector<Point> images_;
};

struct PermutationHash {
  std::size_t operator()(const Permutation &p) const noexcept
  {
    std::size_t h = 1469598103934665603ull;
    for (Point x : p.images()) {
      h ^= x;
      h *= 1099511628211ull;
    }
    return h;
  }
};

} // namespace curvebound::perm
