#pragma once

#include "curvebound/exact.hpp"

#include <compare>
#include <cstdint>
#include <numeric>
#include <string>

namespace curvebound {

/// Stabilizer Q⋊C of a wildly ramified point: |Q| = q1 is a power of the
/// working prime p and C is cyclic of order E1, prime to p.
struct WildStabilizer {
  std::uint64_t q1 = 1;
  std::uint64_t E1 = 1;

  std::uint64_t e() const { return q1 * E1; }

  /// Throws unless q1 is a nontrivial power of p, gcd(E1, p) = 1 and
  /// E1 <= q1 - 1.
  void validate(std::uint64_t p) const
  {
    if (!is_prime(p))
      throw Error("wild stabilizer: " + std::to_string(p) + " is not prime");
    std::uint64_t q = q1;
    if (q < p)
      throw Error("wild stabilizer: q1 = " + std::to_string(q1) + " is not a power of " + std::to_string(p));
    while (q % p == 0)
      q /= p;
    if (q != 1)
      throw Error("wild stabilizer: q1 = " + std::to_string(q1) + " is not a power of " + std::to_string(p));
    if (E1 == 0 || E1 % p == 0)
      throw Error("wild stabilizer: E1 = " + std::to_string(E1) + " is not prime to " + std::to_string(p));
    if (E1 > q1 - 1)
      throw Error("wild stabilizer: E1 = " + std::to_string(E1) + " exceeds q1 - 1 = " + std::to_string(q1 - 1));
  }

  auto operator<=>(const WildStabilizer &) const = default;
};

} // namespace curvebound
