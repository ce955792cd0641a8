#pragma once

#include "curvebound/exact.hpp"
#include "curvebound/ramification/wild_stabilizer.hpp"

#include <cstdint>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace curvebound::ram {

/// `count` branch points with ramification index e and different exponent d.
struct BranchPoint {
  std::uint64_t e = 2;
  std::uint64_t d = 1;
  std::uint64_t count = 1;
  auto operator<=>(const BranchPoint &) const = default;
};

struct RamSignature {
  std::uint64_t quotient_genus = 0;
  std::vector<BranchPoint> points;

  /// d >= e - 1 and e >= 2 always; with p given, d = e - 1 exactly when p ∤ e.
  void validate(std::uint64_t p = 0) const
  {
    for (const auto &pt : points) {
      if (pt.e < 2)
        throw Error("ramification index must be at least 2, got " + std::to_string(pt.e));
      if (pt.d < pt.e - 1)
        throw Error("different exponent " + std::to_string(pt.d) + " is below e - 1 = " + std::to_string(pt.e - 1));
      if (p) {
        bool tame = pt.e % p != 0;
        if (tame && pt.d != pt.e - 1)
          throw Error("tame point with e = " + std::to_string(pt.e) + " must have d = e - 1");
        if (!tame && pt.d == pt.e - 1)
          throw Error("wild point with e = " + std::to_string(pt.e) + " must have d > e - 1");
      }
    }
  }

  /// Σ count·d/e.
  Rational ramification_sum() const
  {
    Rational s = 0;
    for (const auto &pt : points)
      s += Rational(BigInt(pt.count) * pt.d, BigInt(pt.e));
    return s;
  }
};

/// g from 2g - 2 = |G|(2ḡ - 2 + Σ count·d/e). The result may be negative or
/// non-integral; that signals an infeasible signature.
inline Rational hurwitz_genus(const BigInt &order_G, const RamSignature &sig)
{
  if (order_G < 1)
    throw Error("group order must be positive");
  Rational rhs = Rational(order_G) * (Rational(2 * BigInt(sig.quotient_genus) - 2) + sig.ramification_sum());
  return rhs / 2 + 1;
}

/// 2g - 2 for a signature, exactly.
inline Rational hurwitz_euler(const BigInt &order_G, const RamSignature &sig)
{
  return 2 * hurwitz_genus(order_G, sig) - 2;
}

/// γ = |S|(γ̄ - 1) + Σ(|S| - ℓ_i) + 1 for a p-group S with short orbits of
/// lengths ℓ_i.
inline BigInt deuring_shafarevich(std::uint64_t order_S, const BigInt &gamma_bar,
                                  const std::vector<std::uint64_t> &short_orbits)
{
  auto f = factorize(order_S);
  if (order_S < 2 || f.size() != 1)
    throw Error("Deuring-Shafarevich: |S| = " + std::to_string(order_S) + " is not a prime power");
  BigInt gamma = BigInt(order_S) * (gamma_bar - 1) + 1;
  for (std::uint64_t l : short_orbits) {
    if (l == 0 || l >= order_S || order_S % l != 0)
      throw Error("Deuring-Shafarevich: short orbit length " + std::to_string(l) +
                  " must properly divide |S| = " + std::to_string(order_S));
    gamma += order_S - l;
  }
  return gamma;
}

/// (e, d) of a wild point whose second ramification group is trivial:
/// e = q1·E1, d = (e - 1) + (q1 - 1).
inline std::pair<std::uint64_t, std::uint64_t> wild_different(const WildStabilizer &w)
{
  if (w.q1 < 3 || w.E1 == 0 || w.E1 > w.q1 - 1)
    throw Error("wild stabilizer (" + std::to_string(w.q1) + "," + std::to_string(w.E1) + ") is invalid");
  std::uint64_t e = w.e();
  return {e, e + w.q1 - 2};
}

/// Genus of y^m = Π (x - a_i)^{λ_i} with distinct a_i, p ∤ m. The place at
/// infinity carries λ_∞ = -Σλ_i; a place with exponent λ has e = m/gcd(m, λ).
inline std::uint64_t kummer_genus(std::uint64_t m, const std::vector<std::int64_t> &exponents, std::uint64_t p)
{
  if (m <= 1)
    throw Error("Kummer degree m must exceed 1");
  if (p == 0 || !is_prime(p))
    throw Error("characteristic must be prime");
  if (m % p == 0)
    throw Error("Kummer degree m = " + std::to_string(m) + " is divisible by p = " + std::to_string(p));
  auto g_of = [&](std::int64_t lambda) {
    std::uint64_t a = static_cast<std::uint64_t>(lambda < 0 ? -lambda : lambda);
    return std::gcd(m, a);
  };
  std::int64_t total = 0;
  std::uint64_t common = m;
  for (std::int64_t l : exponents) {
    total += l;
    common = std::gcd(common, g_of(l));
  }
  if (common != 1)
    throw Error("exponents share a factor with m; the curve is reducible");
  // 2g - 2 = -2m + Σ (m - gcd(m, λ)) over all places, tame ramification.
  std::int64_t twice = -2 * static_cast<std::int64_t>(m) + 2;
  for (std::int64_t l : exponents)
    twice += static_cast<std::int64_t>(m - g_of(l));
  twice += static_cast<std::int64_t>(m - g_of(-total));
  if (twice < 0 || twice % 2 != 0)
    throw Error("Kummer genus computation produced a non-integral genus");
  return static_cast<std::uint64_t>(twice / 2);
}

} // namespace curvebound::ram
