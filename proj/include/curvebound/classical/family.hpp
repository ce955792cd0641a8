#pragma once

#include "curvebound/exact.hpp"

#include <cctype>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>

namespace curvebound::classical {

enum class Family { PSL2, PGL2, PSL3, PGL3, PSU3, PGU3, ALT7, M11 };

inline std::string_view family_name(Family f)
{
  switch (f) {
  case Family::PSL2: return "PSL2";
  case Family::PGL2: return "PGL2";
  case Family::PSL3: return "PSL3";
  case Family::PGL3: return "PGL3";
  case Family::PSU3: return "PSU3";
  case Family::PGU3: return "PGU3";
  case Family::ALT7: return "ALT7";
  case Family::M11: return "M11";
  }
  return "?";
}

/// Case-insensitive; accepts the names printed by family_name.
inline Family parse_family(std::string_view name)
{
  std::string upper;
  for (char c : name)
    upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (Family f : {Family::PSL2, Family::PGL2, Family::PSL3, Family::PGL3, Family::PSU3, Family::PGU3,
                   Family::ALT7, Family::M11})
    if (upper == family_name(f))
      return f;
  throw Error("unknown group family '" + std::string(name) + "'");
}

inline bool is_sporadic(Family f) { return f == Family::ALT7 || f == Family::M11; }

/// q = d^k with d prime.
struct PrimePower {
  std::uint64_t d = 0;
  unsigned k = 0;

  BigInt value() const { return ipow(BigInt(d), k); }

  static PrimePower of(std::uint64_t q)
  {
    auto f = factorize(q);
    if (q < 2 || f.size() != 1)
      throw Error(std::to_string(q) + " is not a prime power");
    return {f[0].first, f[0].second};
  }
};

struct FamilySpec {
  Family family = Family::PSL2;
  std::optional<PrimePower> q;
  std::uint64_t r = 1; // order of the cyclic field-automorphism factor

  /// Throws on an invalid combination: q missing or even for a classical
  /// family, the congruence q ≡ 3 (mod 4) for PSL3/PGL3 or q ≡ 1 (mod 4)
  /// for PSU3/PGU3 violated, or r not an odd divisor of k.
  void validate() const
  {
    if (is_sporadic(family)) {
      if (q)
        throw Error(std::string(family_name(family)) + " takes no field size");
      if (r != 1)
        throw Error(std::string(family_name(family)) + " takes no field-automorphism factor");
      return;
    }
    if (!q)
      throw Error(std::string(family_name(family)) + " requires a field size q");
    if (q->k == 0 || !is_prime(q->d))
      throw Error("field size is not a prime power");
    if (q->d == 2)
      throw Error("field size must be odd");
    BigInt qv = q->value();
    int mod4 = static_cast<int>(qv % 4);
    if ((family == Family::PSL3 || family == Family::PGL3) && mod4 != 3)
      throw Error(std::string(family_name(family)) + " requires q ≡ 3 (mod 4), got q = " + qv.str());
    if ((family == Family::PSU3 || family == Family::PGU3) && mod4 != 1)
      throw Error(std::string(family_name(family)) + " requires q ≡ 1 (mod 4), got q = " + qv.str());
    if (r == 0 || r % 2 == 0 || q->k % r != 0)
      throw Error("field-automorphism factor " + std::to_string(r) + " is not an odd divisor of k = " +
                  std::to_string(q->k));
  }

  static FamilySpec classical(Family f, std::uint64_t q, std::uint64_t r = 1)
  {
    FamilySpec s{f, PrimePower::of(q), r};
    s.validate();
    return s;
  }

  static FamilySpec sporadic(Family f)
  {
    FamilySpec s{f, std::nullopt, 1};
    if (!is_sporadic(f))
      throw Error(std::string(family_name(f)) + " is not sporadic");
    return s;
  }
};

inline BigInt gcd_small(const BigInt &a, unsigned b) { return boost::multiprecision::gcd(a, BigInt(b)); }

inline BigInt family_order(const FamilySpec &spec)
{
  spec.validate();
  switch (spec.family) {
  case Family::ALT7: return 2520;
  case Family::M11: return 7920;
  default: break;
  }
  const BigInt q = spec.q->value();
  const BigInt q2 = q * q, q3 = q2 * q;
  BigInt n;
  switch (spec.family) {
  case Family::PSL2: n = q * (q2 - 1) / gcd_small(q - 1, 2); break;
  case Family::PGL2: n = q * (q2 - 1); break;
  case Family::PSL3: n = q3 * (q2 - 1) * (q3 - 1) / gcd_small(q - 1, 3); break;
  case Family::PGL3: n = q3 * (q2 - 1) * (q3 - 1); break;
  case Family::PSU3: n = q3 * (q2 - 1) * (q3 + 1) / gcd_small(q + 1, 3); break;
  case Family::PGU3: n = q3 * (q2 - 1) * (q3 + 1); break;
  default: break;
  }
  return n * spec.r;
}

/// Order of the designated solvable subgroup of the simple group: the Borel
/// subgroup S_q⋊C_{(q-1)/2} for PSL2, the Sylow d-normalizer for PSU3 and
/// PSL3. The field-automorphism factor is not included.
inline BigInt solvable_witness_order(const FamilySpec &spec)
{
  spec.validate();
  if (is_sporadic(spec.family))
    throw Error("no solvable witness is defined for " + std::string(family_name(spec.family)));
  const BigInt q = spec.q->value();
  const BigInt q3 = q * q * q;
  switch (spec.family) {
  case Family::PSL2: return q * (q - 1) / 2;
  case Family::PSU3: return q3 * (q * q - 1) / gcd_small(q + 1, 3);
  case Family::PSL3: return q3 * (q - 1) * (q - 1) * (q + 1) / gcd_small(q - 1, 3);
  default:
    throw Error("no solvable witness is defined for " + std::string(family_name(spec.family)));
  }
}

/// Odd divisors of k where q = d^k.
inline std::set<std::uint64_t> field_aut_divisors(std::uint64_t q)
{
  PrimePower pp = PrimePower::of(q);
  std::set<std::uint64_t> out;
  for (std::uint64_t r = 1; r <= pp.k; r += 2)
    if (pp.k % r == 0)
      out.insert(r);
  return out;
}

} // namespace curvebound::classical
