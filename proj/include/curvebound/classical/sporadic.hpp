#pragma once

#include "curvebound/classical/family.hpp"
#include "curvebound/exact.hpp"
#include "curvebound/permgroup.hpp"
#include "curvebound/ramification/wild_stabilizer.hpp"

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <set>
#include <string>
#include <vector>

#ifndef CURVEBOUND_DATA_DIR
#define CURVEBOUND_DATA_DIR "data"
#endif

namespace curvebound::classical {

/// Enumeration-ready summary of a group at a working prime p.
struct GroupFacts {
  std::string name;
  std::uint64_t p = 0;
  BigInt order;
  std::vector<WildStabilizer> wild_catalog; // sorted by (q1, E1)
  std::set<std::uint64_t> tame_catalog;

  /// Throws if a wild entry violates E1 <= q1 - 1 or p | E1, or a tame
  /// entry is divisible by p or below 2.
  void validate() const
  {
    for (const auto &w : wild_catalog)
      w.validate(p);
    for (std::uint64_t e : tame_catalog)
      if (e < 2 || e % p == 0)
        throw Error("tame catalog entry " + std::to_string(e) + " is invalid at p = " + std::to_string(p));
  }
};

/// Directory holding the shipped generator files; CURVEBOUND_DATA overrides
/// the compiled-in location.
inline std::filesystem::path data_directory()
{
  if (const char *env = std::getenv("CURVEBOUND_DATA"); env && *env)
    return env;
  return CURVEBOUND_DATA_DIR;
}

inline std::string default_generator_file(Family f)
{
  switch (f) {
  case Family::ALT7: return (data_directory() / "alt7.gens").string();
  case Family::M11: return (data_directory() / "m11.gens").string();
  default: throw Error(std::string(family_name(f)) + " has no generator file");
  }
}

inline perm::PermGroup load_sporadic(Family f, const std::string &path = {})
{
  return perm::group_from_file(perm::load_generator_file(path.empty() ? default_generator_file(f) : path));
}

inline std::set<std::uint64_t> supported_primes(Family f)
{
  switch (f) {
  case Family::ALT7: return {3, 5, 7};
  case Family::M11: return {3, 5, 11};
  default: return {};
  }
}

/// Facts recomputed from the permutation group G: the wild catalog lists
/// every Q⋊C with Q a nontrivial p-subgroup and C cyclic of p'-order in
/// N_G(Q), keeping E1 <= q1 - 1; the tame catalog lists the element orders
/// prime to p, excluding 1.
inline GroupFacts facts_from_group(const std::string &name, const perm::PermGroup &G, std::uint64_t p)
{
  GroupFacts facts;
  facts.name = name;
  facts.p = p;
  facts.order = G.order();
  for (const auto &pair : perm::p_cyclic_pairs(G, p))
    if (pair.e <= pair.q - 1)
      facts.wild_catalog.push_back({pair.q, pair.e});
  for (std::uint64_t o : perm::element_order_set(G))
    if (o >= 2 && o % p != 0)
      facts.tame_catalog.insert(o);
  facts.validate();
  return facts;
}

inline GroupFacts sporadic_facts(Family f, std::uint64_t p, const std::string &generator_file = {})
{
  if (!is_sporadic(f))
    throw Error(std::string(family_name(f)) + " is not a sporadic entry");
  if (!supported_primes(f).count(p))
    throw Error("unsupported prime " + std::to_string(p) + " for " + std::string(family_name(f)));
  perm::PermGroup G = load_sporadic(f, generator_file);
  BigInt expected = family_order(FamilySpec::sporadic(f));
  if (G.order() != expected)
    throw Error("generator file yields a group of order " + G.order().str() + ", expected " + expected.str());
  return facts_from_group(std::string(family_name(f)), G, p);
}

} // namespace curvebound::classical
