#pragma once

#include "curvebound/classical/sporadic.hpp"
#include "curvebound/exact.hpp"
#include "curvebound/ramification/genus.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace curvebound::ram {

enum class CaseTag { I, II, III };

inline const char *case_name(CaseTag c)
{
  switch (c) {
  case CaseTag::I: return "i";
  case CaseTag::II: return "ii";
  case CaseTag::III: return "iii";
  }
  return "?";
}

struct Candidate {
  RamSignature signature;
  WildStabilizer wild;
  std::uint64_t e2 = 0;
  BigInt g;
  bool passes_parity = false;         // g even and g >= 2
  bool passes_hurwitz_filter = false; // |G| > 84(g - 1)
  bool passes_e1_filter = false;      // E1 >= 2; for E1 = 1 one has |G| <= 24(g - 1)
  CaseTag case_tag = CaseTag::III;

  bool survives() const { return passes_parity && passes_hurwitz_filter && passes_e1_filter; }
};

/// Recomputes the flags of a candidate from its genus and |G|.
inline void annotate(Candidate &c, const BigInt &order_G)
{
  c.passes_parity = c.g >= 2 && c.g % 2 == 0;
  c.passes_hurwitz_filter = order_G > 84 * (c.g - 1);
  c.passes_e1_filter = c.wild.E1 >= 2;
}

/// Two-point signatures over a rational quotient: one wild point from the
/// catalog and one tame point. Keeps integral g >= 2, ordered by (e1, e2)
/// and then by q1.
inline std::vector<Candidate> enumerate_case_iii(const classical::GroupFacts &facts)
{
  facts.validate();
  std::vector<Candidate> out;
  for (const auto &w : facts.wild_catalog) {
    auto [e1, d1] = wild_different(w);
    for (std::uint64_t e2 : facts.tame_catalog) {
      Candidate c;
      c.signature.quotient_genus = 0;
      c.signature.points = {{e1, d1, 1}, {e2, e2 - 1, 1}};
      c.wild = w;
      c.e2 = e2;
      Rational g = hurwitz_genus(facts.order, c.signature);
      if (!is_integer(g) || g < 2)
        continue;
      c.g = numerator(g);
      annotate(c, facts.order);
      out.push_back(std::move(c));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const Candidate &a, const Candidate &b) {
    if (a.wild.e() != b.wild.e())
      return a.wild.e() < b.wild.e();
    if (a.e2 != b.e2)
      return a.e2 < b.e2;
    return a.wild.q1 < b.wild.q1;
  });
  return out;
}

/// Largest 2·E1·q1/(q1 - 2) over the wild catalog. In cases (i) and (ii)
/// |G| <= coefficient·(g - 1), so a value below 84 rules them out.
inline Rational case_i_ii_coefficient(const classical::GroupFacts &facts)
{
  if (facts.wild_catalog.empty())
    throw Error("case (i)/(ii) coefficient: empty wild catalog");
  Rational best = 0;
  for (const auto &w : facts.wild_catalog) {
    if (w.q1 <= 2)
      throw Error("case (i)/(ii) coefficient needs q1 > 2");
    Rational c(BigInt(2) * w.E1 * w.q1, BigInt(w.q1 - 2));
    best = std::max(best, c);
  }
  return best;
}

/// The catalog entry attaining case_i_ii_coefficient (first in catalog order).
inline WildStabilizer case_i_ii_argmax(const classical::GroupFacts &facts)
{
  Rational best = case_i_ii_coefficient(facts);
  for (const auto &w : facts.wild_catalog)
    if (Rational(BigInt(2) * w.E1 * w.q1, BigInt(w.q1 - 2)) == best)
      return w;
  throw Error("unreachable");
}

} // namespace curvebound::ram
