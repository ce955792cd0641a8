#pragma once

#include "curvebound/bounds/power_bound.hpp"
#include "curvebound/exact.hpp"

#include <string>
#include <vector>

namespace curvebound::bounds {

enum class BoundLabel { Hurwitz, Nakajima, Solvable, Main };

inline const char *label_name(BoundLabel l)
{
  switch (l) {
  case BoundLabel::Hurwitz: return "hurwitz";
  case BoundLabel::Nakajima: return "nakajima";
  case BoundLabel::Solvable: return "solvable-3/2";
  case BoundLabel::Main: return "main-7/4";
  }
  return "?";
}

inline const std::vector<BoundLabel> &all_labels()
{
  static const std::vector<BoundLabel> labels{BoundLabel::Hurwitz, BoundLabel::Nakajima, BoundLabel::Solvable,
                                              BoundLabel::Main};
  return labels;
}

inline std::string label_bound(BoundLabel l)
{
  switch (l) {
  case BoundLabel::Hurwitz: return "|G| <= 84(g-1)";
  case BoundLabel::Nakajima: return "|G| <= 84g(g-1)";
  case BoundLabel::Solvable: return "|G| <= 34(g+1)^(3/2)";
  case BoundLabel::Main: return "|G| < 821.37g^(7/4)";
  }
  return "?";
}

/// Whether (|G|, g) satisfies one bound, exactly.
inline bool satisfies(BoundLabel l, const BigInt &order, const BigInt &g)
{
  if (g < 2)
    throw Error("classify: genus must be at least 2");
  if (order < 1)
    throw Error("classify: group order must be positive");
  switch (l) {
  case BoundLabel::Hurwitz: return order <= 84 * (g - 1);
  case BoundLabel::Nakajima: return order <= 84 * g * (g - 1);
  case BoundLabel::Solvable:
    return compare_value(order, PowerBound::monomial(34, 1, Rational(3, 2)), g) != std::strong_ordering::greater;
  case BoundLabel::Main: return holds_at(PowerBound::monomial(parse_decimal("821.37"), 0, Rational(7, 4)), order, g);
  }
  return false;
}

/// The bounds among Hurwitz, Nakajima, solvable-3/2 and main-7/4 that the
/// pair satisfies.
inline std::vector<BoundLabel> classify(const BigInt &order, const BigInt &g)
{
  std::vector<BoundLabel> out;
  for (BoundLabel l : all_labels())
    if (satisfies(l, order, g))
      out.push_back(l);
  return out;
}

} // namespace curvebound::bounds
