#pragma once

#include "curvebound/bounds/expr.hpp"
#include "curvebound/bounds/power_bound.hpp"
#include "curvebound/exact.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace curvebound::bounds {

enum class Verdict { Holds, Fails, HoldsOnRange };

inline const char *verdict_name(Verdict v)
{
  switch (v) {
  case Verdict::Holds: return "holds";
  case Verdict::Fails: return "fails";
  case Verdict::HoldsOnRange: return "holds-on-range";
  }
  return "?";
}

/// One evaluated point of a claim.
struct PointCheck {
  BigInt g;
  bool holds = false;
  bool undecided = false; // interval evaluation could not separate the sides
};

enum class TailStatus { Proved, LeadingTerm, Fails, Unknown };

inline const char *tail_name(TailStatus t)
{
  switch (t) {
  case TailStatus::Proved: return "proved";
  case TailStatus::LeadingTerm: return "leading-term";
  case TailStatus::Fails: return "fails";
  case TailStatus::Unknown: return "unknown";
  }
  return "?";
}

struct AuditReport {
  std::string claim_id;
  std::string statement;
  Verdict verdict = Verdict::Fails;
  std::optional<BigInt> witness; // smallest failing g at or above the range start
  std::string method;
  std::optional<BigInt> threshold;    // stated validity threshold, when the claim has one
  std::vector<PointCheck> threshold_checks; // at threshold - 1, threshold, threshold + 1
  BigInt range_lo = 0, range_hi = 0;  // integers checked one by one
  TailStatus tail = TailStatus::Unknown;
  std::string tail_note;
};

/// A predicate "claim holds at g" with an optional undecided outcome.
using PointPredicate = std::function<PointCheck(const BigInt &)>;

namespace detail {

inline PointCheck power_check(const PowerBound &lhs, Relation rel, const PowerBound &rhs, const BigInt &g)
{
  auto c = compare_at(lhs, rhs, g);
  bool ok = rel == Relation::Less ? c == std::strong_ordering::less : c != std::strong_ordering::greater;
  return {g, ok, false};
}

inline PointCheck expr_check(const Expr &lhs, Relation rel, const Expr &rhs, const BigInt &g)
{
  Decision d = decide(lhs, rel, rhs, g);
  return {g, d == Decision::True, d == Decision::Undecided};
}

// First failing g in [lo, hi], or nullopt.
inline std::optional<BigInt> scan(const PointPredicate &pred, const BigInt &lo, const BigInt &hi)
{
  for (BigInt g = lo; g <= hi; ++g)
    if (!pred(g).holds)
      return g;
  return std::nullopt;
}

// The claim is known to fail for all large g and to hold at `from`. Finds
// the first failure after `from` by doubling and then bisection; valid when
// the failing set above `from` is an up-set.
inline std::optional<BigInt> locate_tail_failure(const PointPredicate &pred, const BigInt &from)
{
  BigInt lo = from, step = 1;
  BigInt hi;
  const BigInt limit = BigInt(1) << 200;
  while (true) {
    hi = lo + step;
    if (hi > limit)
      return std::nullopt;
    if (!pred(hi).holds)
      break;
    lo = hi;
    step *= 2;
  }
  while (hi - lo > 1) {
    BigInt mid = (lo + hi) / 2;
    if (pred(mid).holds)
      lo = mid;
    else
      hi = mid;
  }
  return hi;
}

} // namespace detail

/// Tail analysis for lhs < rhs (or <=) between two power bounds beyond
/// `from`, where the claim is already known to hold at `from`. The log of
/// the ratio lhs/rhs has derivative e1/(g+s1) - e2/(g+s2), which is <= 0
/// exactly when (e1 - e2)g <= e2·s1 - e1·s2.
struct PowerTail {
  TailStatus status = TailStatus::Unknown;
  std::string note;
  std::optional<BigInt> monotone_from; // ratio nonincreasing for g >= this
};

inline PowerTail power_tail(const PowerBound &lhs, Relation rel, const PowerBound &rhs, const BigInt &from)
{
  const Rational e1 = lhs.exponent, e2 = rhs.exponent;
  const Rational A = e1 - e2;
  const Rational B = e2 * lhs.shift - e1 * rhs.shift;
  PowerTail t;
  // Leading constants compared exactly at exponent 0.
  PowerBound c1 = PowerBound::with_radical(lhs.coeff, lhs.radicand, lhs.root, 0, 0);
  PowerBound c2 = PowerBound::with_radical(rhs.coeff, rhs.radicand, rhs.root, 0, 0);
  auto const_cmp = compare_at(c1, c2, 0);
  if (A > 0) {
    t.status = TailStatus::Fails;
    t.note = "leading exponent " + to_string(e1) + " exceeds " + to_string(e2);
    return t;
  }
  if (A == 0) {
    if (B >= 0) {
      t.status = TailStatus::Proved;
      t.monotone_from = from;
      t.note = "equal exponents; ratio nonincreasing for all g";
      return t;
    }
    // Ratio increases towards c1/c2.
    bool ok = rel == Relation::Less ? const_cmp != std::strong_ordering::greater
                                    : const_cmp != std::strong_ordering::greater;
    t.status = ok ? TailStatus::Proved : TailStatus::Fails;
    t.note = ok ? "equal exponents; ratio increases to its limit c1/c2 <= 1"
                : "equal exponents; ratio increases to its limit c1/c2 > 1";
    return t;
  }
  // A < 0: nonincreasing once g >= B/A.
  BigInt start = ceil_of(B / A);
  if (start < from)
    start = from;
  t.monotone_from = start;
  t.status = TailStatus::Proved;
  t.note = "exponent " + to_string(e1) + " below " + to_string(e2) + "; ratio nonincreasing for g >= " + start.str();
  return t;
}

inline constexpr std::uint64_t kPowerWindow = 4096;
inline constexpr std::uint64_t kExprWindow = 256;
inline constexpr std::uint64_t kMonotoneBridgeCap = 1'000'000;

/// Verdict that lhs(g) REL rhs(g) for every integer in [g_min, g_max],
/// decided exactly per g, with a tail analysis beyond g_max. The verdict is
/// `holds` only when the tail is proved as well.
inline AuditReport dominates(const PowerBound &lhs, const PowerBound &rhs, const BigInt &g_min, const BigInt &g_max,
                             Relation rel = Relation::Less)
{
  if (g_min < 2)
    throw Error("dominates: g_min must be at least 2");
  if (g_min > g_max)
    throw Error("dominates: empty range");
  AuditReport r;
  r.statement = lhs.to_string() + " " + relation_symbol(rel) + " " + rhs.to_string();
  r.range_lo = g_min;
  r.range_hi = g_max;
  r.method = "exact power clearing per g";
  PointPredicate pred = [&](const BigInt &g) { return detail::power_check(lhs, rel, rhs, g); };
  if (auto w = detail::scan(pred, g_min, g_max)) {
    r.verdict = Verdict::Fails;
    r.witness = w;
    r.tail = TailStatus::Unknown;
    return r;
  }
  PowerTail t = power_tail(lhs, rel, rhs, g_max);
  r.tail = t.status;
  r.tail_note = t.note;
  if (t.status == TailStatus::Proved && t.monotone_from && *t.monotone_from > g_max) {
    if (*t.monotone_from - g_max > kMonotoneBridgeCap) {
      r.tail = TailStatus::LeadingTerm;
      r.tail_note += "; gap to the monotone region too large to bridge";
    } else if (auto w = detail::scan(pred, g_max + 1, *t.monotone_from)) {
      r.verdict = Verdict::HoldsOnRange;
      r.tail = TailStatus::Fails;
      r.witness = w;
      r.tail_note += "; fails at g = " + w->str();
      return r;
    } else {
      r.tail_note += "; bridged [" + BigInt(g_max + 1).str() + ", " + t.monotone_from->str() + "] per g";
    }
  }
  if (r.tail == TailStatus::Proved) {
    r.verdict = Verdict::Holds;
  } else {
    r.verdict = Verdict::HoldsOnRange;
    if (r.tail == TailStatus::Fails) {
      r.witness = detail::locate_tail_failure(pred, g_max);
      if (r.witness)
        r.tail_note += "; first failure at g = " + r.witness->str();
    }
  }
  return r;
}

} // namespace curvebound::bounds
