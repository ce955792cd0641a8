#pragma once

#include "curvebound/bounds/expr.hpp"
#include "curvebound/exact.hpp"

#include <compare>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>

namespace curvebound::bounds {

/// c · k^(1/r) · (g + s)^(n/d) with c > 0 rational, k >= 1 an integer
/// radicand and an exact rational exponent. The radical carries constants
/// such as √60 or 90^(1/5) exactly.
struct PowerBound {
  Rational coeff = 1;
  BigInt radicand = 1;
  unsigned root = 1;
  std::int64_t shift = 0;
  Rational exponent = 0;

  void validate() const
  {
    if (coeff <= 0)
      throw Error("power bound coefficient must be positive");
    if (radicand < 1 || root < 1)
      throw Error("power bound radical must be k^(1/r) with k, r >= 1");
  }

  static PowerBound monomial(const Rational &c, std::int64_t shift, const Rational &exponent)
  {
    PowerBound b{c, 1, 1, shift, exponent};
    b.validate();
    return b;
  }

  static PowerBound with_radical(const Rational &c, const BigInt &k, unsigned r, std::int64_t shift,
                                 const Rational &exponent)
  {
    PowerBound b{c, k, r, shift, exponent};
    b.validate();
    return b;
  }

  /// The same bound as an Expr, for the interval oracle and for printing.
  Expr as_expr() const
  {
    Expr base = Expr::g() + Expr(Rational(shift));
    Expr c = Expr(coeff);
    if (radicand != 1)
      c = c * pow(Expr(Rational(radicand)), Rational(1, root));
    if (exponent == 0)
      return c;
    return c * pow(base, exponent);
  }

  std::string to_string() const
  {
    std::string s = curvebound::to_string(coeff);
    if (radicand != 1)
      s += "*" + radicand.str() + "^(1/" + std::to_string(root) + ")";
    if (exponent != 0) {
      std::string base = shift == 0 ? "g" : (shift > 0 ? "(g+" + std::to_string(shift) + ")" : "(g" + std::to_string(shift) + ")");
      s += "*" + base + (exponent == 1 ? "" : "^(" + curvebound::to_string(exponent) + ")");
    }
    return s;
  }
};

namespace detail {

inline unsigned long lcm_ul(unsigned long a, unsigned long b) { return a / std::gcd(a, b) * b; }

// b(g)^D as an exact rational, for D a multiple of both denominators.
inline Rational power_bound_raised(const PowerBound &b, const BigInt &g, unsigned long D)
{
  const BigInt base = g + b.shift;
  if (base < 0)
    throw Error("power bound evaluated where g + s < 0");
  Rational v = rpow(b.coeff, static_cast<long>(D));
  v *= Rational(ipow(b.radicand, D / b.root));
  const BigInt e = numerator(b.exponent) * BigInt(D) / denominator(b.exponent);
  if (e != 0) {
    if (base == 0) {
      if (e < 0)
        throw Error("negative power of zero in power bound");
      return 0;
    }
    v *= rpow(Rational(base), e.convert_to<long>());
  }
  return v;
}

inline unsigned long common_power(const PowerBound &a, const PowerBound &b)
{
  unsigned long D = 1;
  for (unsigned long x : {static_cast<unsigned long>(a.root), static_cast<unsigned long>(b.root),
                          denominator(a.exponent).convert_to<unsigned long>(),
                          denominator(b.exponent).convert_to<unsigned long>()})
    D = lcm_ul(D, x);
  return D;
}

} // namespace detail

/// Exact three-way comparison of b1(g) and b2(g): both sides are positive,
/// so raising them to the least common denominator D preserves order.
inline std::strong_ordering compare_at(const PowerBound &b1, const PowerBound &b2, const BigInt &g)
{
  unsigned long D = detail::common_power(b1, b2);
  const Rational x = detail::power_bound_raised(b1, g, D), y = detail::power_bound_raised(b2, g, D);
  return x < y ? std::strong_ordering::less : (x > y ? std::strong_ordering::greater : std::strong_ordering::equal);
}

/// Exact comparison of an integer value against b(g).
inline std::strong_ordering compare_value(const BigInt &value, const PowerBound &b, const BigInt &g)
{
  return compare_at(PowerBound::monomial(Rational(value), 0, 0), b, g);
}

/// value < b(g), exactly.
inline bool holds_at(const PowerBound &b, const BigInt &value, const BigInt &g)
{
  return compare_value(value, b, g) == std::strong_ordering::less;
}

} // namespace curvebound::bounds
