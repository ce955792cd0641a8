#pragma once

// Rigorous interval arithmetic over the rationals. Endpoints are rounded
// outward to dyadic numbers with a fixed number of significant bits so that
// sizes stay bounded; every operation returns an interval that contains the
// exact result.

#include "curvebound/exact.hpp"

#include <algorithm>
#include <string>

namespace curvebound::bounds {

namespace detail {

inline long bit_length(const BigInt &v) { return v == 0 ? 0 : static_cast<long>(boost::multiprecision::msb(abs(v))) + 1; }

inline Rational pow2(long e)
{
  if (e >= 0)
    return Rational(BigInt(1) << e);
  return Rational(BigInt(1), BigInt(1) << (-e));
}

// Dyadic m·2^e with |m| < 2^bits, rounded toward -inf (down) or +inf.
inline Rational round_dyadic(const Rational &r, unsigned bits, bool up)
{
  if (r == 0)
    return r;
  const BigInt num = numerator(r), den = denominator(r);
  long e = bit_length(num) - bit_length(den) - static_cast<long>(bits);
  // m = r / 2^e
  BigInt scaled_num = num, scaled_den = den;
  if (e >= 0)
    scaled_den <<= e;
  else
    scaled_num <<= -e;
  BigInt m = up ? -floor_div(-scaled_num, scaled_den) : floor_div(scaled_num, scaled_den);
  return Rational(m) * pow2(e);
}

} // namespace detail

class Interval {
public:
  Interval() = default;
  Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi))
  {
    if (lo_ > hi_)
      throw Error("interval with lo > hi");
  }
  static Interval point(const Rational &v) { return {v, v}; }

  const Rational &lo() const { return lo_; }
  const Rational &hi() const { return hi_; }
  bool contains_zero() const { return lo_ <= 0 && hi_ >= 0; }
  bool positive() const { return lo_ > 0; }

  Interval rounded(unsigned bits) const
  {
    return {detail::round_dyadic(lo_, bits, false), detail::round_dyadic(hi_, bits, true)};
  }

  double width_hint() const { return static_cast<double>(hi_ - lo_); }

private:
  Rational lo_ = 0;
  Rational hi_ = 0;
};

inline Interval operator+(const Interval &a, const Interval &b) { return {a.lo() + b.lo(), a.hi() + b.hi()}; }
inline Interval operator-(const Interval &a, const Interval &b) { return {a.lo() - b.hi(), a.hi() - b.lo()}; }
inline Interval operator-(const Interval &a) { return {-a.hi(), -a.lo()}; }

inline Interval operator*(const Interval &a, const Interval &b)
{
  Rational p[4] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

inline Interval operator/(const Interval &a, const Interval &b)
{
  if (b.contains_zero())
    throw Error("interval division by an interval containing zero");
  Interval inv{1 / b.hi(), 1 / b.lo()};
  return a * inv;
}

/// Enclosure of x^(1/n) for a rational x >= 0, with `bits` fractional
/// binary digits of absolute accuracy relative to the magnitude of x.
inline Interval nth_root(const Rational &x, unsigned n, unsigned bits)
{
  if (x < 0)
    throw Error("root of a negative number");
  if (x == 0)
    return Interval::point(0);
  if (n == 1)
    return Interval::point(x);
  // Pick a scale 2^F so that root(x)·2^F carries `bits` significant bits.
  long mag = detail::bit_length(numerator(x)) - detail::bit_length(denominator(x));
  long F = static_cast<long>(bits) - mag / static_cast<long>(n) + 2;
  // floor(x·2^{nF}) and ceil(x·2^{nF})
  Rational scaled = x * detail::pow2(F * static_cast<long>(n));
  BigInt lo_int = floor_of(scaled);
  BigInt hi_int = ceil_of(scaled);
  BigInt r_lo = lo_int < 0 ? BigInt(0) : iroot_floor(lo_int, n);
  BigInt r_hi = iroot_floor(hi_int, n);
  if (ipow(r_hi, n) < hi_int)
    ++r_hi;
  return {Rational(r_lo) * detail::pow2(-F), Rational(r_hi) * detail::pow2(-F)};
}

/// Enclosure of x^(a/b) for x in a positive interval (x >= 0 if a/b >= 0).
inline Interval rational_power(const Interval &x, const Rational &exponent, unsigned bits)
{
  const BigInt a = numerator(exponent);
  const BigInt b = denominator(exponent);
  if (b > 1'000'000 || abs(a) > 1'000'000)
    throw Error("exponent too large for interval evaluation");
  const long an = a.convert_to<long>();
  const unsigned bn = b.convert_to<unsigned>();
  if (an == 0)
    return Interval::point(1);
  if (x.lo() < 0) {
    if (bn != 1)
      throw Error("fractional power of an interval with negative part");
    // Integer power of a general interval: evaluate at the endpoints and 0.
    Rational l = rpow(x.lo(), an), h = rpow(x.hi(), an);
    Rational lo = std::min(l, h), hi = std::max(l, h);
    if (an > 0 && an % 2 == 0 && x.contains_zero())
      lo = 0;
    if (an < 0 && x.contains_zero())
      throw Error("negative power of an interval containing zero");
    return {lo, hi};
  }
  if (an < 0 && x.lo() == 0)
    throw Error("negative power of an interval touching zero");
  // Monotone on [lo, hi]: increasing for a > 0, decreasing for a < 0.
  auto enclose = [&](const Rational &v) { return nth_root(rpow(v, an), bn, bits); };
  Interval at_lo = enclose(x.lo());
  Interval at_hi = enclose(x.hi());
  if (an > 0)
    return {at_lo.lo(), at_hi.hi()};
  return {at_hi.lo(), at_lo.hi()};
}

namespace detail {

// exp(y) for 0 <= y <= 1/2 by the Taylor series; the tail after N terms is
// below 2·y^{N+1}/(N+1)!.
inline Interval exp_small(const Rational &y, unsigned bits)
{
  Rational term = 1, sum = 1;
  Rational eps = pow2(-static_cast<long>(bits) - 4);
  for (unsigned n = 1;; ++n) {
    term = term * y / n;
    term = round_dyadic(term, bits + 16, true); // upper bound on the true term
    sum += term;
    if (term < eps)
      break;
  }
  // Rounding terms upward keeps `sum` above the partial sum; the true tail is
  // at most 2·term, and the upward rounding adds at most the number of
  // terms times 2^{-(bits+16)} relative error, absorbed by subtracting eps.
  Rational lo = sum - term - eps;
  Rational hi = sum + 2 * term + eps;
  if (lo < 1)
    lo = 1;
  return {lo, hi};
}

inline Interval exp_point(const Rational &x, unsigned bits)
{
  if (x == 0)
    return Interval::point(1);
  bool negative = x < 0;
  Rational y = negative ? Rational(-x) : x;
  // Halve until y <= 1/2, then square back up.
  unsigned halvings = 0;
  while (y > Rational(1, 2)) {
    y /= 2;
    ++halvings;
  }
  Interval r = exp_small(y, bits + halvings + 8);
  for (unsigned i = 0; i < halvings; ++i)
    r = (r * r).rounded(bits + halvings + 8);
  if (negative)
    r = Interval::point(1) / r;
  return r.rounded(bits);
}

} // namespace detail

inline Interval exp(const Interval &x, unsigned bits)
{
  if (x.hi() > 100000)
    throw Error("exp argument too large for interval evaluation");
  Interval lo = detail::exp_point(x.lo(), bits);
  Interval hi = detail::exp_point(x.hi(), bits);
  return {lo.lo(), hi.hi()};
}

} // namespace curvebound::bounds
