#pragma once

// Exact integer and rational arithmetic shared by every module.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace curvebound {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

inline BigInt numerator(const Rational &r) { return boost::multiprecision::numerator(r); }
inline BigInt denominator(const Rational &r) { return boost::multiprecision::denominator(r); }

inline Rational make_rational(const BigInt &num, const BigInt &den)
{
  if (den == 0)
    throw Error("rational with zero denominator");
  return Rational(num, den);
}

inline bool is_integer(const Rational &r) { return denominator(r) == 1; }

inline std::string to_string(const BigInt &v) { return v.str(); }

/// "a/b" or "a" when integral.
inline std::string to_string(const Rational &r)
{
  if (is_integer(r))
    return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

/// Parses a decimal literal such as "821.37", "-0.48" or "12" exactly.
inline Rational parse_decimal(std::string_view text)
{
  if (text.empty())
    throw Error("empty decimal literal");
  bool negative = false;
  std::size_t pos = 0;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  BigInt digits = 0;
  BigInt scale = 1;
  bool seen_point = false;
  bool seen_digit = false;
  for (; pos < text.size(); ++pos) {
    char c = text[pos];
    if (c == '.') {
      if (seen_point)
        throw Error("malformed decimal literal: " + std::string(text));
      seen_point = true;
      continue;
    }
    if (c < '0' || c > '9')
      throw Error("malformed decimal literal: " + std::string(text));
    digits = digits * 10 + (c - '0');
    if (seen_point)
      scale *= 10;
    seen_digit = true;
  }
  if (!seen_digit)
    throw Error("malformed decimal literal: " + std::string(text));
  Rational r(digits, scale);
  return negative ? Rational(-r) : r;
}

inline BigInt ipow(BigInt base, unsigned long exponent)
{
  BigInt result = 1;
  while (exponent) {
    if (exponent & 1u)
      result *= base;
    exponent >>= 1u;
    if (exponent)
      base *= base;
  }
  return result;
}

inline Rational rpow(const Rational &base, long exponent)
{
  if (exponent < 0) {
    if (base == 0)
      throw Error("zero raised to a negative power");
    return make_rational(ipow(denominator(base), static_cast<unsigned long>(-exponent)),
                         ipow(numerator(base), static_cast<unsigned long>(-exponent)));
  }
  return Rational(ipow(numerator(base), static_cast<unsigned long>(exponent)),
                  ipow(denominator(base), static_cast<unsigned long>(exponent)));
}

/// floor(x^(1/n)) for x >= 0.
inline BigInt iroot_floor(const BigInt &x, unsigned n)
{
  if (x < 0)
    throw Error("integer root of a negative number");
  if (n == 0)
    throw Error("zeroth root");
  if (x < 2 || n == 1)
    return x;
  // Newton iteration from an over-estimate: 2^ceil(bits/n).
  unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(x)) + 1u;
  BigInt r = BigInt(1) << ((bits + n - 1) / n);
  while (true) {
    BigInt next = ((n - 1) * r + x / ipow(r, n - 1)) / n;
    if (next >= r)
      break;
    r = next;
  }
  while (ipow(r, n) > x)
    --r;
  while (ipow(r + 1, n) <= x)
    ++r;
  return r;
}

inline BigInt floor_div(const BigInt &a, const BigInt &b)
{
  BigInt q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

inline BigInt floor_of(const Rational &r) { return floor_div(numerator(r), denominator(r)); }

inline BigInt ceil_of(const Rational &r) { return -floor_div(-numerator(r), denominator(r)); }

inline std::uint64_t to_u64(const BigInt &v)
{
  if (v < 0 || v > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw Error("integer does not fit in 64 bits: " + v.str());
  return v.convert_to<std::uint64_t>();
}

inline std::int64_t to_i64(const BigInt &v)
{
  if (v < BigInt(std::numeric_limits<std::int64_t>::min()) ||
      v > BigInt(std::numeric_limits<std::int64_t>::max()))
    throw Error("integer does not fit in 64 bits: " + v.str());
  return v.convert_to<std::int64_t>();
}

inline bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

/// Prime factorization by trial division, ascending primes with multiplicity.
inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n)
{
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    unsigned k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    if (k)
      out.emplace_back(d, k);
  }
  if (n > 1)
    out.emplace_back(n, 1u);
  return out;
}

/// Largest power of p dividing n.
inline BigInt p_part(BigInt n, std::uint64_t p)
{
  BigInt part = 1;
  if (n == 0)
    return 0;
  while (n % p == 0) {
    n /= p;
    part *= p;
  }
  return part;
}

} // namespace curvebound
