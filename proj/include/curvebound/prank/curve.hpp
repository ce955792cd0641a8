#pragma once

#include "curvebound/exact.hpp"
#include "curvebound/prank/fp_poly.hpp"
#include "curvebound/ramification/genus.hpp"

#include <cctype>
#include <cstdint>
#include <numeric>
#include <regex>
#include <string>
#include <string_view>
#include <vector>

namespace curvebound::prank {

/// The smooth projective model of y^m = f(x) over F_p.
struct CurveModel {
  unsigned m = 2;
  FpPoly f;

  CurveModel(unsigned m_, FpPoly f_) : m(m_), f(std::move(f_)) { validate(); }

  Fp prime() const { return f.prime(); }

  void validate() const
  {
    const Fp p = f.prime();
    if (p == 2)
      throw Error("curve model: p must be odd");
    if (m < 2)
      throw Error("curve model: cover degree m must be at least 2");
    if (m % p == 0)
      throw Error("curve model: p divides m");
    if (f.degree() < 1)
      throw Error("curve model: f must be non-constant");
    unsigned common = m;
    for (const auto &[factor, k] : squarefree_decomposition(f)) {
      if (k >= m)
        throw Error("curve model: f has a root of multiplicity " + std::to_string(k) + " >= m");
      common = std::gcd(common, k);
    }
    common = std::gcd(common, static_cast<unsigned>(f.degree()));
    if (common != 1)
      throw Error("curve model: y^m - f(x) is reducible (f is a power)");
  }

  std::string to_string() const { return "y^" + std::to_string(m) + " = " + f.to_string(); }
};

/// Branch exponents over the algebraic closure: one entry per root of f,
/// equal to its multiplicity.
inline std::vector<std::int64_t> branch_exponents(const CurveModel &c)
{
  std::vector<std::int64_t> out;
  for (const auto &[factor, k] : squarefree_decomposition(c.f))
    for (long i = 0; i < factor.degree(); ++i)
      out.push_back(k);
  return out;
}

inline std::uint64_t genus_of_model(const CurveModel &c)
{
  std::uint64_t g = ram::kummer_genus(c.m, branch_exponents(c), c.prime());
  if (g == 0)
    throw Error("curve model has genus 0");
  return g;
}

namespace detail {

// Integer polynomials for the parser; coefficient i belongs to x^i.
using ZPoly = std::vector<BigInt>;

inline constexpr std::size_t kMaxParsedDegree = 4096;

inline ZPoly zmul(const ZPoly &a, const ZPoly &b)
{
  if (a.empty() || b.empty())
    return {};
  if (a.size() + b.size() - 1 > kMaxParsedDegree + 1)
    throw Error("curve expression: degree too large");
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] += a[i] * b[j];
  return r;
}

inline ZPoly zadd(ZPoly a, const ZPoly &b, int sign)
{
  if (a.size() < b.size())
    a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i)
    a[i] += sign * b[i];
  return a;
}

class ExprParser {
public:
  explicit ExprParser(std::string_view s) : s_(s) {}

  ZPoly parse_all()
  {
    ZPoly r = expr();
    skip();
    if (pos_ != s_.size())
      fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return r;
  }

  std::uint64_t integer()
  {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (start == pos_)
      fail("expected an integer");
    if (pos_ - start > 9)
      fail("integer too large");
    return std::stoull(std::string(s_.substr(start, pos_ - start)));
  }

  bool eat(char c)
  {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string &msg) const
  {
    throw Error("curve expression: " + msg + " at position " + std::to_string(pos_ + 1));
  }

private:
  void skip()
  {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  ZPoly expr()
  {
    int sign = 1;
    if (eat('-'))
      sign = -1;
    else
      eat('+');
    ZPoly r = zadd({}, term(), sign);
    while (true) {
      if (eat('+'))
        r = zadd(r, term(), 1);
      else if (eat('-'))
        r = zadd(r, term(), -1);
      else
        return r;
    }
  }

  // Juxtaposition multiplies: "3x^2", "x(x-1)^2".
  ZPoly term()
  {
    ZPoly r = power();
    while (true) {
      if (eat('*')) {
        r = zmul(r, power());
        continue;
      }
      skip();
      if (pos_ < s_.size() && (s_[pos_] == '(' || s_[pos_] == 'x' || std::isdigit(static_cast<unsigned char>(s_[pos_]))))
        r = zmul(r, power());
      else
        return r;
    }
  }

  ZPoly power()
  {
    ZPoly base = primary();
    if (!eat('^'))
      return base;
    std::uint64_t e = integer();
    if (e > kMaxParsedDegree)
      fail("exponent too large");
    ZPoly r{1};
    for (std::uint64_t i = 0; i < e; ++i)
      r = zmul(r, base);
    return r;
  }

  ZPoly primary()
  {
    skip();
    if (eat('(')) {
      ZPoly r = expr();
      if (!eat(')'))
        fail("expected ')'");
      return r;
    }
    if (eat('x'))
      return {0, 1};
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      return {BigInt(std::string(s_.substr(start, pos_ - start)))};
    }
    if (pos_ >= s_.size())
      fail("unexpected end of input");
    fail("unexpected '" + std::string(1, s_[pos_]) + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

} // namespace detail

/// Parsed "y^m = <polynomial in x>" with integer coefficients.
struct CurveExpression {
  unsigned m = 0;
  std::vector<BigInt> coeffs; // coefficient i belongs to x^i

  FpPoly reduce(Fp p) const
  {
    std::vector<std::int64_t> c;
    c.reserve(coeffs.size());
    for (const auto &v : coeffs) {
      BigInt r = v % p;
      if (r < 0)
        r += p;
      c.push_back(r.convert_to<std::int64_t>());
    }
    return FpPoly(p, c);
  }
};

inline CurveExpression parse_curve_expression(std::string_view text)
{
  auto eq = text.find('=');
  if (eq == std::string_view::npos)
    throw Error("curve expression: expected 'y^m = f(x)'");
  static const std::regex lhs_re(R"(\s*y\s*(\^\s*([0-9]{1,6}))?\s*)");
  std::match_results<std::string_view::const_iterator> mres;
  std::string_view lhs = text.substr(0, eq);
  if (!std::regex_match(lhs.begin(), lhs.end(), mres, lhs_re))
    throw Error("curve expression: left-hand side must be y or y^m");
  CurveExpression out;
  out.m = mres[2].matched ? static_cast<unsigned>(std::stoul(mres[2].str())) : 1;
  detail::ExprParser rhs(text.substr(eq + 1));
  out.coeffs = rhs.parse_all();
  while (!out.coeffs.empty() && out.coeffs.back() == 0)
    out.coeffs.pop_back();
  return out;
}

inline CurveModel parse_curve(std::string_view text, Fp p)
{
  CurveExpression e = parse_curve_expression(text);
  return CurveModel(e.m, e.reduce(p));
}

} // namespace curvebound::prank
