#pragma once

// Polynomials over the prime field F_p, p < 2^31.

#include "curvebound/exact.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace curvebound::prank {

using Fp = std::uint32_t;

inline Fp fp_reduce(std::int64_t v, Fp p)
{
  std::int64_t r = v % static_cast<std::int64_t>(p);
  return static_cast<Fp>(r < 0 ? r + p : r);
}

inline Fp fp_mul(Fp a, Fp b, Fp p) { return static_cast<Fp>(std::uint64_t(a) * b % p); }

inline Fp fp_pow(Fp a, std::uint64_t e, Fp p)
{
  std::uint64_t r = 1 % p, b = a % p;
  for (; e; e >>= 1) {
    if (e & 1)
      r = r * b % p;
    b = b * b % p;
  }
  return static_cast<Fp>(r);
}

inline Fp fp_inv(Fp a, Fp p)
{
  if (a % p == 0)
    throw Error("inverse of zero in F_" + std::to_string(p));
  return fp_pow(a, p - 2, p);
}

/// Element of F_p[x]; coefficient i belongs to x^i. Always normalized: no
/// trailing zero coefficients, so the zero polynomial has no coefficients.
class FpPoly {
public:
  explicit FpPoly(Fp p) : p_(p)
  {
    if (p < 2 || p >= (1u << 31) || !is_prime(p))
      throw Error("FpPoly: modulus must be a prime below 2^31");
  }

  FpPoly(Fp p, std::vector<std::int64_t> coeffs) : FpPoly(p)
  {
    c_.reserve(coeffs.size());
    for (auto v : coeffs)
      c_.push_back(fp_reduce(v, p));
    trim();
  }

  static FpPoly monomial(Fp p, std::size_t degree, Fp coeff = 1)
  {
    FpPoly r(p);
    r.c_.assign(degree + 1, 0);
    r.c_[degree] = coeff % p;
    r.trim();
    return r;
  }

  static FpPoly constant(Fp p, Fp c) { return monomial(p, 0, c); }

  Fp prime() const { return p_; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  Fp lead() const { return c_.empty() ? 0 : c_.back(); }
  Fp operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  const std::vector<Fp> &coeffs() const { return c_; }

  Fp eval(Fp x) const
  {
    std::uint64_t r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      r = (r * x + *it) % p_;
    return static_cast<Fp>(r);
  }

  FpPoly operator+(const FpPoly &o) const
  {
    check(o);
    FpPoly r(p_);
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i)
      r.c_[i] = static_cast<Fp>((std::uint64_t((*this)[i]) + o[i]) % p_);
    r.trim();
    return r;
  }

  FpPoly operator-() const
  {
    FpPoly r = *this;
    for (auto &v : r.c_)
      v = v ? p_ - v : 0;
    return r;
  }

  FpPoly operator-(const FpPoly &o) const { return *this + (-o); }

  FpPoly operator*(const FpPoly &o) const
  {
    check(o);
    FpPoly r(p_);
    if (is_zero() || o.is_zero())
      return r;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i])
        continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j)
        r.c_[i + j] = static_cast<Fp>((r.c_[i + j] + std::uint64_t(c_[i]) * o.c_[j]) % p_);
    }
    r.trim();
    return r;
  }

  FpPoly scaled(Fp s) const
  {
    FpPoly r = *this;
    for (auto &v : r.c_)
      v = fp_mul(v, s, p_);
    r.trim();
    return r;
  }

  /// Quotient and remainder; throws on division by zero.
  std::pair<FpPoly, FpPoly> divmod(const FpPoly &d) const
  {
    check(d);
    if (d.is_zero())
      throw Error("polynomial division by zero");
    FpPoly q(p_), r = *this;
    if (r.degree() < d.degree())
      return {q, r};
    q.c_.assign(static_cast<std::size_t>(r.degree() - d.degree() + 1), 0);
    const Fp inv = fp_inv(d.lead(), p_);
    while (!r.is_zero() && r.degree() >= d.degree()) {
      const std::size_t shift = static_cast<std::size_t>(r.degree() - d.degree());
      const Fp f = fp_mul(r.lead(), inv, p_);
      q.c_[shift] = f;
      for (std::size_t j = 0; j < d.c_.size(); ++j)
        r.c_[shift + j] = static_cast<Fp>((r.c_[shift + j] + std::uint64_t(p_ - fp_mul(f, d.c_[j], p_))) % p_);
      r.trim();
    }
    q.trim();
    return {q, r};
  }

  FpPoly operator/(const FpPoly &d) const { return divmod(d).first; }
  FpPoly operator%(const FpPoly &d) const { return divmod(d).second; }

  FpPoly monic() const { return is_zero() ? *this : scaled(fp_inv(lead(), p_)); }

  FpPoly derivative() const
  {
    FpPoly r(p_);
    if (c_.size() <= 1)
      return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
      r.c_[i - 1] = fp_mul(c_[i], static_cast<Fp>(i % p_), p_);
    r.trim();
    return r;
  }

  FpPoly pow(std::uint64_t e) const
  {
    FpPoly r = constant(p_, 1), b = *this;
    for (; e; e >>= 1) {
      if (e & 1)
        r = r * b;
      if (e > 1)
        b = b * b;
    }
    return r;
  }

  /// f(x) -> f(u·x + c).
  FpPoly substitute_affine(Fp u, Fp c) const
  {
    FpPoly lin(p_, {static_cast<std::int64_t>(c), static_cast<std::int64_t>(u)});
    FpPoly r(p_);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
      r = r * lin + constant(p_, *it);
    return r;
  }

  bool operator==(const FpPoly &o) const { return p_ == o.p_ && c_ == o.c_; }

  std::string to_string() const
  {
    if (is_zero())
      return "0";
    std::string s;
    for (long i = degree(); i >= 0; --i) {
      Fp v = c_[static_cast<std::size_t>(i)];
      if (!v)
        continue;
      if (!s.empty())
        s += " + ";
      if (v != 1 || i == 0)
        s += std::to_string(v);
      if (i >= 1)
        s += (v != 1 ? "*x" : "x");
      if (i >= 2)
        s += "^" + std::to_string(i);
    }
    return s;
  }

private:
  void trim()
  {
    while (!c_.empty() && c_.back() == 0)
      c_.pop_back();
  }

  void check(const FpPoly &o) const
  {
    if (o.p_ != p_)
      throw Error("polynomials over different prime fields");
  }

  Fp p_;
  std::vector<Fp> c_;
};

inline FpPoly gcd(FpPoly a, FpPoly b)
{
  while (!b.is_zero()) {
    FpPoly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

namespace detail {

// g(x) with g(x)^p = f(x), for f whose exponents are all multiples of p.
inline FpPoly pth_root(const FpPoly &f)
{
  const Fp p = f.prime();
  std::vector<std::int64_t> c(static_cast<std::size_t>(f.degree()) / p + 1, 0);
  for (std::size_t i = 0; i < f.coeffs().size(); i += p)
    c[i / p] = f.coeffs()[i]; // a^p = a in F_p
  return FpPoly(p, c);
}

} // namespace detail

/// Squarefree decomposition f = lc · Π F_k^k with F_k monic, squarefree and
/// pairwise coprime. Returns the (F_k, k) with deg F_k > 0, ordered by k.
inline std::vector<std::pair<FpPoly, unsigned>> squarefree_decomposition(const FpPoly &f)
{
  if (f.is_zero())
    throw Error("squarefree decomposition of the zero polynomial");
  const Fp p = f.prime();
  std::vector<std::pair<FpPoly, unsigned>> out;
  auto add = [&](const FpPoly &g, unsigned k) {
    if (g.degree() <= 0)
      return;
    for (auto &e : out)
      if (e.second == k) {
        e.first = e.first * g;
        return;
      }
    out.emplace_back(g, k);
  };
  // Yun's algorithm adapted to characteristic p: the part of f whose
  // derivative vanishes is a p-th power and is handled recursively.
  auto rec = [&](auto &&self, const FpPoly &a, unsigned mult) -> void {
    if (a.degree() <= 0)
      return;
    FpPoly d = a.derivative();
    if (d.is_zero()) {
      self(self, detail::pth_root(a), mult * p);
      return;
    }
    FpPoly c = gcd(a, d);
    FpPoly w = a.monic() / c;
    unsigned i = 1;
    while (w.degree() > 0) {
      FpPoly y = gcd(w, c);
      add(w / y, i * mult);
      w = y;
      c = c / y;
      ++i;
    }
    if (c.degree() > 0)
      self(self, detail::pth_root(c), mult * p);
  };
  rec(rec, f.monic(), 1);
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) { return a.second < b.second; });
  for (auto &e : out)
    e.first = e.first.monic();
  return out;
}

inline bool is_squarefree(const FpPoly &f)
{
  if (f.degree() <= 0)
    return !f.is_zero();
  auto d = squarefree_decomposition(f);
  return d.size() == 1 && d[0].second == 1;
}

} // namespace curvebound::prank
