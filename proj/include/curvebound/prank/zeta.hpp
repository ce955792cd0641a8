#pragma once

// Independent p-rank oracle: count points of the smooth model over F_p,
// ..., F_{p^g}, recover the L-polynomial and read off its degree mod p.

#include "curvebound/exact.hpp"
#include "curvebound/prank/curve.hpp"
#include "curvebound/prank/fp_poly.hpp"

#include <cstdint>
#include <numeric>
#include <vector>

namespace curvebound::prank {

inline constexpr std::uint64_t kZetaMaxGenus = 3;
inline constexpr std::uint64_t kZetaMaxFieldSize = 10'000'000;

namespace detail {

inline FpPoly powmod(FpPoly base, std::uint64_t e, const FpPoly &mod)
{
  FpPoly r = FpPoly::constant(mod.prime(), 1);
  base = base % mod;
  for (; e; e >>= 1) {
    if (e & 1)
      r = (r * base) % mod;
    if (e > 1)
      base = (base * base) % mod;
  }
  return r;
}

// x^(p^k) mod h by k Frobenius steps.
inline FpPoly frobenius_power(const FpPoly &h, unsigned k)
{
  FpPoly x = FpPoly::monomial(h.prime(), 1);
  FpPoly r = x % h;
  for (unsigned i = 0; i < k; ++i)
    r = powmod(r, h.prime(), h);
  return r;
}

} // namespace detail

/// Rabin's test: h of degree k is irreducible iff x^(p^k) ≡ x mod h and
/// gcd(x^(p^(k/r)) - x, h) = 1 for every prime r dividing k.
inline bool is_irreducible(const FpPoly &h)
{
  const long k = h.degree();
  if (k <= 0)
    return false;
  if (k == 1)
    return true;
  const FpPoly x = FpPoly::monomial(h.prime(), 1);
  if (detail::frobenius_power(h, static_cast<unsigned>(k)) != x % h)
    return false;
  for (const auto &[r, e] : factorize(static_cast<std::uint64_t>(k))) {
    FpPoly t = detail::frobenius_power(h, static_cast<unsigned>(k / static_cast<long>(r))) - x;
    if (gcd(h, t).degree() != 0)
      return false;
  }
  return true;
}

/// The first monic irreducible x^k + c_{k-1}x^{k-1} + ... + c_0 in the
/// lexicographic order of (c_{k-1}, ..., c_0).
inline FpPoly first_irreducible(Fp p, unsigned k)
{
  if (k == 0)
    throw Error("field extension degree must be positive");
  const std::uint64_t count = static_cast<std::uint64_t>(ipow(BigInt(p), k));
  for (std::uint64_t n = 0; n < count; ++n) {
    std::vector<std::int64_t> c(k + 1, 0);
    std::uint64_t t = n;
    for (unsigned i = 0; i < k; ++i) {
      c[i] = static_cast<std::int64_t>(t % p);
      t /= p;
    }
    c[k] = 1;
    FpPoly h(p, c);
    if (is_irreducible(h))
      return h;
  }
  throw Error("no irreducible polynomial found");
}

/// F_{p^k} = F_p[t]/(h) with h = first_irreducible(p, k). Elements are
/// encoded as integers whose base-p digits are the coefficients of
/// 1, t, ..., t^{k-1}; multiplication goes through discrete-log tables.
class FiniteField {
public:
  using Elem = std::uint32_t;

  FiniteField(Fp p, unsigned k) : p_(p), k_(k), modulus_(first_irreducible(p, k))
  {
    BigInt q = ipow(BigInt(p), k);
    if (q > kZetaMaxFieldSize)
      throw Error("finite field too large for the point-count oracle");
    q_ = static_cast<std::uint32_t>(q);
    build_tables();
  }

  Fp characteristic() const { return p_; }
  unsigned degree() const { return k_; }
  std::uint32_t size() const { return q_; }
  const FpPoly &modulus() const { return modulus_; }

  /// The prime-field element a.
  Elem embed(Fp a) const { return a % p_; }

  Elem add(Elem a, Elem b) const
  {
    Elem r = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
      r += ((a % p_ + b % p_) % p_) * scale;
      a /= p_;
      b /= p_;
      scale *= p_;
    }
    return r;
  }

  Elem mul(Elem a, Elem b) const
  {
    if (!a || !b)
      return 0;
    std::uint64_t e = std::uint64_t(log_[a]) + log_[b];
    if (e >= q_ - 1)
      e -= q_ - 1;
    return exp_[e];
  }

  /// Number of w in F_q with w^n = c, for c != 0.
  std::uint32_t count_roots(Elem c, std::uint64_t n) const
  {
    if (c == 0)
      throw Error("count_roots: c must be non-zero");
    const std::uint64_t d = std::gcd(n, static_cast<std::uint64_t>(q_ - 1));
    return log_[c] % d == 0 ? static_cast<std::uint32_t>(d) : 0;
  }

  /// Value of a polynomial over F_p at x.
  Elem eval(const FpPoly &f, Elem x) const
  {
    Elem r = 0;
    for (auto it = f.coeffs().rbegin(); it != f.coeffs().rend(); ++it)
      r = add(mul(r, x), embed(*it));
    return r;
  }

private:
  // Product via polynomial arithmetic, used to build the tables.
  Elem slow_mul(Elem a, Elem b) const
  {
    auto to_poly = [&](Elem v) {
      std::vector<std::int64_t> c(k_);
      for (unsigned i = 0; i < k_; ++i) {
        c[i] = v % p_;
        v /= p_;
      }
      return FpPoly(p_, c);
    };
    FpPoly r = (to_poly(a) * to_poly(b)) % modulus_;
    Elem out = 0, scale = 1;
    for (unsigned i = 0; i < k_; ++i) {
      out += r[i] * scale;
      scale *= p_;
    }
    return out;
  }

  void build_tables()
  {
    const std::uint64_t order = q_ - 1;
    auto primes = factorize(order);
    auto pow_slow = [&](Elem a, std::uint64_t e) {
      Elem r = 1, b = a;
      for (; e; e >>= 1) {
        if (e & 1)
          r = slow_mul(r, b);
        b = slow_mul(b, b);
      }
      return r;
    };
    Elem gen = 0;
    for (Elem a = 1; a < q_ && !gen; ++a) {
      bool primitive = true;
      for (const auto &[r, e] : primes)
        if (pow_slow(a, order / r) == 1) {
          primitive = false;
          break;
        }
      if (primitive)
        gen = a;
    }
    if (!gen)
      throw Error("no primitive element found");
    exp_.assign(order, 0);
    log_.assign(q_, 0);
    Elem v = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
      exp_[i] = v;
      log_[v] = static_cast<std::uint32_t>(i);
      v = slow_mul(v, gen);
    }
  }

  Fp p_;
  unsigned k_;
  FpPoly modulus_;
  std::uint32_t q_ = 0;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
};

namespace detail {

inline std::uint64_t binomial_mod(std::uint64_t n, std::uint64_t k, Fp p)
{
  if (k > n)
    return 0;
  BigInt r = 1;
  for (std::uint64_t i = 0; i < k; ++i)
    r = r * (n - i) / (i + 1);
  return static_cast<std::uint64_t>(r % p);
}

// The k-th Hasse derivative of f as a polynomial over F_p.
inline FpPoly hasse_derivative(const FpPoly &f, unsigned k)
{
  std::vector<std::int64_t> c;
  for (std::size_t n = k; n < f.coeffs().size(); ++n)
    c.push_back(static_cast<std::int64_t>(binomial_mod(n, k, f.prime()) * f.coeffs()[n] % f.prime()));
  return FpPoly(f.prime(), c);
}

} // namespace detail

/// Number of points of the smooth projective model of y^m = f(x) over
/// F_{p^k}. Above x = a with f(a) != 0 there is one point per m-th root of
/// f(a); above a root of multiplicity λ, and above infinity (λ = deg f),
/// the points correspond to the solutions of w^gcd(m, λ) = c, c the leading
/// coefficient of f at that place.
inline std::uint64_t count_points(const CurveModel &c, unsigned k)
{
  const FiniteField F(c.prime(), k);
  const auto sqf = squarefree_decomposition(c.f);
  std::vector<FpPoly> hasse;
  for (const auto &[factor, lambda] : sqf)
    hasse.push_back(detail::hasse_derivative(c.f, lambda));
  std::uint64_t total = 0;
  for (FiniteField::Elem x = 0; x < F.size(); ++x) {
    FiniteField::Elem v = F.eval(c.f, x);
    if (v != 0) {
      total += F.count_roots(v, c.m);
      continue;
    }
    bool placed = false;
    for (std::size_t i = 0; i < sqf.size(); ++i) {
      if (F.eval(sqf[i].first, x) != 0)
        continue;
      const FiniteField::Elem lead = F.eval(hasse[i], x);
      total += F.count_roots(lead, std::gcd<std::uint64_t>(c.m, sqf[i].second));
      placed = true;
      break;
    }
    if (!placed)
      throw Error("count_points: root not found in the squarefree decomposition");
  }
  total += F.count_roots(F.embed(c.f.lead()), std::gcd<std::uint64_t>(c.m, static_cast<std::uint64_t>(c.f.degree())));
  return total;
}

/// Coefficients a_0..a_2g of L(t) = Π (1 - α_i t) from the counts over
/// F_p..F_{p^g}, by Newton's identities; the functional equation
/// a_{2g-i} = p^{g-i}·a_i supplies the upper half.
inline std::vector<BigInt> l_polynomial(const CurveModel &c)
{
  const std::uint64_t g = genus_of_model(c);
  const Fp p = c.prime();
  if (g > kZetaMaxGenus)
    throw Error("zeta oracle supports genus <= " + std::to_string(kZetaMaxGenus));
  if (ipow(BigInt(p), static_cast<unsigned>(g)) > kZetaMaxFieldSize)
    throw Error("zeta oracle: p^g exceeds " + std::to_string(kZetaMaxFieldSize));
  std::vector<BigInt> S(g + 1, 0);
  for (unsigned k = 1; k <= g; ++k)
    S[k] = ipow(BigInt(p), k) + 1 - BigInt(count_points(c, k));
  std::vector<BigInt> a(2 * g + 1, 0);
  a[0] = 1;
  for (std::uint64_t i = 1; i <= g; ++i) {
    BigInt acc = 0;
    for (std::uint64_t j = 1; j <= i; ++j)
      acc += S[j] * a[i - j];
    if (acc % i != 0)
      throw Error("zeta oracle: Newton identity produced a non-integer coefficient");
    a[i] = -acc / i;
  }
  for (std::uint64_t i = 0; i < g; ++i)
    a[2 * g - i] = ipow(BigInt(p), static_cast<unsigned>(g - i)) * a[i];
  return a;
}

/// The p-rank as the degree of L(t) mod p.
inline std::size_t zeta_prank_oracle(const CurveModel &c)
{
  auto a = l_polynomial(c);
  const Fp p = c.prime();
  std::size_t deg = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] % p != 0)
      deg = i;
  return deg;
}

} // namespace curvebound::prank
