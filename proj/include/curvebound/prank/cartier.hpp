#pragma once

#include "curvebound/prank/curve.hpp"
#include "curvebound/prank/fp_poly.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace curvebound::prank {

/// Basis differential x^(a-1)·D_b(x) dx / y^b, where D_b is the least
/// polynomial making the differential regular above the roots of f.
struct BasisDifferential {
  unsigned b = 1;
  unsigned a = 1;
  FpPoly D;

  std::string to_string() const
  {
    std::string s = a == 1 ? "" : (a == 2 ? "x*" : "x^" + std::to_string(a - 1) + "*");
    if (D.degree() > 0)
      s += "(" + D.to_string() + ")*";
    s += "dx/y";
    if (b != 1)
      s += "^" + std::to_string(b);
    return s;
  }
};

/// Square matrix over F_p; entries[i][j] is the coefficient of basis[i] in
/// the image of basis[j].
struct CartierMatrix {
  Fp p = 3;
  std::vector<std::vector<Fp>> entries;
  std::vector<BasisDifferential> basis;

  std::size_t size() const { return entries.size(); }
};

namespace detail {

// D_b = Π F_k^floor(bk/m) over the squarefree decomposition f = lc·Π F_k^k.
inline FpPoly regular_divisor(const std::vector<std::pair<FpPoly, unsigned>> &sqf, unsigned m, unsigned b, Fp p)
{
  FpPoly D = FpPoly::constant(p, 1);
  for (const auto &[F, k] : sqf)
    D = D * F.pow(b * k / m);
  return D;
}

inline long ceil_div(long a, long b) { return (a + b - 1) / b; }

} // namespace detail

/// Ordered basis of regular differentials of y^m = f(x): for b = 1..m-1 and
/// a = 1..N_b, with N_b = ceil(b·deg f / m) - 1 - deg D_b. Regularity above
/// a root of multiplicity k needs (x - root)^floor(bk/m) | h, and at infinity
/// deg h <= ceil(b·deg f / m) - 2.
inline std::vector<BasisDifferential> regular_basis(const CurveModel &c)
{
  const Fp p = c.prime();
  const auto sqf = squarefree_decomposition(c.f);
  const long d = c.f.degree();
  std::vector<BasisDifferential> out;
  for (unsigned b = 1; b < c.m; ++b) {
    FpPoly D = detail::regular_divisor(sqf, c.m, b, p);
    long n = detail::ceil_div(static_cast<long>(b) * d, c.m) - 1 - D.degree();
    for (long a = 1; a <= n; ++a)
      out.push_back({b, static_cast<unsigned>(a), D});
  }
  return out;
}

/// Matrix of the Cartier operator on regular_basis(c). Writing
/// y^-b = y^-(b'p)·f^((b'p - b)/m) with b'p ≡ b (mod m) gives
/// C(h dx / y^b) = C(h·f^N dx) / y^b', and C(x^n dx) = x^((n+1)/p - 1) dx
/// when p | n + 1 and 0 otherwise. For m = 2 the entry (i, j) is the
/// coefficient of x^(ip - j) in f^((p-1)/2).
inline CartierMatrix cartier_matrix(const CurveModel &c)
{
  const Fp p = c.prime();
  const unsigned m = c.m;
  const std::uint64_t g = genus_of_model(c);
  CartierMatrix M;
  M.p = p;
  M.basis = regular_basis(c);
  if (M.basis.size() != g)
    throw Error("Cartier matrix: regular basis has " + std::to_string(M.basis.size()) + " elements, genus is " +
                std::to_string(g));
  std::map<std::pair<unsigned, unsigned>, std::size_t> index; // (b, a) -> position
  for (std::size_t i = 0; i < M.basis.size(); ++i)
    index[{M.basis[i].b, M.basis[i].a}] = i;
  M.entries.assign(g, std::vector<Fp>(g, 0));
  std::map<std::uint64_t, FpPoly> f_powers;
  const unsigned p_inv = [&] {
    for (unsigned t = 1; t < m; ++t)
      if ((static_cast<std::uint64_t>(p) * t) % m == 1)
        return t;
    throw Error("Cartier matrix: p is not invertible mod m");
  }();
  for (std::size_t col = 0; col < M.basis.size(); ++col) {
    const auto &w = M.basis[col];
    const unsigned b2 = static_cast<unsigned>(static_cast<std::uint64_t>(w.b) * p_inv % m);
    const std::uint64_t num = static_cast<std::uint64_t>(b2) * p - w.b;
    if (b2 == 0 || num % m != 0)
      throw Error("Cartier matrix: exponent bookkeeping failed");
    const std::uint64_t N = num / m;
    auto it = f_powers.find(N);
    if (it == f_powers.end())
      it = f_powers.emplace(N, c.f.pow(N)).first;
    FpPoly h = w.D * FpPoly::monomial(p, w.a - 1) * it->second;
    std::vector<std::int64_t> image;
    for (std::size_t n = p - 1; n < h.coeffs().size(); n += p)
      image.push_back(h.coeffs()[n]); // x^n -> x^((n+1)/p - 1); a^(1/p) = a in F_p
    FpPoly img(p, image);
    if (img.is_zero())
      continue;
    auto target = std::find_if(M.basis.begin(), M.basis.end(), [&](const auto &e) { return e.b == b2; });
    if (target == M.basis.end())
      throw Error("Cartier matrix: image lies outside the regular basis (b = " + std::to_string(b2) + ")");
    auto [q, r] = img.divmod(target->D);
    if (!r.is_zero())
      throw Error("Cartier matrix: image is not divisible by D_b; basis rule failed");
    for (std::size_t k = 0; k < q.coeffs().size(); ++k) {
      if (!q.coeffs()[k])
        continue;
      auto pos = index.find({b2, static_cast<unsigned>(k + 1)});
      if (pos == index.end())
        throw Error("Cartier matrix: image exceeds the regular basis degree bound");
      M.entries[pos->second][col] = q.coeffs()[k];
    }
  }
  return M;
}

using FpMatrix = std::vector<std::vector<Fp>>;

/// The matrix (c_{ip-j}), 1 <= i, j <= ceil(deg f / 2) - 1, of coefficients
/// of f^((p-1)/2), taken straight from the equation y^2 = f(x) without
/// checking that it defines a smooth curve of that genus. For a valid model
/// it equals cartier_matrix(c).entries.
inline FpMatrix formal_cartier_manin(const FpPoly &f)
{
  const Fp p = f.prime();
  if (p == 2)
    throw Error("formal Cartier-Manin matrix needs odd p");
  const long g = detail::ceil_div(f.degree(), 2) - 1;
  if (g < 1)
    throw Error("formal Cartier-Manin matrix needs deg f >= 3");
  const FpPoly h = f.pow((p - 1) / 2);
  FpMatrix M(static_cast<std::size_t>(g), std::vector<Fp>(static_cast<std::size_t>(g), 0));
  for (long i = 1; i <= g; ++i)
    for (long j = 1; j <= g; ++j)
      M[i - 1][j - 1] = h[static_cast<std::size_t>(i * static_cast<long>(p) - j)];
  return M;
}

/// Genus of the normalization of y^m = f(x) when f need not be m-th-power
/// free: y -> y / Π F_k^floor(k/m) reduces every multiplicity mod m.
inline std::uint64_t normalization_genus(unsigned m, const FpPoly &f)
{
  std::vector<std::int64_t> exps;
  for (const auto &[factor, k] : squarefree_decomposition(f))
    if (k % m)
      for (long i = 0; i < factor.degree(); ++i)
        exps.push_back(k % m);
  if (exps.empty())
    throw Error("y^m = f(x) is reducible: f is an m-th power up to a constant");
  return ram::kummer_genus(m, exps, f.prime());
}

inline std::size_t matrix_rank(FpMatrix a, Fp p)
{
  std::size_t rank = 0;
  const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][col] == 0)
      ++piv;
    if (piv == rows)
      continue;
    std::swap(a[piv], a[rank]);
    const Fp inv = fp_inv(a[rank][col], p);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == 0)
        continue;
      const Fp f = fp_mul(a[r][col], inv, p);
      for (std::size_t k = col; k < cols; ++k)
        a[r][k] = static_cast<Fp>((a[r][k] + std::uint64_t(p - fp_mul(f, a[rank][k], p))) % p);
    }
    ++rank;
  }
  return rank;
}

inline FpMatrix matrix_mul(const FpMatrix &x, const FpMatrix &y, Fp p)
{
  const std::size_t n = x.size(), k = y.size(), m = k ? y[0].size() : 0;
  FpMatrix r(n, std::vector<Fp>(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (!x[i][l])
        continue;
      for (std::size_t j = 0; j < m; ++j)
        r[i][j] = static_cast<Fp>((r[i][j] + std::uint64_t(x[i][l]) * y[l][j]) % p);
    }
  return r;
}

/// Rank of M·M^(p)·...·M^(p^(factors-1)), where M^(p) raises each entry to
/// the p-th power. With factors = size of M this is the p-rank.
inline std::size_t stable_rank(const FpMatrix &M, Fp p, std::size_t factors)
{
  if (M.empty())
    return 0;
  FpMatrix prod = M, twist = M;
  for (std::size_t i = 1; i < factors; ++i) {
    for (auto &row : twist)
      for (auto &v : row)
        v = fp_pow(v, p, p);
    prod = matrix_mul(prod, twist, p);
  }
  return matrix_rank(prod, p);
}

inline std::size_t stable_rank(const CartierMatrix &M) { return stable_rank(M.entries, M.p, M.size()); }

inline std::size_t p_rank(const CurveModel &c) { return stable_rank(cartier_matrix(c)); }

inline bool is_ordinary(const CurveModel &c) { return p_rank(c) == genus_of_model(c); }

} // namespace curvebound::prank
