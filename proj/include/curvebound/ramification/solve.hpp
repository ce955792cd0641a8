#pragma once

#include "curvebound/exact.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace curvebound::ram {

/// Σ coeffs[i]·x_i + constant = rhs over the unknowns of a BranchSystem.
struct LinearEquation {
  std::vector<std::int64_t> coeffs;
  std::int64_t constant = 0;
  std::int64_t rhs = 0;
};

/// Unknowns range over the non-negative integers, optionally capped.
struct BranchSystem {
  std::vector<std::string> unknowns;
  std::vector<LinearEquation> equations;
  std::vector<std::optional<std::int64_t>> upper_bounds; // empty or one per unknown
};

inline constexpr std::uint64_t kBranchSearchCap = 10'000'000;

namespace detail {

// An unknown is bounded by an equation whose coefficients all share one sign
// (zero allowed) and in which its own coefficient is non-zero.
inline std::optional<std::int64_t> implied_bound(const LinearEquation &eq, std::size_t i)
{
  std::int64_t target = eq.rhs - eq.constant;
  bool all_nonneg = true, all_nonpos = true;
  for (auto c : eq.coeffs) {
    all_nonneg = all_nonneg && c >= 0;
    all_nonpos = all_nonpos && c <= 0;
  }
  std::int64_t a = eq.coeffs[i];
  if (a == 0)
    return std::nullopt;
  if (all_nonneg)
    return target < 0 ? std::int64_t{-1} : target / a;
  if (all_nonpos)
    return target > 0 ? std::int64_t{-1} : target / a;
  return std::nullopt;
}

} // namespace detail

/// Every non-negative integer solution, in lexicographic order. Throws if
/// some unknown is neither capped nor bounded by a same-sign equation.
inline std::vector<std::vector<std::int64_t>> solve_branch_data(const BranchSystem &sys)
{
  const std::size_t n = sys.unknowns.size();
  if (n == 0)
    throw Error("branch system has no unknowns");
  if (!sys.upper_bounds.empty() && sys.upper_bounds.size() != n)
    throw Error("branch system: one upper bound per unknown expected");
  for (const auto &eq : sys.equations)
    if (eq.coeffs.size() != n)
      throw Error("branch system: equation arity differs from the number of unknowns");

  std::vector<std::int64_t> hi(n);
  std::uint64_t box = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::int64_t> b;
    if (!sys.upper_bounds.empty())
      b = sys.upper_bounds[i];
    for (const auto &eq : sys.equations)
      if (auto ib = detail::implied_bound(eq, i))
        b = b ? std::min(*b, *ib) : *ib;
    if (!b)
      throw Error("branch system is unbounded in '" + sys.unknowns[i] + "'");
    if (*b < 0)
      return {};
    hi[i] = *b;
    box *= static_cast<std::uint64_t>(*b + 1);
    if (box > kBranchSearchCap)
      throw Error("branch system search space exceeds " + std::to_string(kBranchSearchCap));
  }

  std::vector<std::vector<std::int64_t>> out;
  std::vector<std::int64_t> x(n, 0);
  while (true) {
    bool ok = true;
    for (const auto &eq : sys.equations) {
      std::int64_t lhs = eq.constant;
      for (std::size_t i = 0; i < n; ++i)
        lhs += eq.coeffs[i] * x[i];
      if (lhs != eq.rhs) {
        ok = false;
        break;
      }
    }
    if (ok)
      out.push_back(x);
    std::size_t k = n;
    while (k-- > 0) {
      if (x[k] < hi[k]) {
        ++x[k];
        break;
      }
      x[k] = 0;
    }
    if (k == static_cast<std::size_t>(-1))
      break;
  }
  return out;
}

} // namespace curvebound::ram
