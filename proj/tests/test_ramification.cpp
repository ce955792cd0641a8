#include "curvebound/ramification.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace curvebound;
using namespace curvebound::ram;

namespace {

// Direct Riemann-Hurwitz: g = 1 + |G|(ḡ - 1) + (|G|/2)·Σ count·d/e, in
// plain rationals assembled term by term.
Rational direct_genus(std::uint64_t order, std::uint64_t gbar, const std::vector<BranchPoint> &pts)
{
  Rational g = 1 + Rational(BigInt(order)) * (Rational(BigInt(gbar)) - 1);
  for (const auto &pt : pts)
    g += Rational(BigInt(order) * pt.count * pt.d, BigInt(2 * pt.e));
  return g;
}

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return b ? gcd_u(b, a % b) : a; }

} // namespace

TEST_CASE("wild different exponents d = e + q1 - 2", "[different]")
{
  struct Row {
    std::uint64_t q1, E1, e, d;
  };
  for (auto r : std::vector<Row>{{7, 1, 7, 12},
                                 {7, 3, 21, 26},
                                 {9, 2, 18, 25},
                                 {9, 4, 36, 43},
                                 {11, 1, 11, 20},
                                 {11, 5, 55, 64},
                                 {9, 1, 9, 16},
                                 {3, 2, 6, 7},
                                 {9, 8, 72, 79},
                                 {3, 1, 3, 4}}) {
    auto [e, d] = wild_different({r.q1, r.E1});
    CHECK(e == r.e);
    CHECK(d == r.d);
  }
  CHECK_THROWS_AS(wild_different({9, 9}), Error);
  CHECK_THROWS_AS(wild_different({2, 1}), Error);
}

TEST_CASE("Hurwitz genus agrees with the direct formula", "[hurwitz][property]")
{
  std::mt19937_64 rng(11);
  for (int t = 0; t < 500; ++t) {
    std::uint64_t order = 1 + rng() % 100000;
    std::uint64_t gbar = rng() % 4;
    std::vector<BranchPoint> pts;
    for (int k = rng() % 5; k > 0; --k) {
      std::uint64_t e = 2 + rng() % 40;
      pts.push_back({e, e - 1 + rng() % 30, 1 + rng() % 3});
    }
    RamSignature sig{gbar, pts};
    CHECK(hurwitz_genus(BigInt(order), sig) == direct_genus(order, gbar, pts));
    CHECK(hurwitz_euler(BigInt(order), sig) == 2 * direct_genus(order, gbar, pts) - 2);
  }
  CHECK_THROWS_AS(hurwitz_genus(BigInt(0), {}), Error);
}

TEST_CASE("signature validation", "[hurwitz][errors]")
{
  CHECK_NOTHROW(RamSignature{0, {{4, 3, 1}, {5, 8, 1}}}.validate(5));
  CHECK_THROWS_AS((RamSignature{0, {{1, 0, 1}}}.validate()), Error);
  CHECK_THROWS_AS((RamSignature{0, {{5, 3, 1}}}.validate()), Error);
  CHECK_THROWS_AS((RamSignature{0, {{4, 4, 1}}}.validate(5)), Error);
  CHECK_THROWS_AS((RamSignature{0, {{5, 4, 1}}}.validate(5)), Error);
}

TEST_CASE("Deuring-Shafarevich instances", "[ds]")
{
  // γ - 1 = 9 with |S| = 5 and one fixed point gives γ̄ = 2
  CHECK(deuring_shafarevich(5, 2, {1}) == 10);
  // γ - 1 = 25 with |S| = 9 and two fixed points gives γ̄ = 2
  CHECK(deuring_shafarevich(9, 2, {1, 1}) == 26);
  CHECK(deuring_shafarevich(9, 2, {3}) == 16);
  CHECK(deuring_shafarevich(4, 0, {2, 2}) == 1);
  CHECK_THROWS_AS(deuring_shafarevich(6, 1, {}), Error);
  CHECK_THROWS_AS(deuring_shafarevich(9, 1, {2}), Error);
  CHECK_THROWS_AS(deuring_shafarevich(9, 1, {9}), Error);
}

TEST_CASE("Kummer genus", "[kummer]")
{
  CHECK(kummer_genus(4, {1, 2, 2}, 5) == 2);
  std::vector<std::int64_t> quartic(10, 2);
  quartic.push_back(1);
  CHECK(kummer_genus(4, quartic, 5) == 10);
  CHECK(kummer_genus(2, {1, 1, 1, 1, 1}, 3) == 2);
  CHECK(kummer_genus(2, {1, 1, 1, 1, 1, 1}, 3) == 2);
  CHECK(kummer_genus(3, {1, 1, 1, 1}, 5) == 3);
  CHECK_THROWS_AS(kummer_genus(4, {2, 2}, 5), Error);
  CHECK_THROWS_AS(kummer_genus(5, {1, 1, 1}, 5), Error);
  CHECK_THROWS_AS(kummer_genus(1, {1}, 5), Error);
}

TEST_CASE("Kummer genus of hyperelliptic models matches floor((n - 1)/2)", "[kummer][property]")
{
  for (std::size_t n = 3; n <= 30; ++n)
    CHECK(kummer_genus(2, std::vector<std::int64_t>(n, 1), 7) == (n - 1) / 2);
}

TEST_CASE("Kummer genus of superelliptic y^m = squarefree of degree n", "[kummer][property]")
{
  // 2g - 2 = -2m + n(m - 1) + (m - gcd(m, n))
  for (std::uint64_t m = 2; m <= 9; ++m)
    for (std::uint64_t n = 2; n <= 20; ++n) {
      auto expected = (n * (m - 1) + m - gcd_u(m, n) - 2 * m + 2) / 2;
      CHECK(kummer_genus(m, std::vector<std::int64_t>(n, 1), 11) == expected);
    }
}

TEST_CASE("branch data solver", "[solve]")
{
  using Solutions = std::vector<std::vector<std::int64_t>>;
  // 18 = 10(ḡ - 1) + 8s
  BranchSystem a{{"gbar", "s"}, {{{10, 8}, -10, 18}}, {}};
  CHECK(solve_branch_data(a) == Solutions{{2, 1}});
  // 10 = 3s + 2t alone admits (0,5) as well; the six Weierstrass points of
  // the genus-2 quotient force s + 2t = 6
  BranchSystem b{{"s", "t"}, {{{3, 2}, 0, 10}}, {}};
  CHECK(solve_branch_data(b) == Solutions{{0, 5}, {2, 2}});
  b.equations.push_back({{1, 2}, 0, 6});
  CHECK(solve_branch_data(b) == Solutions{{2, 2}});
  // 18 = 8(g̃ - 1) + 20 + 3 + Δ
  BranchSystem c{{"gtilde", "delta"}, {{{8, 1}, 15, 18}}, {}};
  CHECK(solve_branch_data(c) == Solutions{{0, 3}});
}

TEST_CASE("branch data solver bounds and errors", "[solve][errors]")
{
  BranchSystem none{{"x"}, {{{1}, 0, -1}}, {}};
  CHECK(solve_branch_data(none).empty());
  BranchSystem capped{{"x", "y"}, {{{1, -1}, 0, 0}}, {std::int64_t{3}, std::int64_t{5}}};
  CHECK(solve_branch_data(capped) == std::vector<std::vector<std::int64_t>>{{0, 0}, {1, 1}, {2, 2}, {3, 3}});
  BranchSystem unbounded{{"x", "y"}, {{{1, -1}, 0, 0}}, {}};
  CHECK_THROWS_AS(solve_branch_data(unbounded), Error);
  CHECK_THROWS_AS(solve_branch_data(BranchSystem{}), Error);
  BranchSystem bad{{"x"}, {{{1, 2}, 0, 0}}, {}};
  CHECK_THROWS_AS(solve_branch_data(bad), Error);
}

TEST_CASE("case (iii) candidates reproduce the direct formula", "[enumerate][property]")
{
  for (auto [f, p] : std::vector<std::pair<classical::Family, std::uint64_t>>{{classical::Family::ALT7, 3},
                                                                             {classical::Family::ALT7, 5},
                                                                             {classical::Family::ALT7, 7},
                                                                             {classical::Family::M11, 3},
                                                                             {classical::Family::M11, 5},
                                                                             {classical::Family::M11, 11}}) {
    auto facts = classical::sporadic_facts(f, p);
    auto cands = enumerate_case_iii(facts);
    REQUIRE_FALSE(cands.empty());
    for (const auto &c : cands) {
      auto [e1, d1] = wild_different(c.wild);
      Rational g = direct_genus(to_u64(facts.order), 0, {{e1, d1, 1}, {c.e2, c.e2 - 1, 1}});
      CHECK(g == Rational(c.g));
      CHECK(c.g >= 2);
      CHECK(c.passes_parity == (c.g % 2 == 0));
      CHECK(c.passes_hurwitz_filter == (facts.order > 84 * (c.g - 1)));
      CHECK_NOTHROW(c.signature.validate(p));
    }
  }
}

TEST_CASE("case (i)/(ii) coefficients", "[enumerate]")
{
  using classical::Family;
  CHECK(case_i_ii_coefficient(classical::sporadic_facts(Family::ALT7, 3)) == 12);
  CHECK(case_i_ii_coefficient(classical::sporadic_facts(Family::ALT7, 5)) == Rational(40, 3));
  CHECK(case_i_ii_coefficient(classical::sporadic_facts(Family::ALT7, 7)) == Rational(42, 5));
  CHECK(case_i_ii_coefficient(classical::sporadic_facts(Family::M11, 3)) == Rational(144, 7));
  CHECK(case_i_ii_coefficient(classical::sporadic_facts(Family::M11, 5)) == Rational(40, 3));
  CHECK(case_i_ii_coefficient(classical::sporadic_facts(Family::M11, 11)) == Rational(110, 9));
  CHECK(case_i_ii_argmax(classical::sporadic_facts(Family::M11, 3)) == WildStabilizer{9, 8});
}
