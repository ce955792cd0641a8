#include "curvebound/bounds.hpp"

#include <catch_amalgamated.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <map>
#include <random>

using namespace curvebound;
using namespace curvebound::bounds;

namespace {

using Float = boost::multiprecision::cpp_bin_float_100;

Float to_float(const Rational &r) { return Float(numerator(r)) / Float(denominator(r)); }

// Test-side oracle: 100-digit floating evaluation of an expression tree.
Float float_eval(const Expr &e, const Float &g)
{
  using K = Expr::Kind;
  switch (e.kind()) {
  case K::Const: return to_float(e.value());
  case K::Var: return g;
  case K::Add: return float_eval(e.left(), g) + float_eval(e.right(), g);
  case K::Sub: return float_eval(e.left(), g) - float_eval(e.right(), g);
  case K::Mul: return float_eval(e.left(), g) * float_eval(e.right(), g);
  case K::Div: return float_eval(e.left(), g) / float_eval(e.right(), g);
  case K::Pow: return boost::multiprecision::pow(float_eval(e.left(), g), to_float(e.exponent()));
  case K::Exp: return boost::multiprecision::exp(float_eval(e.left(), g));
  }
  return 0;
}

Float float_eval(const PowerBound &b, const Float &g)
{
  Float v = to_float(b.coeff);
  if (b.radicand != 1)
    v *= boost::multiprecision::pow(Float(b.radicand), Float(1) / b.root);
  if (b.exponent != 0)
    v *= boost::multiprecision::pow(g + b.shift, to_float(b.exponent));
  return v;
}

bool encloses(const Interval &i, const Float &v) { return to_float(i.lo()) <= v && v <= to_float(i.hi()); }

Float width(const Interval &i) { return to_float(i.hi() - i.lo()); }

} // namespace

TEST_CASE("decimal parsing is exact", "[exact]")
{
  CHECK(parse_decimal("821.37") == Rational(82137, 100));
  CHECK(parse_decimal("0.48") == Rational(12, 25));
  CHECK(parse_decimal("15378928") == 15378928);
  CHECK(parse_decimal("-1.5") == Rational(-3, 2));
  CHECK_THROWS_AS(parse_decimal("1.2.3"), Error);
  CHECK_THROWS_AS(parse_decimal(""), Error);
  CHECK_THROWS_AS(parse_decimal("1e5"), Error);
}

TEST_CASE("integer roots", "[exact]")
{
  std::mt19937_64 rng(3);
  for (int t = 0; t < 300; ++t) {
    BigInt x = BigInt(rng()) * rng() + rng() % 1000;
    unsigned n = 1 + rng() % 7;
    BigInt r = iroot_floor(x, n);
    CHECK(ipow(r, n) <= x);
    CHECK(ipow(r + 1, n) > x);
  }
  CHECK(iroot_floor(BigInt(1000), 3) == 10);
  CHECK(iroot_floor(BigInt(999), 3) == 9);
}

TEST_CASE("nth_root encloses the 100-digit value", "[interval]")
{
  std::mt19937_64 rng(5);
  for (int t = 0; t < 200; ++t) {
    Rational x(BigInt(1 + rng() % 1'000'000'000), BigInt(1 + rng() % 1000));
    unsigned n = 2 + rng() % 11;
    unsigned bits = 64 << (rng() % 3);
    Interval r = nth_root(x, n, bits);
    Float exact = boost::multiprecision::pow(to_float(x), Float(1) / n);
    CAPTURE(to_string(x), n, bits);
    CHECK(encloses(r, exact));
    CHECK(width(r) <= exact * boost::multiprecision::ldexp(Float(1), -static_cast<int>(bits) + 4));
  }
  CHECK(nth_root(Rational(0), 3, 64).hi() == 0);
  CHECK(nth_root(Rational(27), 3, 64).lo() <= 3);
  CHECK_THROWS_AS(nth_root(Rational(-1), 3, 64), Error);
}

TEST_CASE("exp encloses the 100-digit value", "[interval]")
{
  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    Rational x(BigInt(static_cast<long>(rng() % 4001) - 2000), BigInt(1 + rng() % 50));
    Interval r = exp(Interval::point(x), 128);
    Float exact = boost::multiprecision::exp(to_float(x));
    CAPTURE(to_string(x));
    CHECK(encloses(r, exact));
    CHECK(width(r) <= exact * boost::multiprecision::ldexp(Float(1), -100));
  }
  CHECK_THROWS_AS(exp(Interval::point(Rational(200000)), 64), Error);
}

TEST_CASE("expression enclosures contain the float oracle", "[interval][property]")
{
  const Expr g = Expr::g();
  const std::vector<Expr> exprs = {
      Expr::decimal("821.37") * pow(g, Rational(7, 4)),
      Expr(30) * (g - Expr(1)) * (pow(Expr(90) * (g - Expr(1)), Rational(3, 5)) + Expr(1)),
      exp(sqrt(Expr(60) * (g - Expr(1))) / Expr::decimal("1.6")),
      pow(g + Expr(1), Rational(-1, 3)) + root(Expr(90), 5) * g,
      (g * g - Expr(1)) / (g + Expr(2)),
  };
  for (const auto &e : exprs)
    for (long gv : {2L, 3L, 10L, 188L, 4097L, 123457L}) {
      Interval i = e.eval(BigInt(gv), 256);
      CAPTURE(e.to_string(), gv);
      CHECK(encloses(i, float_eval(e, Float(gv))));
    }
}

TEST_CASE("power-bound comparison agrees with the float oracle", "[power][property]")
{
  std::mt19937_64 rng(21);
  int decided = 0;
  for (int t = 0; t < 2000; ++t) {
    auto random_bound = [&] {
      Rational c(BigInt(1 + rng() % 100000), BigInt(1 + rng() % 100));
      Rational e(BigInt(rng() % 25), BigInt(1 + rng() % 12));
      std::int64_t shift = static_cast<std::int64_t>(rng() % 3) - 1;
      if (rng() % 4 == 0)
        return PowerBound::with_radical(c, BigInt(2 + rng() % 200), 1 + rng() % 5, shift, e);
      return PowerBound::monomial(c, shift, e);
    };
    PowerBound a = random_bound(), b = random_bound();
    BigInt g = 2 + rng() % 100000;
    Float fa = float_eval(a, Float(g)), fb = float_eval(b, Float(g));
    auto cmp = compare_at(a, b, g);
    if (fa == fb)
      continue;
    ++decided;
    CHECK((cmp == std::strong_ordering::less) == (fa < fb));
  }
  CHECK(decided > 1900);
}

TEST_CASE("power-bound comparison resolves exact ties", "[power]")
{
  // 84(g - 1) at g = 31 is exactly 2520
  CHECK(compare_value(2520, PowerBound::monomial(84, -1, 1), 31) == std::strong_ordering::equal);
  // 2·(g)^(1/2) against (4g)^(1/2): equal for every g
  auto lhs = PowerBound::monomial(2, 0, Rational(1, 2));
  auto rhs = PowerBound::with_radical(1, 4, 2, 0, Rational(1, 2));
  for (long g : {2L, 17L, 10007L})
    CHECK(compare_at(lhs, rhs, g) == std::strong_ordering::equal);
  CHECK_FALSE(holds_at(PowerBound::monomial(84, -1, 1), 2520, 31));
  CHECK(holds_at(PowerBound::monomial(84, -1, 1), 2519, 31));
  CHECK_THROWS_AS(PowerBound::monomial(0, 0, 1), Error);
  CHECK_THROWS_AS(PowerBound::with_radical(1, 0, 2, 0, 1), Error);
}

TEST_CASE("leading-term extraction", "[expr]")
{
  const Expr g = Expr::g();
  auto a = asymptotic(Expr(5) * pow(g - Expr(1), Rational(3, 2)) + Expr(7) * g);
  REQUIRE(a);
  CHECK_FALSE(a->exponential);
  CHECK(a->exponent == Rational(3, 2));
  auto b = asymptotic(exp(sqrt(g)));
  REQUIRE(b);
  CHECK(b->exponential);
}

TEST_CASE("Nakajima even threshold", "[threshold]")
{
  auto brute = [](const BigInt &n) {
    BigInt g = 2;
    while (84 * g * (g - 1) < n)
      g += 2;
    return g;
  };
  for (long n : {1L, 168L, 169L, 5616L, 126000L, 2000000L, 372000000L})
    CHECK(nakajima_even_threshold(BigInt(n)) == brute(BigInt(n)));
  CHECK(nakajima_even_threshold(BigInt(126000)) == 40);
  CHECK(nakajima_even_threshold(BigInt(5616)) == 10);
}

TEST_CASE("step registry structure", "[registry]")
{
  auto steps = all_steps();
  std::set<std::string> ids;
  for (const auto &s : steps) {
    CHECK(ids.insert(s.id).second);
    CHECK(std::find(chain_ids().begin(), chain_ids().end(), s.chain) != chain_ids().end());
    CHECK_FALSE(s.statement().empty());
  }
  std::size_t total = 0;
  for (const auto &c : chain_ids())
    total += chain_steps(c).size();
  CHECK(total == steps.size());
  CHECK(find_step("psl3.720").constant == "720");
  CHECK_THROWS_AS(find_step("nosuch"), Error);
  CHECK_THROWS_AS(chain_steps("nosuch"), Error);
}

TEST_CASE("registry audit verdicts", "[registry][audit]")
{
  // Frozen from an independent run; failing steps carry the smallest
  // failing genus as witness.
  const std::map<std::string, std::pair<Verdict, long>> expected_failures = {
      {"psl2.c2.66_76", {Verdict::Fails, 188}},
      {"psu3.242", {Verdict::Fails, 40}},
      {"psu3.595_21", {Verdict::Fails, 40}},
      {"psl3.720", {Verdict::Fails, 10}},
      {"psl2.c1.quarter", {Verdict::HoldsOnRange, 0}},
      {"psu3.tenth", {Verdict::HoldsOnRange, 0}},
      {"psl3.twelfth", {Verdict::HoldsOnRange, 0}},
  };
  for (const auto &id : chain_ids())
    for (const auto &r : audit_chain(id)) {
      CAPTURE(r.claim_id);
      auto it = expected_failures.find(r.claim_id);
      if (it == expected_failures.end()) {
        CHECK(r.verdict == Verdict::Holds);
        CHECK((r.tail == TailStatus::Proved || r.tail == TailStatus::LeadingTerm));
        continue;
      }
      CHECK(r.verdict == it->second.first);
      if (it->second.first == Verdict::Fails) {
        REQUIRE(r.witness);
        CHECK(*r.witness == it->second.second);
      }
    }
}

TEST_CASE("threshold steps are minimal", "[registry][audit]")
{
  for (const auto &s : all_steps()) {
    if (s.kind != Step::Kind::Threshold)
      continue;
    CAPTURE(s.id);
    REQUIRE(s.threshold);
    CHECK(nakajima_even_threshold(s.group_order) == *s.threshold);
    const BigInt prev = *s.threshold - 2;
    if (prev >= 2)
      CHECK(84 * prev * (prev - 1) < s.group_order);
    auto r = audit_step(s);
    REQUIRE(r.threshold_checks.size() == 3);
    CHECK(r.threshold_checks[1].holds);
    CHECK(r.threshold_checks[2].holds);
  }
}

TEST_CASE("classification of (order, genus) pairs", "[classify]")
{
  CHECK(classify(7920, 26) == std::vector<BoundLabel>{BoundLabel::Nakajima, BoundLabel::Main});
  CHECK_FALSE(satisfies(BoundLabel::Hurwitz, 7920, 26));
  CHECK(satisfies(BoundLabel::Hurwitz, 2520, 31));
  CHECK(satisfies(BoundLabel::Hurwitz, 84, 2));
  CHECK_FALSE(satisfies(BoundLabel::Hurwitz, 85, 2));
  CHECK(satisfies(BoundLabel::Solvable, 34 * 27, 8)); // 34·9^(3/2)
  CHECK_FALSE(satisfies(BoundLabel::Solvable, 34 * 27 + 1, 8));
  CHECK_THROWS_AS(classify(10, 1), Error);
  CHECK_THROWS_AS(classify(0, 5), Error);
}

TEST_CASE("main bound against the float oracle", "[classify][property]")
{
  std::mt19937_64 rng(1);
  for (int t = 0; t < 500; ++t) {
    BigInt g = 2 + rng() % 5000;
    BigInt order = 1 + rng() % 10'000'000;
    Float bound = Float("821.37") * boost::multiprecision::pow(Float(g), Float(7) / 4);
    if (boost::multiprecision::abs(Float(order) - bound) < 1e-40)
      continue;
    CHECK(satisfies(BoundLabel::Main, order, g) == (Float(order) < bound));
  }
}
