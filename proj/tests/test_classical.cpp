#include "curvebound/classical.hpp"
#include "curvebound/ramification.hpp"

#include <catch_amalgamated.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>

using namespace curvebound;
using namespace curvebound::classical;

namespace {

// Test-side oracle: count n×n matrices over F_q (q prime) by determinant.
struct MatrixCounts {
  std::uint64_t gl = 0, sl = 0;
};

long det_mod(const std::vector<long> &a, int n, long q)
{
  if (n == 2)
    return ((a[0] * a[3] - a[1] * a[2]) % q + q) % q;
  long d = a[0] * (a[4] * a[8] - a[5] * a[7]) - a[1] * (a[3] * a[8] - a[5] * a[6]) + a[2] * (a[3] * a[7] - a[4] * a[6]);
  return (d % q + q) % q;
}

MatrixCounts count_matrices(int n, long q)
{
  MatrixCounts c;
  std::vector<long> a(n * n, 0);
  long total = 1;
  for (int i = 0; i < n * n; ++i)
    total *= q;
  for (long code = 0; code < total; ++code) {
    long x = code;
    for (auto &v : a) {
      v = x % q;
      x /= q;
    }
    long d = det_mod(a, n, q);
    c.gl += d != 0;
    c.sl += d == 1;
  }
  return c;
}

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return b ? gcd_u(b, a % b) : a; }

struct EnvGuard {
  explicit EnvGuard(const std::string &value) { setenv("CURVEBOUND_DATA", value.c_str(), 1); }
  ~EnvGuard() { unsetenv("CURVEBOUND_DATA"); }
};

} // namespace

TEST_CASE("PSL2 and PGL2 orders match brute-force matrix counts", "[family]")
{
  for (long q : {3L, 5L, 7L, 11L}) {
    auto c = count_matrices(2, q);
    CAPTURE(q);
    CHECK(family_order(FamilySpec::classical(Family::PGL2, q)) == BigInt(c.gl / (q - 1)));
    CHECK(family_order(FamilySpec::classical(Family::PSL2, q)) == BigInt(c.sl / gcd_u(2, q - 1)));
  }
}

TEST_CASE("PSL3 and PGL3 orders match brute-force matrix counts", "[family]")
{
  auto c = count_matrices(3, 3);
  CHECK(c.sl == 5616);
  CHECK(family_order(FamilySpec::classical(Family::PSL3, 3)) == BigInt(c.sl / gcd_u(3, 2)));
  CHECK(family_order(FamilySpec::classical(Family::PGL3, 3)) == BigInt(c.gl / 2));
  CHECK(family_order(FamilySpec::classical(Family::PSL3, 7)) == 1876896);
}

TEST_CASE("unitary group orders", "[family]")
{
  CHECK(family_order(FamilySpec::classical(Family::PSU3, 5)) == 126000);
  CHECK(family_order(FamilySpec::classical(Family::PGU3, 5)) == 378000);
  CHECK(family_order(FamilySpec::classical(Family::PSU3, 13)) == BigInt(13 * 13 * 13) * 168 * 2198 / 1);
  CHECK(family_order(FamilySpec::classical(Family::PSU3, 17)) == BigInt(17 * 17 * 17) * 288 * 4914 / 3);
}

TEST_CASE("field-automorphism factor multiplies the order", "[family]")
{
  auto base = family_order(FamilySpec::classical(Family::PSL2, 27));
  CHECK(family_order(FamilySpec::classical(Family::PSL2, 27, 3)) == 3 * base);
  CHECK(field_aut_divisors(27) == std::set<std::uint64_t>{1, 3});
  CHECK(field_aut_divisors(3125) == std::set<std::uint64_t>{1, 5});
  CHECK(field_aut_divisors(7) == std::set<std::uint64_t>{1});
}

TEST_CASE("family validation rules", "[family][errors]")
{
  CHECK_THROWS_AS(FamilySpec::classical(Family::PSL3, 5), Error);  // 5 ≡ 1 (mod 4)
  CHECK_THROWS_AS(FamilySpec::classical(Family::PSU3, 3), Error);  // 3 ≡ 3 (mod 4)
  CHECK_THROWS_AS(FamilySpec::classical(Family::PSL2, 8), Error);  // even q
  CHECK_THROWS_AS(FamilySpec::classical(Family::PSL2, 6), Error);  // not a prime power
  CHECK_THROWS_AS(FamilySpec::classical(Family::PSL2, 9, 2), Error);
  CHECK_THROWS_AS(FamilySpec::classical(Family::PSL2, 9, 3), Error);
  CHECK_NOTHROW(FamilySpec::classical(Family::PSL2, 9, 1));
  CHECK_THROWS_AS(FamilySpec::sporadic(Family::PSL2), Error);
  FamilySpec bad{Family::M11, PrimePower::of(5), 1};
  CHECK_THROWS_AS(family_order(bad), Error);
  FamilySpec missing{Family::PSU3, std::nullopt, 1};
  CHECK_THROWS_AS(family_order(missing), Error);
  CHECK(parse_family("psu3") == Family::PSU3);
  CHECK(parse_family("M11") == Family::M11);
  CHECK_THROWS_AS(parse_family("psp4"), Error);
}

TEST_CASE("solvable witness orders", "[family]")
{
  CHECK(solvable_witness_order(FamilySpec::classical(Family::PSL2, 7)) == 21);
  CHECK(solvable_witness_order(FamilySpec::classical(Family::PSU3, 5)) == 125 * 24 / 3);
  CHECK(solvable_witness_order(FamilySpec::classical(Family::PSL3, 3)) == 27 * 4 * 4);
  CHECK_THROWS_AS(solvable_witness_order(FamilySpec::sporadic(Family::M11)), Error);
}

TEST_CASE("sporadic group orders from the shipped generators", "[sporadic]")
{
  CHECK(load_sporadic(Family::ALT7).order() == 2520);
  CHECK(load_sporadic(Family::M11).order() == 7920);
  CHECK(family_order(FamilySpec::sporadic(Family::ALT7)) == 2520);
  CHECK(family_order(FamilySpec::sporadic(Family::M11)) == 7920);
}

TEST_CASE("sporadic facts: wild and tame catalogs", "[sporadic]")
{
  auto a5 = sporadic_facts(Family::ALT7, 5);
  CHECK(a5.wild_catalog == std::vector<WildStabilizer>{{5, 1}, {5, 2}, {5, 4}});
  CHECK(a5.tame_catalog == std::set<std::uint64_t>{2, 3, 4, 6, 7});
  auto a7 = sporadic_facts(Family::ALT7, 7);
  CHECK(a7.wild_catalog == std::vector<WildStabilizer>{{7, 1}, {7, 3}});
  CHECK(a7.tame_catalog == std::set<std::uint64_t>{2, 3, 4, 5, 6});
  auto a3 = sporadic_facts(Family::ALT7, 3);
  CHECK(a3.tame_catalog == std::set<std::uint64_t>{2, 4, 5, 7});
  auto m11 = sporadic_facts(Family::M11, 11);
  CHECK(m11.wild_catalog == std::vector<WildStabilizer>{{11, 1}, {11, 5}});
  auto m3 = sporadic_facts(Family::M11, 3);
  CHECK(m3.tame_catalog == std::set<std::uint64_t>{2, 4, 5, 8, 11});
  CHECK(std::count(m3.wild_catalog.begin(), m3.wild_catalog.end(), WildStabilizer{9, 8}) == 1);
  for (const auto &f : {a5, a7, a3, m11, m3})
    CHECK_NOTHROW(f.validate());
}

TEST_CASE("sporadic facts reject unsupported inputs", "[sporadic][errors]")
{
  CHECK_THROWS_AS(sporadic_facts(Family::ALT7, 11), Error);
  CHECK_THROWS_AS(sporadic_facts(Family::M11, 7), Error);
  CHECK_THROWS_AS(sporadic_facts(Family::PSL2, 3), Error);
  GroupFacts bad;
  bad.p = 3;
  bad.tame_catalog = {3};
  CHECK_THROWS_AS(bad.validate(), Error);
  bad.tame_catalog = {};
  bad.wild_catalog = {{9, 9}};
  CHECK_THROWS_AS(bad.validate(), Error);
}

TEST_CASE("generator file integrity is checked against the known order", "[sporadic][errors]")
{
  auto dir = std::filesystem::temp_directory_path() / "curvebound_classical_test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "alt7.gens") << "degree: 7\n(1,2,3)\n(1,2,4)\n"; // only Alt5
  }
  CHECK_THROWS_AS(sporadic_facts(Family::ALT7, 5, (dir / "alt7.gens").string()), Error);
  {
    EnvGuard env(dir.string());
    CHECK(data_directory() == dir);
    CHECK_THROWS_AS(sporadic_facts(Family::ALT7, 5), Error);
  }
  {
    EnvGuard env((dir / "missing").string());
    CHECK_THROWS_AS(load_sporadic(Family::M11), Error);
  }
  std::filesystem::remove_all(dir);
}
