#include "curvebound/classical/sporadic.hpp"
#include "curvebound/permgroup.hpp"

#include <catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <set>

using namespace curvebound;
using namespace curvebound::perm;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<Point>> cycles) { return Permutation::from_cycles(n, cycles); }

// Test-side oracle: breadth-first closure of the generators.
std::set<Permutation> closure(std::size_t n, const std::vector<Permutation> &gens)
{
  std::set<Permutation> seen{Permutation(n)};
  std::vector<Permutation> queue{Permutation(n)};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (const auto &s : gens) {
      Permutation y = queue[i] * s;
      if (seen.insert(y).second)
        queue.push_back(y);
    }
  return seen;
}

std::uint64_t brute_order(const Permutation &x)
{
  Permutation y = x;
  std::uint64_t k = 1;
  while (!y.is_identity()) {
    y = y * x;
    ++k;
  }
  return k;
}

// Every subgroup of S4 and A5 is generated by two elements, so closing all
// pairs enumerates the subgroup lattice.
std::set<std::set<Permutation>> all_two_generated(std::size_t n, const std::vector<Permutation> &elems)
{
  std::set<std::set<Permutation>> out;
  for (std::size_t i = 0; i < elems.size(); ++i)
    for (std::size_t j = i; j < elems.size(); ++j)
      out.insert(closure(n, {elems[i], elems[j]}));
  return out;
}

std::size_t conjugacy_class_count_of_subgroups(const std::set<std::set<Permutation>> &subs,
                                               const std::vector<Permutation> &G)
{
  std::set<std::set<Permutation>> done;
  std::size_t classes = 0;
  for (const auto &H : subs) {
    if (done.count(H))
      continue;
    ++classes;
    for (const auto &g : G) {
      std::set<Permutation> K;
      for (const auto &h : H)
        K.insert(h.conjugate_by(g));
      done.insert(K);
    }
  }
  return classes;
}

PermGroup sym(std::size_t n)
{
  std::vector<Point> all(n);
  for (std::size_t i = 0; i < n; ++i)
    all[i] = static_cast<Point>(i + 1);
  return PermGroup::from_generators(n, {cyc(n, {{1, 2}}), cyc(n, {all})});
}

PermGroup alt(std::size_t n)
{
  std::vector<Permutation> gens;
  for (Point k = 3; k <= n; ++k)
    gens.push_back(cyc(n, {{1, 2, k}}));
  return PermGroup::from_generators(n, gens);
}

} // namespace

TEST_CASE("permutation basics follow the right action", "[permutation]")
{
  auto a = cyc(4, {{1, 2}});
  auto b = cyc(4, {{2, 3}});
  // x^(ab) = (x^a)^b: 1 -> 2 -> 3
  CHECK((a * b)[0] == 2);
  CHECK((a * b).to_string() == "(1,3,2)");
  CHECK(Permutation(4).to_string() == "()");
  CHECK(cyc(6, {{1, 2, 3}, {4, 5}}).order() == 6);
  CHECK(cyc(5, {{1, 2, 3, 4, 5}}).pow(5).is_identity());
  CHECK(cyc(5, {{1, 2, 3, 4, 5}}).pow(-1) == cyc(5, {{1, 2, 3, 4, 5}}).inverse());
  CHECK(cyc(4, {{1, 2}}).is_even() == false);
  CHECK(cyc(4, {{1, 2}, {3, 4}}).is_even());
  CHECK_THROWS_AS(cyc(3, {{1, 4}}), Error);
  CHECK_THROWS_AS(cyc(3, {{1, 2, 1}}), Error);
}

TEST_CASE("group orders agree with exhaustive closure", "[schreier-sims]")
{
  for (std::size_t n = 2; n <= 6; ++n) {
    auto S = sym(n);
    CHECK(S.order() == BigInt(closure(n, S.generators()).size()));
    auto A = alt(n);
    if (n >= 3)
      CHECK(A.order() == BigInt(closure(n, A.generators()).size()));
  }
  CHECK(sym(7).order() == 5040);
  CHECK(alt(7).order() == 2520);
}

TEST_CASE("membership matches the closure", "[schreier-sims]")
{
  auto A = alt(5);
  auto elems = closure(5, A.generators());
  auto S = sym(5);
  for (const auto &x : S.elements())
    CHECK(A.contains(x) == (elems.count(x) == 1));
  CHECK_THROWS_AS(A.contains(Permutation(6)), Error);
}

TEST_CASE("random products of generators stay in the group and sift to the identity", "[property]")
{
  auto G = classical::load_sporadic(classical::Family::M11);
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    Permutation x = G.identity();
    for (int k = 0; k < 20; ++k)
      x = x * G.generators()[rng() % G.generators().size()];
    CHECK(G.contains(x));
    CHECK(G.contains(x.inverse()));
  }
  CHECK_FALSE(G.contains(cyc(11, {{1, 2}})));
}

TEST_CASE("element enumeration is complete and duplicate free", "[property]")
{
  auto G = alt(6);
  auto elems = G.elements();
  std::set<Permutation> unique(elems.begin(), elems.end());
  CHECK(unique.size() == 360);
  CHECK(std::is_sorted(elems.begin(), elems.end()));
  CHECK(unique == closure(6, G.generators()));
}

TEST_CASE("Alt7 point stabilizer has order 360 by closure", "[sporadic]")
{
  auto G = classical::load_sporadic(classical::Family::ALT7);
  CHECK(G.order() == 2520);
  std::vector<Permutation> stab;
  for (const auto &x : G.elements())
    if (x[6] == 6)
      stab.push_back(x);
  CHECK(stab.size() == 360);
  auto H = PermGroup::from_generators(7, stab);
  CHECK(H.order() == 360);
  CHECK(closure(7, {cyc(7, {{1, 2, 3}}), cyc(7, {{1, 2, 4}}), cyc(7, {{1, 2, 5}}), cyc(7, {{1, 2, 6}})}).size() == 360);
}

TEST_CASE("element order sets", "[sporadic]")
{
  auto A7 = classical::load_sporadic(classical::Family::ALT7);
  auto M11 = classical::load_sporadic(classical::Family::M11);
  CHECK(element_order_set(A7) == std::set<std::uint64_t>{1, 2, 3, 4, 5, 6, 7});
  CHECK(element_order_set(M11) == std::set<std::uint64_t>{1, 2, 3, 4, 5, 6, 8, 11});
  // oracle: orders by repeated multiplication
  std::set<std::uint64_t> brute;
  for (const auto &x : A7.elements())
    brute.insert(brute_order(x));
  CHECK(brute == element_order_set(A7));
}

TEST_CASE("Sylow subgroups and normalizers", "[sporadic]")
{
  auto A7 = classical::load_sporadic(classical::Family::ALT7);
  auto M11 = classical::load_sporadic(classical::Family::M11);
  auto P7 = sylow_subgroup(A7, 7);
  CHECK(P7.order() == 7);
  CHECK(normalizer(A7, P7).order() == 21);
  auto P3 = sylow_subgroup(M11, 3);
  CHECK(P3.order() == 9);
  CHECK(is_elementary_abelian(P3, 3));
  auto N3 = normalizer(M11, P3);
  CHECK(N3.order() == 144);
  CHECK(M11.order() / N3.order() == 55);
  CHECK(sylow_subgroup(M11, 2).order() == 16);
  CHECK(sylow_subgroup(M11, 11).order() == 11);
  CHECK(sylow_subgroup(M11, 7).is_trivial());

  // oracle: the normalizer by brute force over all elements
  std::size_t n = 0;
  auto p7 = P7.elements();
  std::set<Permutation> p7set(p7.begin(), p7.end());
  for (const auto &g : A7.elements()) {
    bool ok = true;
    for (const auto &x : P7.generators())
      ok = ok && p7set.count(x.conjugate_by(g));
    n += ok;
  }
  CHECK(n == 21);
}

TEST_CASE("normalizer rejects a non-subgroup", "[errors]")
{
  auto A5 = alt(5);
  auto H = PermGroup::from_generators(5, {cyc(5, {{1, 2}})});
  CHECK_THROWS_AS(normalizer(A5, H), Error);
  CHECK_THROWS_AS(sylow_subgroup(A5, 4), Error);
}

TEST_CASE("solvability, simplicity and derived series", "[structure]")
{
  CHECK(is_solvable(sym(4)));
  CHECK_FALSE(is_solvable(alt(5)));
  CHECK(is_simple(alt(5)));
  CHECK_FALSE(is_simple(sym(5)));
  CHECK(derived_series_orders(sym(4)) == std::vector<BigInt>{24, 12, 4, 1});
  CHECK(is_simple(classical::load_sporadic(classical::Family::M11)));
  CHECK(is_cyclic(PermGroup::from_generators(6, {cyc(6, {{1, 2, 3}, {4, 5}})})));
  CHECK_FALSE(is_cyclic(PermGroup::from_generators(4, {cyc(4, {{1, 2}}), cyc(4, {{3, 4}})})));
}

TEST_CASE("conjugacy classes partition the group", "[structure]")
{
  auto G = sym(5);
  auto cls = conjugacy_classes(G);
  CHECK(cls.size() == 7);
  std::uint64_t total = 0;
  for (auto &[rep, size] : cls)
    total += size;
  CHECK(total == 120);
  CHECK(conjugacy_classes(classical::load_sporadic(classical::Family::M11)).size() == 10);
}

TEST_CASE("subgroup classes agree with the two-generator oracle", "[lattice]")
{
  for (auto G : {sym(4), alt(5)}) {
    auto elems = G.elements();
    auto subs = all_two_generated(G.degree(), elems);
    auto recs = subgroup_classes(G);
    CHECK(recs.size() == conjugacy_class_count_of_subgroups(subs, elems));
    BigInt total = 0;
    for (const auto &r : recs)
      total += r.class_size;
    CHECK(total == subs.size());
    for (const auto &r : recs) {
      CHECK(r.representative.order() == r.order);
      CHECK(is_solvable(r.representative) == r.is_solvable);
    }
  }
  CHECK(subgroup_classes(sym(4)).size() == 11);
  CHECK(subgroup_classes(alt(5)).size() == 9);
}

TEST_CASE("subgroup class records are ordered and capped", "[lattice]")
{
  auto recs = subgroup_classes(sym(4));
  for (std::size_t i = 1; i < recs.size(); ++i)
    CHECK(recs[i - 1].order <= recs[i].order);
  CHECK(subgroup_classes(sym(4), 4).back().order == 4);
  CHECK_THROWS_AS(subgroup_classes(sym(8)), Error);
}

TEST_CASE("p-cyclic pairs and the solvable maximum", "[sporadic]")
{
  auto A7 = classical::load_sporadic(classical::Family::ALT7);
  CHECK(max_solvable_with_cyclic_complement(A7, 3) == 36);
  CHECK(max_solvable_with_cyclic_complement(A7, 5) == 20);
  CHECK(max_solvable_with_cyclic_complement(A7, 7) == 21);
  auto pairs = p_cyclic_pairs(A7, 7);
  CHECK(pairs == std::vector<PCyclicPair>{{7, 1}, {7, 3}});
  auto M11 = classical::load_sporadic(classical::Family::M11);
  CHECK(p_cyclic_pairs(M11, 11) == std::vector<PCyclicPair>{{11, 1}, {11, 5}});
  CHECK_THROWS_AS(max_solvable_with_cyclic_complement(A7, 11), Error);
}

TEST_CASE("generator file parsing", "[io]")
{
  auto f = parse_generator_file("# comment\n\ndegree: 5\n(1,2,3)\n(1,2)(3,4)\n");
  CHECK(f.degree == 5);
  CHECK(f.generators.size() == 2);
  CHECK(group_from_file(f).order() == 12);
  CHECK_THROWS_AS(parse_generator_file("degree: 3\n(1,5)\n"), Error);
  CHECK_THROWS_AS(parse_generator_file("(1,2\n"), Error);
  try {
    parse_generator_file("degree: 4\n(1,2)\n(1,x)\n");
    FAIL("expected a parse error");
  } catch (const Error &e) {
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
  }
}

TEST_CASE("element table indexes products consistently", "[table]")
{
  auto G = alt(5);
  ElementTable T(G);
  REQUIRE(T.size() == 60);
  CHECK(T[T.identity()].is_identity());
  for (ElementTable::Index a = 0; a < T.size(); a += 7)
    for (ElementTable::Index b = 0; b < T.size(); b += 5) {
      CHECK(T[T.mul(a, b)] == T[a] * T[b]);
      CHECK(T.mul(a, T.inverse(a)) == T.identity());
      CHECK(T[T.conj(a, b)] == T[a].conjugate_by(T[b]));
    }
}
