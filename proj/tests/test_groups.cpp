#include <doctest.h>

#include <algorithm>
#include <set>

#include "hopfkit/group.hpp"

using namespace hopfkit;

namespace {

// Independent hand-built S3 table over elements
// 0=e 1=(12) 2=(13) 3=(23) 4=(123) 5=(132), composing left-acts-after:
// (f*g)(x) = f(g(x)).
FiniteGroup hand_s3() {
  auto perm = [](int idx) -> std::array<int, 3> {
    switch (idx) {
      case 0: return {0, 1, 2};
      case 1: return {1, 0, 2};
      case 2: return {2, 1, 0};
      case 3: return {0, 2, 1};
      case 4: return {1, 2, 0};
      default: return {2, 0, 1};
    }
  };
  auto index_of = [&](const std::array<int, 3>& p) {
    for (int i = 0; i < 6; ++i)
      if (perm(i) == p) return i;
    return -1;
  };
  std::vector<std::vector<int>> t(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      std::array<int, 3> c;
      for (int x = 0; x < 3; ++x) c[x] = perm(a)[perm(b)[x]];
      t[a][b] = index_of(c);
    }
  return FiniteGroup::from_mult_table(t, {"e", "(12)", "(13)", "(23)", "(123)", "(132)"});
}

// Plain filter over all |G|^(2g) tuples; the reference the backtracking
// enumeration is checked against.
std::vector<SurfaceTuple> brute_force_surface_reps(const FiniteGroup& g, int genus) {
  std::vector<SurfaceTuple> out;
  const int len = 2 * genus;
  SurfaceTuple t(len, 0);
  while (true) {
    if (commutator_product(g, t) == g.identity()) out.push_back(t);
    int i = len - 1;
    while (i >= 0 && t[i] == g.order() - 1) t[i--] = 0;
    if (i < 0) break;
    ++t[i];
  }
  if (len == 0) return {SurfaceTuple{}};
  return out;
}

}  // namespace

TEST_CASE("multiplication table validation") {
  CHECK_THROWS_AS(FiniteGroup::from_mult_table({{0, 1}, {1, 1}}), error);  // not Latin
  // Latin square without an identity element
  CHECK_THROWS_AS(FiniteGroup::from_mult_table({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}), error);
  // order-5 loop: Latin with identity but not associative
  CHECK_THROWS_AS(FiniteGroup::from_mult_table({{0, 1, 2, 3, 4},
                                                {1, 0, 3, 4, 2},
                                                {2, 3, 4, 0, 1},
                                                {3, 4, 1, 2, 0},
                                                {4, 2, 0, 1, 3}}),
                  error);
  CHECK_NOTHROW(FiniteGroup::from_mult_table({{0, 1}, {1, 0}}));
  // identity does not need to sit at index 0
  CHECK_NOTHROW(FiniteGroup::from_mult_table({{1, 0}, {0, 1}}));
}

TEST_CASE("permutation closure builds S3 with cycle names") {
  auto s3 = FiniteGroup::symmetric(3);
  CHECK(s3.order() == 6);
  CHECK(s3.name_of(s3.identity()) == "e");
  std::set<std::string> names(s3.names().begin(), s3.names().end());
  CHECK(names == std::set<std::string>{"e", "(12)", "(13)", "(23)", "(123)", "(132)"});
  CHECK(s3.same_table(hand_s3()) == false);  // element order may differ
  CHECK(group_isomorphic(s3, hand_s3()));
}

TEST_CASE("commutator product") {
  auto s3 = hand_s3();
  SUBCASE("an element commutes with itself") {
    CHECK(commutator_product(s3, {1, 1}) == s3.identity());
  }
  SUBCASE("empty tuple gives the identity") {
    CHECK(commutator_product(s3, {}) == s3.identity());
  }
  SUBCASE("non-commuting pair, checked against direct evaluation") {
    // t = ((123),(12)): [b^-1, a] = (12)(123)(12)(132)
    Elt a = 4, b = 1;
    Elt direct = s3.mul(s3.mul(s3.inv(b), a), s3.mul(b, s3.inv(a)));
    CHECK(commutator_product(s3, {a, b}) == direct);
    CHECK(commutator_product(s3, {a, b}) != s3.identity());
  }
  SUBCASE("out-of-range entry is rejected") {
    CHECK_THROWS_AS(commutator_product(s3, {9, 0}), error);
  }
  SUBCASE("conjugation equivariance") {
    for (Elt h = 0; h < s3.order(); ++h)
      for (Elt a = 0; a < s3.order(); ++a)
        for (Elt b = 0; b < s3.order(); ++b) {
          SurfaceTuple t{a, b};
          SurfaceTuple ct{s3.conj(h, a), s3.conj(h, b)};
          CHECK(commutator_product(s3, ct) == s3.conj(h, commutator_product(s3, t)));
        }
  }
}

TEST_CASE("surface representation enumeration matches the brute-force filter") {
  SUBCASE("trivial group, genus 2") {
    auto g = FiniteGroup::trivial();
    CHECK(enumerate_surface_reps(g, 2).size() == 1);
  }
  SUBCASE("counts") {
    CHECK(enumerate_surface_reps(FiniteGroup::symmetric(3), 1).size() == 18);
    CHECK(enumerate_surface_reps(FiniteGroup::cyclic(2), 1).size() == 4);
  }
  SUBCASE("oracle equivalence for small groups and genus <= 2") {
    std::vector<FiniteGroup> groups{FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                                    FiniteGroup::cyclic(4), FiniteGroup::symmetric(3),
                                    FiniteGroup::dihedral(4), FiniteGroup::cyclic(8)};
    for (const auto& g : groups)
      for (int genus : {0, 1, 2}) {
        auto fast = enumerate_surface_reps(g, genus);
        auto slow = brute_force_surface_reps(g, genus);
        CHECK(fast == slow);
      }
  }
  SUBCASE("genus 0 yields the single empty tuple") {
    auto reps = enumerate_surface_reps(FiniteGroup::symmetric(3), 0);
    REQUIRE(reps.size() == 1);
    CHECK(reps[0].empty());
  }
}

TEST_CASE("parallel enumeration is byte-identical to the serial reference") {
  auto s3 = FiniteGroup::symmetric(3);
  for (int genus : {1, 2})
    CHECK(enumerate_surface_reps_parallel(s3, genus) == enumerate_surface_reps(s3, genus));
  Presentation free2 = free_presentation(2);
  CHECK(enumerate_homs_parallel(free2, s3) == enumerate_homs(free2, s3));
}

TEST_CASE("conjugation orbits") {
  auto s3 = FiniteGroup::symmetric(3);
  auto reps = enumerate_surface_reps(s3, 1);
  auto orbits = conjugation_orbits(reps, s3);
  CHECK(orbits.count() == 8);

  SUBCASE("orbits partition the input") {
    std::size_t total = 0;
    std::set<SurfaceTuple> seen;
    for (const auto& o : orbits.orbits) {
      total += o.size();
      for (const auto& t : o) CHECK(seen.insert(t).second);
    }
    CHECK(total == reps.size());
  }
  SUBCASE("orbits are closed under conjugation") {
    for (const auto& o : orbits.orbits)
      for (const auto& t : o)
        for (Elt h = 0; h < s3.order(); ++h) {
          SurfaceTuple ct{s3.conj(h, t[0]), s3.conj(h, t[1])};
          CHECK(orbits.orbit_of.at(ct) == orbits.orbit_of.at(t));
        }
  }
  SUBCASE("canonical representative is the lexicographic minimum") {
    for (const auto& o : orbits.orbits) CHECK(*std::min_element(o.begin(), o.end()) == o[0]);
  }
  SUBCASE("abelian groups have singleton orbits") {
    auto z2 = FiniteGroup::cyclic(2);
    auto r = enumerate_surface_reps(z2, 1);
    CHECK(conjugation_orbits(r, z2).count() == 4);
    auto t = FiniteGroup::trivial();
    CHECK(conjugation_orbits(enumerate_surface_reps(t, 2), t).count() == 1);
  }
}

TEST_CASE("homomorphism enumeration from presentations") {
  auto z2 = FiniteGroup::cyclic(2);
  auto z3 = FiniteGroup::cyclic(3);
  auto s3 = FiniteGroup::symmetric(3);
  SUBCASE("free group has no constraints") {
    CHECK(enumerate_homs(free_presentation(2), z2).size() == 4);
  }
  SUBCASE("commuting pairs into S3") {
    Presentation zxz;
    zxz.generators = 2;
    zxz.relators = {{1, 2, -1, -2}};
    CHECK(enumerate_homs(zxz, s3).size() == 18);
  }
  SUBCASE("order-2 generator into Z3 must die") {
    Presentation p;
    p.generators = 1;
    p.relators = {{1, 1}};
    auto homs = enumerate_homs(p, z3);
    REQUIRE(homs.size() == 1);
    CHECK(homs[0][0] == z3.identity());
  }
}

TEST_CASE("subgroup closure and embedding") {
  auto s3 = FiniteGroup::symmetric(3);
  Elt three_cycle = 0;
  for (Elt x = 0; x < s3.order(); ++x)
    if (s3.element_order(x) == 3) {
      three_cycle = x;
      break;
    }
  auto [a3, embed] = subgroup(s3, {three_cycle});
  CHECK(a3.order() == 3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(embed[a3.mul(static_cast<Elt>(i), static_cast<Elt>(j))] ==
            s3.mul(embed[i], embed[j]));
}

TEST_CASE("group isomorphism backtracking") {
  CHECK(group_isomorphic(FiniteGroup::cyclic(6),
                         FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3))));
  CHECK(!group_isomorphic(FiniteGroup::cyclic(6), FiniteGroup::symmetric(3)));
  CHECK(!group_isomorphic(FiniteGroup::cyclic(4),
                          FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2))));
}
