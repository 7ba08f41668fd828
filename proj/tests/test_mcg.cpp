#include <doctest.h>

#include <algorithm>
#include <set>

#include "hopfkit/mcg.hpp"
#include "s3_torus_classes.hpp"

using namespace hopfkit;

namespace {

Elt a3_generator(const FiniteGroup& s3) {
  for (Elt x = 0; x < s3.order(); ++x)
    if (s3.element_order(x) == 3) return x;
  return 0;
}

CrossedModule s3_a3_inclusion() {
  auto s3 = FiniteGroup::symmetric(3);
  return CrossedModule::normal_subgroup(s3, {a3_generator(s3)});
}

}  // namespace

TEST_CASE("free word machinery") {
  CHECK(free_reduce({1, -1, 2}) == Word{2});
  CHECK(free_reduce({1, 2, -2, -1}) == Word{});
  CHECK(cyclic_reduce({-1, 2, 1}) == Word{2});
  CHECK(word_inverse({1, -2}) == Word{2, -1});
  CHECK(conjugate_in_free_group({1, 2}, {2, 1}));
  CHECK(!conjugate_in_free_group({1, 2}, {1, -2}));
  CHECK(substitute({1, 2}, {{1}, {2, -1}}) == Word{1, 2, -1});
}

TEST_CASE("surface automorphism validation") {
  SUBCASE("identity and twists validate") {
    CHECK_NOTHROW(identity_automorphism(1));
    CHECK_NOTHROW(identity_automorphism(2));
    CHECK_NOTHROW(torus_twists());
  }
  SUBCASE("relator-breaking images are rejected") {
    // a -> b, b -> b breaks the relator and is not invertible
    CHECK_THROWS_AS(make_surface_automorphism(1, {{2}, {2}}, {{2}, {2}}), error);
  }
  SUBCASE("wrong inverse data is rejected") {
    CHECK_THROWS_AS(make_surface_automorphism(1, {{1}, {2, -1}}, {{1}, {2, -1}}), error);
  }
  SUBCASE("a genus-2 automorphism supplied by hand validates") {
    // conjugation by a1: inner, descends to the identity outer class
    std::vector<Word> images(4), inverse_images(4);
    for (int i = 0; i < 4; ++i) {
      images[i] = {1, i + 1, -1};
      inverse_images[i] = {-1, i + 1, 1};
    }
    CHECK_NOTHROW(make_surface_automorphism(2, images, inverse_images));
  }
}

TEST_CASE("action on representations") {
  auto s3 = FiniteGroup::symmetric(3);
  auto [da, db] = torus_twists();
  SUBCASE("identity automorphism fixes every tuple") {
    auto id = identity_automorphism(1);
    for (const auto& t : enumerate_surface_reps(s3, 1))
      CHECK(act_on_representation(id, t, s3) == t);
  }
  SUBCASE("the a-twist composes the second entry with the first") {
    for (const auto& t : enumerate_surface_reps(s3, 1)) {
      auto moved = act_on_representation(da, t, s3);
      CHECK(moved[0] == t[0]);
      CHECK(moved[1] == s3.mul(t[1], t[0]));
      auto back = act_on_representation(inverse_automorphism(da), t, s3);
      CHECK(back[0] == t[0]);
      CHECK(back[1] == s3.mul(t[1], s3.inv(t[0])));
    }
  }
  SUBCASE("the action preserves the representation set") {
    for (const auto& t : enumerate_surface_reps(s3, 1)) {
      CHECK(commutator_product(s3, act_on_representation(da, t, s3)) == s3.identity());
      CHECK(commutator_product(s3, act_on_representation(db, t, s3)) == s3.identity());
    }
  }
  SUBCASE("inner automorphisms act by conjugation") {
    auto inner = make_surface_automorphism(1, {{1, 1, -1}, {1, 2, -1}}, {{-1, 1, 1}, {-1, 2, 1}});
    auto orbits = conjugation_orbits(enumerate_surface_reps(s3, 1), s3);
    auto perm = induced_class_permutation(inner, orbits, s3);
    for (int c = 0; c < orbits.count(); ++c) CHECK(perm[c] == c);
  }
}

TEST_CASE("torus mapping class group relations hold on classes") {
  for (const auto& g : {FiniteGroup::trivial(), FiniteGroup::cyclic(2), FiniteGroup::cyclic(3),
                        FiniteGroup::symmetric(3)}) {
    auto report = verify_torus_relations(g);
    CHECK(report.braid_holds);
    CHECK(report.torsion_holds);
  }
  CHECK(verify_torus_relations(FiniteGroup::cyclic(2)).class_count == 4);
  CHECK(verify_torus_relations(FiniteGroup::symmetric(3)).class_count == 8);
}

TEST_CASE("trivial group gives a single fixed point") {
  auto t = FiniteGroup::trivial();
  auto orbits = conjugation_orbits(enumerate_surface_reps(t, 1), t);
  auto [da, db] = torus_twists();
  auto parts = orbit_decomposition({induced_class_permutation(da, orbits, t),
                                    induced_class_permutation(db, orbits, t)});
  REQUIRE(parts.size() == 1);
  CHECK(parts[0] == std::vector<int>{0});
}

TEST_CASE("twist orbits on the S3 torus classes") {
  auto s3 = FiniteGroup::symmetric(3);
  auto orbits = conjugation_orbits(enumerate_surface_reps(s3, 1), s3);
  auto [da, db] = torus_twists();
  auto pa = induced_class_permutation(da, orbits, s3);
  auto pb = induced_class_permutation(db, orbits, s3);
  auto parts = orbit_decomposition({pa, pb});
  REQUIRE(parts.size() == 3);
  std::multiset<std::size_t> sizes;
  for (const auto& p : parts) sizes.insert(p.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 3, 4});

  SUBCASE("orbit membership matches the class shapes") {
    auto name_of_class = [&](int c) { return s3_pair_class(s3, orbits.representative(c)); };
    for (const auto& part : parts) {
      std::set<std::string> names;
      for (int c : part) names.insert(name_of_class(c));
      if (part.size() == 1) CHECK(names == std::set<std::string>{"C1"});
      if (part.size() == 4) CHECK(names == std::set<std::string>{"C2", "C2'", "C3", "C4"});
      if (part.size() == 3) CHECK(names == std::set<std::string>{"C5", "C5'", "C6"});
    }
  }
  SUBCASE("the Z2 torus classes decompose under the twists") {
    auto z2 = FiniteGroup::cyclic(2);
    auto z2_orbits = conjugation_orbits(enumerate_surface_reps(z2, 1), z2);
    auto qa = induced_class_permutation(da, z2_orbits, z2);
    auto qb = induced_class_permutation(db, z2_orbits, z2);
    auto z2_parts = orbit_decomposition({qa, qb});
    std::multiset<std::size_t> z2_sizes;
    for (const auto& p : z2_parts) z2_sizes.insert(p.size());
    // (0,0) fixed; the three nontrivial classes are permuted transitively
    CHECK(z2_sizes == std::multiset<std::size_t>{1, 3});
  }
}

TEST_CASE("mapping class group action on the protected groupoid") {
  auto x = s3_a3_inclusion();
  auto pg = protected_groupoid(x, 1);
  auto [da, db] = torus_twists();

  SUBCASE("identity acts as the identity endofunctor") {
    auto action = act_on_protected_groupoid(identity_automorphism(1), x, 1, pg);
    CHECK(action.well_defined);
    CHECK(action.functorial);
    for (int o = 0; o < pg.groupoid.num_objects(); ++o) CHECK(action.object_perm[o] == o);
    for (std::size_t m = 0; m < action.morphism_perm.size(); ++m)
      CHECK(action.morphism_perm[m] == static_cast<int>(m));
  }
  SUBCASE("twists act functorially") {
    for (const auto& aut : {da, db}) {
      auto action = act_on_protected_groupoid(aut, x, 1, pg);
      CHECK(action.well_defined);
      CHECK(action.functorial);
      std::set<int> objects(action.object_perm.begin(), action.object_perm.end());
      CHECK(static_cast<int>(objects.size()) == pg.groupoid.num_objects());
    }
  }
  SUBCASE("the trivial representation class is fixed") {
    // object class of the identity pair is the lexicographically first one
    auto action = act_on_protected_groupoid(da, x, 1, pg);
    CHECK(action.object_perm[0] == 0);
  }
  SUBCASE("trivial-boundary variant: twists permute the order-9 automorphism groups compatibly") {
    auto xt = CrossedModule::trivial_boundary(x.B(), x.A(), x.action_table());
    auto pgt = protected_groupoid(xt, 1);
    for (const auto& aut : {da, db}) {
      auto action = act_on_protected_groupoid(aut, xt, 1, pgt);
      CHECK(action.well_defined);
      CHECK(action.functorial);
      for (int o = 0; o < pgt.groupoid.num_objects(); ++o) {
        auto before = pgt.groupoid.hom_set(o, o).size();
        auto after = pgt.groupoid.hom_set(action.object_perm[o], action.object_perm[o]).size();
        CHECK(before == after);
      }
    }
  }
  SUBCASE("braid relation holds for the induced morphism permutations") {
    auto act_a = act_on_protected_groupoid(da, x, 1, pg);
    auto act_b = act_on_protected_groupoid(db, x, 1, pg);
    auto compose_perm = [](const std::vector<int>& f, const std::vector<int>& g) {
      std::vector<int> out(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[g[i]];
      return out;
    };
    auto aba = compose_perm(act_a.morphism_perm,
                            compose_perm(act_b.morphism_perm, act_a.morphism_perm));
    auto bab = compose_perm(act_b.morphism_perm,
                            compose_perm(act_a.morphism_perm, act_b.morphism_perm));
    CHECK(aba == bab);
  }
}
