#include <doctest.h>

#include <string>

#include "hopfkit/xmod.hpp"

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

CrossedModule s3_a3_trivial_boundary() {
  auto incl = s3_a3_inclusion();
  return CrossedModule::trivial_boundary(incl.B(), incl.A(), incl.action_table());
}

}  // namespace

TEST_CASE("crossed module validation") {
  SUBCASE("normal subgroup with conjugation and inclusion is valid") {
    auto x = s3_a3_inclusion();
    CHECK(x.A().order() == 3);
    CHECK(x.B().order() == 6);
    CHECK(!x.action_is_trivial());
  }
  SUBCASE("abelian kernel with trivial boundary is valid") {
    auto x = s3_a3_trivial_boundary();
    CHECK(x.boundary(1) == x.B().identity());
  }
  SUBCASE("trivial action with the inclusion boundary violates the first Peiffer identity") {
    auto incl = s3_a3_inclusion();
    std::vector<Elt> trivial_action(static_cast<std::size_t>(incl.B().order()) * incl.A().order());
    for (int b = 0; b < incl.B().order(); ++b)
      for (int a = 0; a < incl.A().order(); ++a)
        trivial_action[static_cast<std::size_t>(b) * incl.A().order() + a] = static_cast<Elt>(a);
    try {
      CrossedModule::validate(incl.B(), incl.A(), trivial_action, incl.boundary_table());
      FAIL("expected a Peiffer violation");
    } catch (const error& e) {
      CHECK(e.code() == errc::peiffer_violation);
      CHECK(std::string(e.what()).find("Peiffer identity 1") != std::string::npos);
    }
  }
  SUBCASE("non-abelian A with trivial boundary violates the second Peiffer identity") {
    auto s3 = FiniteGroup::symmetric(3);
    std::vector<Elt> trivial_action(static_cast<std::size_t>(s3.order()) * s3.order());
    for (int b = 0; b < s3.order(); ++b)
      for (int a = 0; a < s3.order(); ++a)
        trivial_action[static_cast<std::size_t>(b) * s3.order() + a] = static_cast<Elt>(a);
    try {
      CrossedModule::trivial_boundary(s3, s3, trivial_action);
      FAIL("expected a Peiffer violation");
    } catch (const error& e) {
      CHECK(e.code() == errc::peiffer_violation);
      CHECK(std::string(e.what()).find("Peiffer identity 2") != std::string::npos);
    }
  }
  SUBCASE("boundary isomorphism and automorphism constructors") {
    auto z3 = FiniteGroup::cyclic(3);
    auto iso = CrossedModule::boundary_isomorphism(z3);
    CHECK(iso.A().order() == 3);
    auto aut = CrossedModule::automorphism_module(z3);
    CHECK(aut.B().order() == 2);  // Aut(Z3) = Z2
    auto klein = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    auto aut4 = CrossedModule::automorphism_module(klein);
    CHECK(aut4.B().order() == 6);  // Aut(Z2 x Z2) = S3
  }
}

TEST_CASE("semidirect product structure") {
  auto x = s3_a3_inclusion();
  auto s = semidirect_product(x);
  CHECK(s.group.order() == 18);
  SUBCASE("projection to B is a homomorphism") {
    std::vector<Elt> proj(s.group.order());
    for (int v = 0; v < s.group.order(); ++v) proj[v] = s.b_part(static_cast<Elt>(v));
    CHECK_NOTHROW(GroupHom(s.group, x.B(), proj));
  }
  SUBCASE("A embeds as a normal subgroup") {
    std::vector<Elt> a_elems;
    for (int a = 0; a < x.A().order(); ++a) a_elems.push_back(s.encode(static_cast<Elt>(a), x.B().identity()));
    for (Elt g = 0; g < s.group.order(); ++g)
      for (Elt a : a_elems) {
        Elt conj = s.group.conj(g, a);
        CHECK(s.b_part(conj) == x.B().identity());
      }
  }
  SUBCASE("identity is the pair of identities") {
    CHECK(s.group.identity() == s.encode(x.A().identity(), x.B().identity()));
  }
}

TEST_CASE("group object round trip") {
  auto x = s3_a3_inclusion();
  auto obj = to_group_object(x);
  SUBCASE("the action groupoid has |A| |B| morphisms") {
    CHECK(obj.category.num_morphisms() == 18);
    CHECK(obj.category.num_objects() == 6);
  }
  SUBCASE("identity morphisms pair the unit of A with the object") {
    auto s = semidirect_product(x);
    for (int b = 0; b < x.B().order(); ++b)
      CHECK(obj.category.identity_at(b) == s.encode(x.A().identity(), static_cast<Elt>(b)));
  }
  SUBCASE("recovering the crossed module gives identical tables") {
    auto back = from_group_object(obj);
    CHECK(back.same_tables(x));
  }
  SUBCASE("round trip on further examples") {
    for (const auto& start :
         {CrossedModule::boundary_isomorphism(FiniteGroup::cyclic(3)), s3_a3_trivial_boundary(),
          CrossedModule::automorphism_module(FiniteGroup::cyclic(3))}) {
      CHECK(from_group_object(to_group_object(start)).same_tables(start));
    }
  }
}

TEST_CASE("nerve levels") {
  auto x = s3_a3_inclusion();
  SUBCASE("level zero is B") {
    CHECK(NerveLevel(x, 0).as_group().same_table(x.B()));
  }
  SUBCASE("level one is the semidirect product") {
    CHECK(NerveLevel(x, 1).as_group().same_table(semidirect_product(x).group));
  }
  SUBCASE("first face map multiplies the boundary onto the base") {
    NerveLevel level(x, 1);
    for (int a = 0; a < x.A().order(); ++a)
      for (int b = 0; b < x.B().order(); ++b) {
        long long v = level.encode({static_cast<Elt>(a), static_cast<Elt>(b)});
        CHECK(level.face(0, v) == x.B().mul(x.boundary(static_cast<Elt>(a)), static_cast<Elt>(b)));
        CHECK(level.face(1, v) == b);
      }
  }
  SUBCASE("face and degeneracy maps are homomorphisms") {
    for (int i = 0; i <= 1; ++i) CHECK_NOTHROW(nerve_face_hom(x, 1, i));
    for (int i = 0; i <= 2; ++i) CHECK_NOTHROW(nerve_face_hom(x, 2, i));
    CHECK_NOTHROW(nerve_degeneracy_hom(x, 0, 0));
    for (int i = 0; i <= 1; ++i) CHECK_NOTHROW(nerve_degeneracy_hom(x, 1, i));
  }
}

TEST_CASE("simplicial identities hold on nerve levels up to three") {
  for (const auto& x : {s3_a3_inclusion(), s3_a3_trivial_boundary(),
                        CrossedModule::boundary_isomorphism(FiniteGroup::cyclic(3)),
                        CrossedModule::automorphism_module(FiniteGroup::cyclic(3))}) {
    for (int n = 2; n <= 3; ++n) {
      NerveLevel level(x, n);
      NerveLevel below(x, n - 1);
      for (long long v = 0; v < level.size(); ++v) {
        for (int i = 0; i <= n - 1; ++i)
          for (int j = i; j <= n - 1; ++j)
            CHECK(below.face(j, level.face(i, v)) == below.face(i, level.face(j + 1, v)));
      }
    }
    for (int n = 0; n <= 1; ++n) {
      NerveLevel level(x, n);
      NerveLevel above(x, n + 1);
      for (long long v = 0; v < level.size(); ++v) {
        for (int i = 0; i <= n; ++i)
          for (int j = i; j <= n; ++j)
            CHECK(above.degeneracy(i, level.degeneracy(j, v)) ==
                  above.degeneracy(j + 1, level.degeneracy(i, v)));
        for (int j = 0; j <= n; ++j)
          for (int i = 0; i <= n + 1; ++i) {
            long long sj = level.degeneracy(j, v);
            if (i < j)
              CHECK(above.face(i, sj) == level.degeneracy(j - 1, level.face(i, v)));
            else if (i == j || i == j + 1)
              CHECK(above.face(i, sj) == v);
            else
              CHECK(above.face(i, sj) == level.degeneracy(j, level.face(i - 1, v)));
          }
      }
    }
  }
}
