#pragma once

#include <string>
#include <vector>

#include "hopfkit/group.hpp"
#include "hopfkit/groupoid.hpp"

namespace hopfkit {

/// Crossed module (B, A, |>, d): d is a homomorphism A -> B, the action of B
/// on A is by automorphisms, and both Peiffer identities hold.
class CrossedModule {
 public:
  /// Validates the action axioms and both Peiffer identities; the first
  /// violated identity is named in the error.
  static CrossedModule validate(FiniteGroup b, FiniteGroup a, std::vector<Elt> action,
                                std::vector<Elt> boundary);

  /// A normal subgroup of G with the conjugation action and inclusion.
  static CrossedModule normal_subgroup(const FiniteGroup& g, const std::vector<Elt>& subgroup_gens);
  /// Abelian A with an action of B and trivial boundary.
  static CrossedModule trivial_boundary(const FiniteGroup& b, const FiniteGroup& a,
                                        std::vector<Elt> action);
  /// A = B, identity boundary, conjugation action.
  static CrossedModule boundary_isomorphism(const FiniteGroup& b);
  /// (Aut(A), A) with the evaluation action and a |-> conjugation-by-a.
  static CrossedModule automorphism_module(const FiniteGroup& a);

  const FiniteGroup& B() const { return b_; }
  const FiniteGroup& A() const { return a_; }
  Elt act(Elt b, Elt a) const { return action_[static_cast<std::size_t>(b) * a_.order() + a]; }
  Elt boundary(Elt a) const { return boundary_[a]; }
  const std::vector<Elt>& action_table() const { return action_; }
  const std::vector<Elt>& boundary_table() const { return boundary_; }
  bool action_is_trivial() const;

  bool same_tables(const CrossedModule& other) const {
    return b_.same_table(other.b_) && a_.same_table(other.a_) && action_ == other.action_ &&
           boundary_ == other.boundary_;
  }

 private:
  FiniteGroup b_, a_;
  std::vector<Elt> action_;    // |B| x |A|
  std::vector<Elt> boundary_;  // |A|
};

/// The semidirect product A x| B on pairs encoded as a * |B| + b, with
/// (a',b') (a,b) = (a' (b' |> a), b' b). Identity is (e_A, e_B) only when both
/// identities sit at index 0, which holds for all constructors here.
struct SemidirectProduct {
  FiniteGroup group;
  int nb = 0;

  Elt encode(Elt a, Elt b) const { return static_cast<Elt>(a * nb + b); }
  Elt a_part(Elt s) const { return static_cast<Elt>(s / nb); }
  Elt b_part(Elt s) const { return static_cast<Elt>(s % nb); }
};

SemidirectProduct semidirect_product(const CrossedModule& x);

/// Group object in Cat: a groupoid whose object and morphism sets carry group
/// structures making source/target/composition multiplicative.
struct GroupObjectInCat {
  FiniteGroupoid category;
  FiniteGroup object_group;     // on the objects
  FiniteGroup morphism_group;   // on the morphisms
};

/// The action groupoid of a crossed module: objects B, morphism (a,b) runs
/// from b to d(a)b, composition (a', d(a)b) o (a,b) = (a'a, b).
GroupObjectInCat to_group_object(const CrossedModule& x);
/// Recovers the crossed module from a group object in Cat; inverse of
/// to_group_object on the nose.
CrossedModule from_group_object(const GroupObjectInCat& h);

/// Level n of the nerve of a crossed module: the group A^n x B with
/// multiplication twisted by the action, its face and degeneracy maps.
class NerveLevel {
 public:
  NerveLevel(const CrossedModule& x, int n);

  int level() const { return n_; }
  long long size() const { return size_; }
  std::vector<Elt> decode(long long idx) const;  // (a_1..a_n, b)
  long long encode(const std::vector<Elt>& tuple) const;

  long long mul(long long lhs, long long rhs) const;
  long long inverse(long long v) const;
  long long identity_index() const;

  long long face(int i, long long v) const;        // to level n-1
  long long degeneracy(int i, long long v) const;  // to level n+1

  /// Materialized multiplication table; intended for n <= 2.
  FiniteGroup as_group() const;

 private:
  const CrossedModule* x_;
  int n_;
  long long size_;
};

/// Face map d_i : level n -> level n-1 as a full homomorphism table.
GroupHom nerve_face_hom(const CrossedModule& x, int n, int i);
/// Degeneracy s_i : level n -> level n+1 as a full homomorphism table.
GroupHom nerve_degeneracy_hom(const CrossedModule& x, int n, int i);

}  // namespace hopfkit
