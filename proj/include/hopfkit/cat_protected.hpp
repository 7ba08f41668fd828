#pragma once

#include <string>
#include <unordered_map>
#include <vector>

#include "hopfkit/groupoid.hpp"
#include "hopfkit/xmod.hpp"

namespace hopfkit {

/// Coinvariants for a crossed module and genus: objects are surface-group
/// homomorphisms into B, morphisms are surface-group homomorphisms into the
/// semidirect product, running from the B-projection to its boundary twist.
struct CoinvariantGroupoid {
  SemidirectProduct s;
  std::vector<SurfaceTuple> objects;    // flat B-tuples, lexicographic
  std::vector<SurfaceTuple> morphisms;  // flat semidirect tuples, lexicographic
  std::vector<int> src;                 // morphism -> object index
  std::vector<int> tgt;
};

CoinvariantGroupoid coinvariant_groupoid(const CrossedModule& x, int genus);

/// Source and target of a semidirect tuple viewed as a morphism of the
/// product action groupoid: componentwise b and d(a)b.
SurfaceTuple morphism_source(const SemidirectProduct& s, const CrossedModule& x,
                             const SurfaceTuple& t);
SurfaceTuple morphism_target(const SemidirectProduct& s, const CrossedModule& x,
                             const SurfaceTuple& t);
/// Componentwise composition (a', d(a)b) o (a, b) = (a'a, b); endpoints must
/// match.
SurfaceTuple morphism_compose(const SemidirectProduct& s, const CrossedModule& x,
                              const SurfaceTuple& second, const SurfaceTuple& first);
/// Componentwise inverse (a,b)^-1 = (a^-1, d(a)b).
SurfaceTuple morphism_inverse(const SemidirectProduct& s, const CrossedModule& x,
                              const SurfaceTuple& t);

/// Union-find congruence over all tuples in S^(2g): seeded with simultaneous
/// conjugation orbits, closed under "conjugate factors give equal composites",
/// iterated to a fixpoint in deterministic order.
struct Congruence {
  long long num_tuples = 0;
  std::vector<int> cls;  // tuple index -> dense class id, ordered by first member
  int num_classes = 0;
  int passes = 0;             // full passes until the fixpoint (last one makes no merge)
  bool fixpoint_clean = false;  // a verification pass performed zero merges
  long long seed_merges = 0;       // unions from conjugation seeding
  long long composite_merges = 0;  // unions from the composition rule
};

Congruence congruence_closure(const CrossedModule& x, int genus);

/// Over flat tuples only: classes generated by "composites of conjugate
/// composable factor pairs agree" where the factors range over all of S^(2g).
struct FlatCongruence {
  std::vector<SurfaceTuple> flats;
  std::vector<int> cls;  // flat index -> dense class id
  int num_classes = 0;
};

FlatCongruence flat_pairwise_congruence(const CrossedModule& x, int genus);

struct ProtectedGroupoidResult {
  FiniteGroupoid groupoid;
  ConjugationOrbits object_orbits;          // over B-tuples
  std::vector<SurfaceTuple> morphism_reps;  // canonical flat semidirect tuple per class
  std::unordered_map<SurfaceTuple, int, TupleHash> class_of_flat;
  /// Empty when the all-of-M congruence and the flat pairwise relation induce
  /// the same partition of flat tuples; a human-readable report otherwise.
  std::string discrepancy;
};

/// The protected groupoid: conjugacy classes of B-representations as objects,
/// congruence classes of flat semidirect tuples as morphisms.
ProtectedGroupoidResult protected_groupoid(const CrossedModule& x, int genus);

/// Fast path for crossed modules with trivial action: morphisms are
/// homomorphisms into A attached to object classes.
FiniteGroupoid protected_groupoid_trivial_action(const CrossedModule& x, int genus);

/// Representation-variety classes for the nerve levels 0..levels with face and
/// degeneracy maps by post-composition. levels <= 2.
struct SimplicialLevels {
  int genus = 0;
  std::vector<FiniteGroup> level_groups;
  std::vector<ConjugationOrbits> level_orbits;
  // face_maps[n][i] : classes at level n -> classes at level n-1 (1 <= n)
  std::vector<std::vector<std::vector<int>>> face_maps;
  // degeneracy_maps[n][i] : classes at level n -> classes at level n+1 (n < levels)
  std::vector<std::vector<std::vector<int>>> degeneracy_maps;

  int class_count(int level) const { return level_orbits[level].count(); }
};

SimplicialLevels simplicial_protected_levels(const CrossedModule& x, int genus, int levels);

}  // namespace hopfkit
