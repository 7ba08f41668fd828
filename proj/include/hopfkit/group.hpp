#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfkit/common.hpp"

namespace hopfkit {

/// Finite group backed by a full multiplication table. Elements are dense
/// indices 0..order-1 with the identity always at index 0 for groups built by
/// the named constructors; groups loaded from explicit tables keep their own
/// identity index.
class FiniteGroup {
 public:
  FiniteGroup() = default;

  /// Builds from an explicit table. Checks the group axioms: associativity is
  /// exhaustive up to order 512 and spot-checked on 10,000 deterministic
  /// triples above that.
  static FiniteGroup from_mult_table(const std::vector<std::vector<int>>& table,
                                     std::vector<std::string> names = {});

  /// Closure of a set of permutations of {0..degree-1} under composition.
  /// Element names use cycle notation.
  static FiniteGroup from_permutations(int degree, const std::vector<std::vector<int>>& generators);

  static FiniteGroup trivial();
  static FiniteGroup cyclic(int n);
  static FiniteGroup symmetric(int n);  // n <= 5
  static FiniteGroup dihedral(int n);   // order 2n, n >= 3
  static FiniteGroup alternating(int n);  // n <= 5
  static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

  int order() const { return static_cast<int>(inv_.size()); }
  Elt identity() const { return identity_; }
  Elt mul(Elt a, Elt b) const { return mult_[static_cast<std::size_t>(a) * order() + b]; }
  Elt inv(Elt a) const { return inv_[a]; }
  Elt conj(Elt h, Elt x) const { return mul(mul(h, x), inv(h)); }
  Elt power(Elt a, long long k) const;
  int element_order(Elt a) const;
  bool is_abelian() const;

  const std::string& name_of(Elt a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  void set_name(const std::string& n) { group_name_ = n; }
  const std::string& name() const { return group_name_; }

  bool same_table(const FiniteGroup& other) const {
    return mult_ == other.mult_ && identity_ == other.identity_;
  }

 private:
  Elt identity_ = 0;
  std::vector<Elt> mult_;  // row-major order x order
  std::vector<Elt> inv_;
  std::vector<std::string> names_;
  std::string group_name_;

  void finish_tables();  // derives identity/inverses, validates axioms
};

/// Group homomorphism given by its full image table.
struct GroupHom {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<Elt> images;

  GroupHom() = default;
  GroupHom(FiniteGroup src, FiniteGroup tgt, std::vector<Elt> imgs);

  Elt operator()(Elt x) const { return images[x]; }
};

/// (H, embedding into G) for the subgroup generated by `generators`.
std::pair<FiniteGroup, std::vector<Elt>> subgroup(const FiniteGroup& g,
                                                  const std::vector<Elt>& generators);

/// Ordered tuple (a1,b1,...,ag,bg) of element indices.
using SurfaceTuple = std::vector<Elt>;

/// [b_g^-1, a_g] ... [b_1^-1, a_1] with [x,y] = x y x^-1 y^-1.
Elt commutator_product(const FiniteGroup& g, const SurfaceTuple& t);

/// Finitely presented group: relators are words over the generators,
/// letter +k / -k meaning generator k-1 / its inverse (k >= 1).
struct Presentation {
  int generators = 0;
  std::vector<std::vector<int>> relators;
};

Presentation surface_presentation(int genus);
Presentation free_presentation(int generators);

Elt evaluate_word(const FiniteGroup& g, const std::vector<int>& word, const std::vector<Elt>& images);

/// All assignments of generator images satisfying every relator, in
/// lexicographic order of the image tuples. Backtracking with relator pruning.
std::vector<std::vector<Elt>> enumerate_homs(const Presentation& p, const FiniteGroup& g);

/// OpenMP variant partitioned by the first generator's image. Output is
/// identical to enumerate_homs regardless of thread count.
std::vector<std::vector<Elt>> enumerate_homs_parallel(const Presentation& p, const FiniteGroup& g);

/// Tuples with identity commutator product, lexicographically ordered.
std::vector<SurfaceTuple> enumerate_surface_reps(const FiniteGroup& g, int genus);
std::vector<SurfaceTuple> enumerate_surface_reps_parallel(const FiniteGroup& g, int genus);

struct ConjugationOrbits {
  std::vector<std::vector<SurfaceTuple>> orbits;     // each sorted, orbit[0] is the canonical rep
  std::unordered_map<SurfaceTuple, int, TupleHash> orbit_of;

  int count() const { return static_cast<int>(orbits.size()); }
  const SurfaceTuple& representative(int i) const { return orbits[i][0]; }
};

/// Partition of `tuples` under simultaneous conjugation. The input must be
/// closed under conjugation. Orbits are sorted by their lexicographically
/// minimal representative.
ConjugationOrbits conjugation_orbits(const std::vector<SurfaceTuple>& tuples, const FiniteGroup& g);

/// Exact isomorphism test by backtracking over generator images.
bool group_isomorphic(const FiniteGroup& g, const FiniteGroup& h);

/// Greedy minimal generating sequence (deterministic).
std::vector<Elt> generating_set(const FiniteGroup& g);

}  // namespace hopfkit
