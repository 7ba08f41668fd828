#pragma once

#include <string>
#include <vector>

#include "hopfkit/cat_protected.hpp"
#include "hopfkit/group.hpp"

namespace hopfkit {

/// Word in the free group on the surface generators a1,b1,...,ag,bg:
/// letter +k / -k is generator k-1 / its inverse.
using Word = std::vector<int>;

Word word_inverse(const Word& w);
Word free_reduce(Word w);
Word cyclic_reduce(Word w);
/// Substitutes images[k-1] for generator k.
Word substitute(const Word& w, const std::vector<Word>& images);
/// Conjugacy in the free group: equal cyclic reductions up to rotation.
bool conjugate_in_free_group(const Word& a, const Word& b);

/// The surface relator [b_g^-1,a_g]...[b_1^-1,a_1] as a word.
Word surface_relator(int genus);

/// Automorphism of the surface group given by generator images and the images
/// of the inverse automorphism. Validated on construction: the relator is
/// preserved up to conjugation, and the inverse data is checked by evaluating
/// both composites on every representation of the probe groups S3 and Z4.
struct SurfaceAutomorphism {
  int genus = 1;
  std::vector<Word> images;
  std::vector<Word> inverse_images;
};

SurfaceAutomorphism make_surface_automorphism(int genus, std::vector<Word> images,
                                              std::vector<Word> inverse_images);
SurfaceAutomorphism identity_automorphism(int genus);
SurfaceAutomorphism inverse_automorphism(const SurfaceAutomorphism& a);
/// f after g.
SurfaceAutomorphism compose(const SurfaceAutomorphism& f, const SurfaceAutomorphism& g);

/// The two torus Dehn twist generators: the a-twist sends b to b a^-1, the
/// b-twist sends a to a b; both fix the other generator.
std::pair<SurfaceAutomorphism, SurfaceAutomorphism> torus_twists();

/// (phi |> rho)(w) = rho(phi^-1(w)): evaluates the inverse images on the
/// tuple's entries.
SurfaceTuple act_on_representation(const SurfaceAutomorphism& aut, const SurfaceTuple& t,
                                   const FiniteGroup& g);

/// Permutation the automorphism induces on conjugation classes.
std::vector<int> induced_class_permutation(const SurfaceAutomorphism& aut,
                                           const ConjugationOrbits& orbits, const FiniteGroup& g);

struct TorusRelationReport {
  int class_count = 0;
  bool braid_holds = false;    // Da Db Da == Db Da Db on classes
  bool torsion_holds = false;  // (Da Db Da)^4 == id on classes
};

/// Checks both torus mapping class group relations as induced permutations of
/// the genus-1 representation classes.
TorusRelationReport verify_torus_relations(const FiniteGroup& g);

/// Orbit closure of the group generated by the given permutations.
std::vector<std::vector<int>> orbit_decomposition(const std::vector<std::vector<int>>& generator_perms);

struct GroupoidAction {
  std::vector<int> object_perm;
  std::vector<int> morphism_perm;
  bool well_defined = false;  // class maps are independent of representatives
  bool functorial = false;    // identities and composition preserved
};

/// Action on the protected groupoid by precomposition on representatives.
GroupoidAction act_on_protected_groupoid(const SurfaceAutomorphism& aut, const CrossedModule& x,
                                         int genus, const ProtectedGroupoidResult& pg);

}  // namespace hopfkit
