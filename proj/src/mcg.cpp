#include "hopfkit/mcg.hpp"

#include <algorithm>

namespace hopfkit {

Word word_inverse(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(-*it);
  return out;
}

Word free_reduce(Word w) {
  Word out;
  for (int letter : w) {
    require(letter != 0, errc::input_error, "zero letter in word");
    if (!out.empty() && out.back() == -letter)
      out.pop_back();
    else
      out.push_back(letter);
  }
  return out;
}

Word cyclic_reduce(Word w) {
  w = free_reduce(std::move(w));
  while (w.size() >= 2 && w.front() == -w.back()) {
    w.erase(w.begin());
    w.pop_back();
    w = free_reduce(std::move(w));
  }
  return w;
}

Word substitute(const Word& w, const std::vector<Word>& images) {
  Word out;
  for (int letter : w) {
    int idx = std::abs(letter) - 1;
    require(idx < static_cast<int>(images.size()), errc::input_error,
            "word letter without an image");
    if (letter > 0)
      out.insert(out.end(), images[idx].begin(), images[idx].end());
    else {
      Word inv = word_inverse(images[idx]);
      out.insert(out.end(), inv.begin(), inv.end());
    }
  }
  return free_reduce(std::move(out));
}

bool conjugate_in_free_group(const Word& a, const Word& b) {
  Word ca = cyclic_reduce(a), cb = cyclic_reduce(b);
  if (ca.size() != cb.size()) return false;
  if (ca.empty()) return true;
  for (std::size_t shift = 0; shift < ca.size(); ++shift) {
    bool ok = true;
    for (std::size_t i = 0; i < ca.size() && ok; ++i) ok = ca[(i + shift) % ca.size()] == cb[i];
    if (ok) return true;
  }
  return false;
}

Word surface_relator(int genus) {
  Word relator;
  for (int i = genus; i >= 1; --i) {
    int a = 2 * i - 1, b = 2 * i;
    relator.push_back(-b);
    relator.push_back(a);
    relator.push_back(b);
    relator.push_back(-a);
  }
  return relator;
}

SurfaceTuple act_on_representation(const SurfaceAutomorphism& aut, const SurfaceTuple& t,
                                   const FiniteGroup& g) {
  require(static_cast<int>(t.size()) == 2 * aut.genus, errc::input_error,
          "tuple length does not match the genus");
  SurfaceTuple out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    out[i] = evaluate_word(g, aut.inverse_images[i], t);
  return out;
}

SurfaceAutomorphism make_surface_automorphism(int genus, std::vector<Word> images,
                                              std::vector<Word> inverse_images) {
  require(genus >= 1, errc::input_error, "genus must be at least 1");
  require(static_cast<int>(images.size()) == 2 * genus &&
              static_cast<int>(inverse_images.size()) == 2 * genus,
          errc::input_error, "one image word per generator is required");
  SurfaceAutomorphism aut{genus, std::move(images), std::move(inverse_images)};
  for (const auto& list : {aut.images, aut.inverse_images})
    for (const auto& w : list)
      for (int letter : w)
        require(letter != 0 && std::abs(letter) <= 2 * genus, errc::input_error,
                "image word mentions an unknown generator");
  // the relator must be preserved up to conjugation, in both directions
  Word relator = surface_relator(genus);
  require(conjugate_in_free_group(substitute(relator, aut.images), relator), errc::input_error,
          "images do not preserve the surface relator up to conjugation");
  require(conjugate_in_free_group(substitute(relator, aut.inverse_images), relator),
          errc::input_error,
          "inverse images do not preserve the surface relator up to conjugation");
  // the inverse data must undo the map on every representation of the probes
  SurfaceAutomorphism inv{genus, aut.inverse_images, aut.images};
  for (const auto& probe : {FiniteGroup::symmetric(3), FiniteGroup::cyclic(4)}) {
    for (const auto& rep : enumerate_surface_reps(probe, genus)) {
      SurfaceTuple forward = act_on_representation(aut, rep, probe);
      require(commutator_product(probe, forward) == probe.identity(), errc::input_error,
              "automorphism does not preserve the representation set");
      require(act_on_representation(inv, forward, probe) == rep, errc::input_error,
              "inverse images do not invert the automorphism on representations");
      require(act_on_representation(aut, act_on_representation(inv, rep, probe), probe) == rep,
              errc::input_error,
              "images do not invert the inverse images on representations");
    }
  }
  return aut;
}

SurfaceAutomorphism identity_automorphism(int genus) {
  std::vector<Word> images(2 * genus);
  for (int i = 0; i < 2 * genus; ++i) images[i] = {i + 1};
  return make_surface_automorphism(genus, images, images);
}

SurfaceAutomorphism inverse_automorphism(const SurfaceAutomorphism& a) {
  return SurfaceAutomorphism{a.genus, a.inverse_images, a.images};
}

SurfaceAutomorphism compose(const SurfaceAutomorphism& f, const SurfaceAutomorphism& g) {
  require(f.genus == g.genus, errc::input_error, "genus mismatch");
  std::vector<Word> images(2 * f.genus), inverse_images(2 * f.genus);
  for (int i = 0; i < 2 * f.genus; ++i) {
    images[i] = substitute(g.images[i], f.images);
    inverse_images[i] = substitute(f.inverse_images[i], g.inverse_images);
  }
  return SurfaceAutomorphism{f.genus, std::move(images), std::move(inverse_images)};
}

std::pair<SurfaceAutomorphism, SurfaceAutomorphism> torus_twists() {
  // a-twist: a -> a, b -> b a^-1; b-twist: a -> a b, b -> b
  auto da = make_surface_automorphism(1, {{1}, {2, -1}}, {{1}, {2, 1}});
  auto db = make_surface_automorphism(1, {{1, 2}, {2}}, {{1, -2}, {2}});
  return {da, db};
}

std::vector<int> induced_class_permutation(const SurfaceAutomorphism& aut,
                                           const ConjugationOrbits& orbits, const FiniteGroup& g) {
  std::vector<int> perm(orbits.count(), -1);
  std::vector<bool> hit(orbits.count(), false);
  for (int c = 0; c < orbits.count(); ++c) {
    SurfaceTuple image = act_on_representation(aut, orbits.representative(c), g);
    auto it = orbits.orbit_of.find(image);
    require(it != orbits.orbit_of.end(), errc::internal_invariant,
            "action left the representation classes");
    perm[c] = it->second;
    require(!hit[it->second], errc::internal_invariant, "induced class map is not injective");
    hit[it->second] = true;
  }
  return perm;
}

namespace {

std::vector<int> compose_perm(const std::vector<int>& f, const std::vector<int>& g) {
  std::vector<int> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = f[g[i]];
  return out;
}

}  // namespace

TorusRelationReport verify_torus_relations(const FiniteGroup& g) {
  auto [da, db] = torus_twists();
  auto orbits = conjugation_orbits(enumerate_surface_reps(g, 1), g);
  TorusRelationReport report;
  report.class_count = orbits.count();
  auto pa = induced_class_permutation(da, orbits, g);
  auto pb = induced_class_permutation(db, orbits, g);
  auto aba = compose_perm(pa, compose_perm(pb, pa));
  auto bab = compose_perm(pb, compose_perm(pa, pb));
  report.braid_holds = aba == bab;
  auto fourth = compose_perm(aba, compose_perm(aba, compose_perm(aba, aba)));
  std::vector<int> id(orbits.count());
  for (int i = 0; i < orbits.count(); ++i) id[i] = i;
  report.torsion_holds = fourth == id;
  return report;
}

std::vector<std::vector<int>> orbit_decomposition(const std::vector<std::vector<int>>& generator_perms) {
  if (generator_perms.empty()) return {};
  const int n = static_cast<int>(generator_perms.front().size());
  std::vector<bool> seen(n, false);
  std::vector<std::vector<int>> orbits;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<int> orbit{start};
    seen[start] = true;
    for (std::size_t head = 0; head < orbit.size(); ++head) {
      for (const auto& p : generator_perms) {
        int next = p[orbit[head]];
        if (!seen[next]) {
          seen[next] = true;
          orbit.push_back(next);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    orbits.push_back(std::move(orbit));
  }
  return orbits;
}

GroupoidAction act_on_protected_groupoid(const SurfaceAutomorphism& aut, const CrossedModule& x,
                                         int genus, const ProtectedGroupoidResult& pg) {
  require(aut.genus == genus, errc::input_error, "genus mismatch");
  auto s = semidirect_product(x);
  GroupoidAction action;
  action.object_perm = induced_class_permutation(aut, pg.object_orbits, x.B());

  const int nmor = static_cast<int>(pg.morphism_reps.size());
  action.morphism_perm.assign(nmor, -1);
  action.well_defined = true;
  // map classes through representatives, then confirm every member agrees
  for (int m = 0; m < nmor; ++m) {
    SurfaceTuple image = act_on_representation(aut, pg.morphism_reps[m], s.group);
    auto it = pg.class_of_flat.find(image);
    require(it != pg.class_of_flat.end(), errc::internal_invariant,
            "action left the flat tuples");
    action.morphism_perm[m] = it->second;
  }
  for (const auto& [flat, cls] : pg.class_of_flat) {
    SurfaceTuple image = act_on_representation(aut, flat, s.group);
    if (pg.class_of_flat.at(image) != action.morphism_perm[cls]) {
      action.well_defined = false;
      break;
    }
  }

  const auto& gpd = pg.groupoid;
  action.functorial = action.well_defined;
  for (int o = 0; o < gpd.num_objects() && action.functorial; ++o)
    action.functorial = action.morphism_perm[gpd.identity_at(o)] ==
                        gpd.identity_at(action.object_perm[o]);
  for (int f = 0; f < nmor && action.functorial; ++f)
    for (int g = 0; g < nmor && action.functorial; ++g) {
      if (!gpd.composable(g, f)) continue;
      action.functorial = action.morphism_perm[gpd.compose(g, f)] ==
                          gpd.compose(action.morphism_perm[g], action.morphism_perm[f]);
    }
  return action;
}

}  // namespace hopfkit
