#include "hopfkit/cat_protected.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace hopfkit {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(long long n) : parent(n) {
    for (long long i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
};

// Dense index over S^(2g); the first coordinate is the most significant digit
// so index order equals lexicographic tuple order.
struct TupleSpace {
  int order;
  int len;
  long long total;

  TupleSpace(int group_order, int length) : order(group_order), len(length) {
    total = 1;
    for (int i = 0; i < len; ++i) {
      total *= order;
      require(total <= (1ll << 22), errc::resource_limit,
              "tuple space too large to enumerate");
    }
  }
  long long encode(const SurfaceTuple& t) const {
    long long idx = 0;
    for (int i = 0; i < len; ++i) idx = idx * order + t[i];
    return idx;
  }
  SurfaceTuple decode(long long idx) const {
    SurfaceTuple t(len);
    for (int i = len - 1; i >= 0; --i) {
      t[i] = static_cast<Elt>(idx % order);
      idx /= order;
    }
    return t;
  }
};

std::vector<int> dense_class_ids(Dsu& dsu, long long n, int* num_classes) {
  std::vector<int> cls(n, -1);
  std::unordered_map<int, int> root_to_id;
  int next = 0;
  for (long long i = 0; i < n; ++i) {
    int r = dsu.find(static_cast<int>(i));
    auto it = root_to_id.find(r);
    if (it == root_to_id.end()) it = root_to_id.emplace(r, next++).first;
    cls[i] = it->second;
  }
  *num_classes = next;
  return cls;
}

std::string tuple_label(const FiniteGroup& g, const SurfaceTuple& t) {
  std::string out = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ",";
    out += g.name_of(t[i]);
  }
  return out + ")";
}

}  // namespace

SurfaceTuple morphism_source(const SemidirectProduct& s, const CrossedModule&,
                             const SurfaceTuple& t) {
  SurfaceTuple out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) out[i] = s.b_part(t[i]);
  return out;
}

SurfaceTuple morphism_target(const SemidirectProduct& s, const CrossedModule& x,
                             const SurfaceTuple& t) {
  SurfaceTuple out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i)
    out[i] = x.B().mul(x.boundary(s.a_part(t[i])), s.b_part(t[i]));
  return out;
}

SurfaceTuple morphism_compose(const SemidirectProduct& s, const CrossedModule& x,
                              const SurfaceTuple& second, const SurfaceTuple& first) {
  require(second.size() == first.size(), errc::input_error, "tuple lengths differ");
  require(morphism_source(s, x, second) == morphism_target(s, x, first), errc::input_error,
          "morphism tuples are not composable");
  SurfaceTuple out(first.size());
  for (std::size_t i = 0; i < first.size(); ++i)
    out[i] = s.encode(x.A().mul(s.a_part(second[i]), s.a_part(first[i])), s.b_part(first[i]));
  return out;
}

SurfaceTuple morphism_inverse(const SemidirectProduct& s, const CrossedModule& x,
                              const SurfaceTuple& t) {
  SurfaceTuple out(t.size());
  for (std::size_t i = 0; i < t.size(); ++i) {
    Elt a = s.a_part(t[i]), b = s.b_part(t[i]);
    out[i] = s.encode(x.A().inv(a), x.B().mul(x.boundary(a), b));
  }
  return out;
}

CoinvariantGroupoid coinvariant_groupoid(const CrossedModule& x, int genus) {
  CoinvariantGroupoid result;
  result.s = semidirect_product(x);
  result.objects = enumerate_surface_reps(x.B(), genus);
  result.morphisms = enumerate_surface_reps_parallel(result.s.group, genus);
  std::unordered_map<SurfaceTuple, int, TupleHash> obj_index;
  for (std::size_t i = 0; i < result.objects.size(); ++i)
    obj_index[result.objects[i]] = static_cast<int>(i);
  for (const auto& m : result.morphisms) {
    auto si = obj_index.find(morphism_source(result.s, x, m));
    auto ti = obj_index.find(morphism_target(result.s, x, m));
    require(si != obj_index.end() && ti != obj_index.end(), errc::internal_invariant,
            "morphism endpoint does not satisfy the surface relation in B");
    result.src.push_back(si->second);
    result.tgt.push_back(ti->second);
  }
  return result;
}

Congruence congruence_closure(const CrossedModule& x, int genus) {
  auto s = semidirect_product(x);
  const int len = 2 * genus;
  TupleSpace space(s.group.order(), len);
  Congruence result;
  result.num_tuples = space.total;
  Dsu dsu(space.total);

  // seed: simultaneous conjugation orbits
  for (long long idx = 0; idx < space.total; ++idx) {
    auto t = space.decode(idx);
    for (int h = 0; h < s.group.order(); ++h) {
      SurfaceTuple conj(len);
      for (int i = 0; i < len; ++i) conj[i] = s.group.conj(static_cast<Elt>(h), t[i]);
      if (dsu.unite(static_cast<int>(idx), static_cast<int>(space.encode(conj))))
        ++result.seed_merges;
    }
  }

  // endpoint tables over B-tuples
  const int nb = x.B().order();
  long long nobj = 1;
  for (int i = 0; i < len; ++i) nobj *= nb;
  std::vector<long long> src_enc(space.total), tgt_enc(space.total);
  for (long long idx = 0; idx < space.total; ++idx) {
    auto t = space.decode(idx);
    long long se = 0, te = 0;
    for (int i = 0; i < len; ++i) {
      Elt b = s.b_part(t[i]);
      Elt tb = x.B().mul(x.boundary(s.a_part(t[i])), b);
      se = se * nb + b;
      te = te * nb + tb;
    }
    src_enc[idx] = se;
    tgt_enc[idx] = te;
  }
  std::unordered_map<long long, std::vector<long long>> by_src, by_tgt;
  for (long long idx = 0; idx < space.total; ++idx) {
    by_src[src_enc[idx]].push_back(idx);
    by_tgt[tgt_enc[idx]].push_back(idx);
  }
  std::vector<long long> middles;
  for (const auto& [m, _] : by_tgt)
    if (by_src.count(m)) middles.push_back(m);
  std::sort(middles.begin(), middles.end());

  auto compose_idx = [&](long long f2, long long f1) {
    auto a = space.decode(f1), b = space.decode(f2);
    SurfaceTuple out(len);
    for (int i = 0; i < len; ++i)
      out[i] = s.encode(x.A().mul(s.a_part(b[i]), s.a_part(a[i])), s.b_part(a[i]));
    return space.encode(out);
  };

  auto run_pass = [&]() {
    long long merges = 0;
    std::map<std::pair<int, int>, int> composite_of;
    for (long long m : middles) {
      for (long long f1 : by_tgt.at(m)) {
        for (long long f2 : by_src.at(m)) {
          int key1 = dsu.find(static_cast<int>(f1));
          int key2 = dsu.find(static_cast<int>(f2));
          int comp = dsu.find(static_cast<int>(compose_idx(f2, f1)));
          auto [it, inserted] = composite_of.try_emplace({key1, key2}, comp);
          if (!inserted && dsu.unite(it->second, comp)) ++merges;
        }
      }
    }
    return merges;
  };

  result.passes = 0;
  while (true) {
    ++result.passes;
    long long merges = run_pass();
    result.composite_merges += merges;
    if (merges == 0) break;
  }
  result.fixpoint_clean = run_pass() == 0;
  result.cls = dense_class_ids(dsu, space.total, &result.num_classes);
  return result;
}

FlatCongruence flat_pairwise_congruence(const CrossedModule& x, int genus) {
  auto s = semidirect_product(x);
  const int len = 2 * genus;
  TupleSpace space(s.group.order(), len);
  FlatCongruence result;
  result.flats = enumerate_surface_reps_parallel(s.group, genus);
  std::unordered_map<long long, int> flat_index;
  for (std::size_t i = 0; i < result.flats.size(); ++i)
    flat_index[space.encode(result.flats[i])] = static_cast<int>(i);

  // conjugation classes over all of S^(2g)
  Dsu conj_dsu(space.total);
  for (long long idx = 0; idx < space.total; ++idx) {
    auto t = space.decode(idx);
    for (int h = 0; h < s.group.order(); ++h) {
      SurfaceTuple conj(len);
      for (int i = 0; i < len; ++i) conj[i] = s.group.conj(static_cast<Elt>(h), t[i]);
      conj_dsu.unite(static_cast<int>(idx), static_cast<int>(space.encode(conj)));
    }
  }

  Dsu dsu(static_cast<long long>(result.flats.size()));
  // conjugate flat tuples are identified (factor the identity off one side)
  for (std::size_t i = 0; i < result.flats.size(); ++i) {
    for (int h = 0; h < s.group.order(); ++h) {
      SurfaceTuple conj(len);
      for (int j = 0; j < len; ++j) conj[j] = s.group.conj(static_cast<Elt>(h), result.flats[i][j]);
      dsu.unite(static_cast<int>(i), flat_index.at(space.encode(conj)));
    }
  }

  std::vector<long long> src_enc(space.total), tgt_enc(space.total);
  const int nb = x.B().order();
  for (long long idx = 0; idx < space.total; ++idx) {
    auto t = space.decode(idx);
    long long se = 0, te = 0;
    for (int i = 0; i < len; ++i) {
      Elt b = s.b_part(t[i]);
      se = se * nb + b;
      te = te * nb + x.B().mul(x.boundary(s.a_part(t[i])), b);
    }
    src_enc[idx] = se;
    tgt_enc[idx] = te;
  }
  std::unordered_map<long long, std::vector<long long>> by_src, by_tgt;
  for (long long idx = 0; idx < space.total; ++idx) {
    by_src[src_enc[idx]].push_back(idx);
    by_tgt[tgt_enc[idx]].push_back(idx);
  }
  std::map<std::pair<int, int>, int> composite_of;
  std::vector<long long> middles;
  for (const auto& [m, _] : by_tgt)
    if (by_src.count(m)) middles.push_back(m);
  std::sort(middles.begin(), middles.end());
  for (long long m : middles) {
    for (long long f1 : by_tgt.at(m)) {
      for (long long f2 : by_src.at(m)) {
        auto a = space.decode(f1), b = space.decode(f2);
        SurfaceTuple out(len);
        for (int i = 0; i < len; ++i)
          out[i] = s.encode(x.A().mul(s.a_part(b[i]), s.a_part(a[i])), s.b_part(a[i]));
        auto it = flat_index.find(space.encode(out));
        if (it == flat_index.end()) continue;  // composite not flat
        std::pair<int, int> key{conj_dsu.find(static_cast<int>(f1)),
                                conj_dsu.find(static_cast<int>(f2))};
        auto [slot, inserted] = composite_of.try_emplace(key, it->second);
        if (!inserted) dsu.unite(slot->second, it->second);
      }
    }
  }
  result.cls = dense_class_ids(dsu, static_cast<long long>(result.flats.size()),
                               &result.num_classes);
  return result;
}

ProtectedGroupoidResult protected_groupoid(const CrossedModule& x, int genus) {
  ProtectedGroupoidResult result;
  auto s = semidirect_product(x);
  const int len = 2 * genus;
  TupleSpace space(s.group.order(), len);

  result.object_orbits = conjugation_orbits(enumerate_surface_reps(x.B(), genus), x.B());
  const int nobj = result.object_orbits.count();

  auto cong = congruence_closure(x, genus);
  auto flats = enumerate_surface_reps_parallel(s.group, genus);

  // morphism classes = congruence classes meeting the flat set
  std::map<int, std::vector<int>> members_by_class;  // congruence class -> flat indices
  for (std::size_t i = 0; i < flats.size(); ++i)
    members_by_class[cong.cls[space.encode(flats[i])]].push_back(static_cast<int>(i));
  std::vector<std::pair<SurfaceTuple, int>> ordered;  // (canonical flat member, class)
  for (const auto& [c, members] : members_by_class) ordered.emplace_back(flats[members[0]], c);
  std::sort(ordered.begin(), ordered.end());

  const int nmor = static_cast<int>(ordered.size());
  std::vector<MorphismRec> morphisms(nmor);
  for (int mi = 0; mi < nmor; ++mi) {
    result.morphism_reps.push_back(ordered[mi].first);
    int src_class = -1, tgt_class = -1;
    for (int fi : members_by_class.at(ordered[mi].second)) {
      int sc = result.object_orbits.orbit_of.at(morphism_source(s, x, flats[fi]));
      int tc = result.object_orbits.orbit_of.at(morphism_target(s, x, flats[fi]));
      if (src_class < 0) {
        src_class = sc;
        tgt_class = tc;
      } else {
        require(sc == src_class && tc == tgt_class, errc::internal_invariant,
                "congruence class with inconsistent endpoints");
      }
      result.class_of_flat[flats[fi]] = mi;
    }
    morphisms[mi] = MorphismRec{src_class, tgt_class, tuple_label(s.group, ordered[mi].first)};
  }

  // identities
  std::vector<int> identities(nobj, -1);
  for (int o = 0; o < nobj; ++o) {
    const auto& rep = result.object_orbits.representative(o);
    SurfaceTuple id_tuple(len);
    for (int i = 0; i < len; ++i) id_tuple[i] = s.encode(x.A().identity(), rep[i]);
    identities[o] = result.class_of_flat.at(id_tuple);
  }

  // induced composition: conjugate the second factor's representative until
  // its source matches, scanning conjugators in element order
  std::map<std::pair<int, int>, int> compose;
  for (int m1 = 0; m1 < nmor; ++m1) {
    for (int m2 = 0; m2 < nmor; ++m2) {
      if (morphisms[m1].tgt != morphisms[m2].src) continue;
      const auto& f1 = result.morphism_reps[m1];
      SurfaceTuple want = morphism_target(s, x, f1);
      int composed = -1;
      for (int h = 0; h < s.group.order() && composed < 0; ++h) {
        SurfaceTuple f2(len);
        for (int i = 0; i < len; ++i)
          f2[i] = s.group.conj(static_cast<Elt>(h), result.morphism_reps[m2][i]);
        if (morphism_source(s, x, f2) != want) continue;
        composed = result.class_of_flat.at(morphism_compose(s, x, f2, f1));
      }
      require(composed >= 0, errc::internal_invariant,
              "no endpoint-matched representative for a composable class pair");
      compose[{m2, m1}] = composed;
    }
  }

  std::vector<std::string> labels(nobj);
  for (int o = 0; o < nobj; ++o) labels[o] = "C" + std::to_string(o + 1);
  result.groupoid =
      FiniteGroupoid(std::move(labels), std::move(morphisms), std::move(identities), std::move(compose));

  // cross-check the flat pairwise relation against the all-of-M congruence
  auto flat_rel = flat_pairwise_congruence(x, genus);
  std::map<int, int> seen;  // flat-relation class -> congruence morphism class
  bool agree = flat_rel.num_classes == nmor;
  for (std::size_t i = 0; i < flats.size() && agree; ++i) {
    int mine = result.class_of_flat.at(flats[i]);
    auto [it, inserted] = seen.try_emplace(flat_rel.cls[i], mine);
    if (!inserted && it->second != mine) agree = false;
  }
  if (!agree) {
    std::ostringstream report;
    report << "pairwise relation on flat tuples yields " << flat_rel.num_classes
           << " classes, the full congruence restricted to flat tuples yields " << nmor;
    result.discrepancy = report.str();
  }
  return result;
}

FiniteGroupoid protected_groupoid_trivial_action(const CrossedModule& x, int genus) {
  require(x.action_is_trivial(), errc::input_error, "fast path requires a trivial action");
  const int len = 2 * genus;
  auto object_orbits = conjugation_orbits(enumerate_surface_reps(x.B(), genus), x.B());
  auto cocycles = enumerate_surface_reps(x.A(), genus);
  const int nobj = object_orbits.count();
  std::unordered_map<SurfaceTuple, int, TupleHash> cocycle_index;
  for (std::size_t i = 0; i < cocycles.size(); ++i)
    cocycle_index[cocycles[i]] = static_cast<int>(i);

  auto target_of = [&](int obj, const SurfaceTuple& phi) {
    const auto& rep = object_orbits.representative(obj);
    SurfaceTuple out(len);
    for (int i = 0; i < len; ++i) out[i] = x.B().mul(x.boundary(phi[i]), rep[i]);
    return object_orbits.orbit_of.at(out);
  };

  const int nmor = nobj * static_cast<int>(cocycles.size());
  std::vector<MorphismRec> morphisms(nmor);
  std::vector<int> identities(nobj, -1);
  auto enc = [&](int obj, int phi) { return obj * static_cast<int>(cocycles.size()) + phi; };
  for (int o = 0; o < nobj; ++o) {
    for (std::size_t p = 0; p < cocycles.size(); ++p) {
      int id = enc(o, static_cast<int>(p));
      morphisms[id].src = o;
      morphisms[id].tgt = target_of(o, cocycles[p]);
      morphisms[id].label = "C" + std::to_string(o + 1) + ":" + tuple_label(x.A(), cocycles[p]);
      SurfaceTuple trivial(len, x.A().identity());
      if (cocycles[p] == trivial) identities[o] = id;
    }
  }
  std::map<std::pair<int, int>, int> compose;
  for (int f = 0; f < nmor; ++f) {
    int fo = f / static_cast<int>(cocycles.size());
    const auto& fphi = cocycles[f % cocycles.size()];
    for (int g = 0; g < nmor; ++g) {
      if (morphisms[f].tgt != morphisms[g].src) continue;
      const auto& gphi = cocycles[g % cocycles.size()];
      SurfaceTuple prod(len);
      for (int i = 0; i < len; ++i) prod[i] = x.A().mul(gphi[i], fphi[i]);
      compose[{g, f}] = enc(fo, cocycle_index.at(prod));
    }
  }
  std::vector<std::string> labels(nobj);
  for (int o = 0; o < nobj; ++o) labels[o] = "C" + std::to_string(o + 1);
  return FiniteGroupoid(std::move(labels), std::move(morphisms), std::move(identities),
                        std::move(compose));
}

SimplicialLevels simplicial_protected_levels(const CrossedModule& x, int genus, int levels) {
  require(levels >= 0 && levels <= 2, errc::resource_limit,
          "simplicial levels are bounded by 2");
  SimplicialLevels out;
  out.genus = genus;
  for (int n = 0; n <= levels; ++n) {
    auto grp = NerveLevel(x, n).as_group();
    out.level_orbits.push_back(conjugation_orbits(enumerate_surface_reps(grp, genus), grp));
    out.level_groups.push_back(std::move(grp));
  }
  out.face_maps.resize(levels + 1);
  out.degeneracy_maps.resize(levels + 1);
  for (int n = 0; n <= levels; ++n) {
    NerveLevel level(x, n);
    if (n >= 1) {
      out.face_maps[n].assign(n + 1, {});
      for (int i = 0; i <= n; ++i) {
        auto& column = out.face_maps[n][i];
        column.resize(out.level_orbits[n].count());
        for (int c = 0; c < out.level_orbits[n].count(); ++c) {
          const auto& rep = out.level_orbits[n].representative(c);
          SurfaceTuple image(rep.size());
          for (std::size_t k = 0; k < rep.size(); ++k)
            image[k] = static_cast<Elt>(level.face(i, rep[k]));
          column[c] = out.level_orbits[n - 1].orbit_of.at(image);
        }
      }
    }
    if (n < levels) {
      out.degeneracy_maps[n].assign(n + 1, {});
      for (int i = 0; i <= n; ++i) {
        auto& column = out.degeneracy_maps[n][i];
        column.resize(out.level_orbits[n].count());
        for (int c = 0; c < out.level_orbits[n].count(); ++c) {
          const auto& rep = out.level_orbits[n].representative(c);
          SurfaceTuple image(rep.size());
          for (std::size_t k = 0; k < rep.size(); ++k)
            image[k] = static_cast<Elt>(level.degeneracy(i, rep[k]));
          column[c] = out.level_orbits[n + 1].orbit_of.at(image);
        }
      }
    }
  }
  return out;
}

}  // namespace hopfkit
