#include "hopfkit/lattice.hpp"

#include <algorithm>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hopfkit {

Labels vertex_action(const RibbonGraph& graph, const FiniteGroup& g, const Labels& labels,
                     int vertex, Elt h) {
  require(vertex >= 0 && vertex < graph.num_vertices(), errc::input_error, "unknown vertex");
  require(static_cast<int>(labels.size()) == graph.num_edges(), errc::input_error,
          "label vector does not match the edge set");
  Labels out = labels;
  for (int e = 0; e < graph.num_edges(); ++e) {
    const auto& ed = graph.edges()[e];
    if (graph.vertex_of_half(ed.tgt_half) == vertex) out[e] = g.mul(h, out[e]);
    if (graph.vertex_of_half(ed.src_half) == vertex) out[e] = g.mul(out[e], g.inv(h));
  }
  return out;
}

Elt face_holonomy(const RibbonGraph& graph, const FiniteGroup& g, const Labels& labels,
                  const FacePath& face) {
  require(static_cast<int>(labels.size()) == graph.num_edges(), errc::input_error,
          "label vector does not match the edge set");
  Elt acc = g.identity();
  for (const Side& s : face.sides) {
    require(s.edge >= 0 && s.edge < graph.num_edges(), errc::input_error,
            "face references an edge that is not in the graph");
    Elt x = s.forward ? labels[s.edge] : g.inv(labels[s.edge]);
    acc = g.mul(x, acc);
  }
  return acc;
}

bool is_flat(const RibbonGraph& graph, const FiniteGroup& g, const Labels& labels) {
  for (const auto& f : graph.faces())
    if (face_holonomy(graph, g, labels, f) != g.identity()) return false;
  return true;
}

namespace {

struct FlatSearch {
  const RibbonGraph& graph;
  const FiniteGroup& g;
  std::vector<FacePath> face_list;
  // face index -> largest edge id occurring on the face
  std::vector<int> face_ready_at;

  FlatSearch(const RibbonGraph& gr, const FiniteGroup& grp) : graph(gr), g(grp) {
    face_list = graph.faces();
    face_ready_at.reserve(face_list.size());
    for (const auto& f : face_list) {
      int m = -1;
      for (const Side& s : f.sides) m = std::max(m, s.edge);
      face_ready_at.push_back(m);
    }
  }

  bool faces_ok(const Labels& partial, int just_assigned) const {
    for (std::size_t fi = 0; fi < face_list.size(); ++fi) {
      if (face_ready_at[fi] != just_assigned) continue;
      Elt acc = g.identity();
      for (const Side& s : face_list[fi].sides) {
        Elt x = s.forward ? partial[s.edge] : g.inv(partial[s.edge]);
        acc = g.mul(x, acc);
      }
      if (acc != g.identity()) return false;
    }
    return true;
  }

  void extend(Labels& partial, int depth, std::vector<Labels>& out) const {
    if (depth == graph.num_edges()) {
      out.push_back(partial);
      return;
    }
    for (int x = 0; x < g.order(); ++x) {
      partial.push_back(static_cast<Elt>(x));
      if (faces_ok(partial, depth)) extend(partial, depth + 1, out);
      partial.pop_back();
    }
  }
};

}  // namespace

std::vector<Labels> flat_configurations(const RibbonGraph& graph, const FiniteGroup& g) {
  if (graph.num_edges() == 0) return {Labels{}};
  FlatSearch search(graph, g);
  std::vector<Labels> out;
  Labels partial;
  partial.reserve(graph.num_edges());
  search.extend(partial, 0, out);
  return out;
}

std::vector<Labels> flat_configurations_parallel(const RibbonGraph& graph, const FiniteGroup& g) {
  if (graph.num_edges() == 0) return {Labels{}};
  FlatSearch search(graph, g);
  const int n = g.order();
  const int depth = graph.num_edges() >= 2 ? 2 : 1;
  const int tasks = depth == 2 ? n * n : n;
  std::vector<std::vector<Labels>> buckets(tasks);
#pragma omp parallel for schedule(dynamic)
  for (int task = 0; task < tasks; ++task) {
    Labels partial;
    partial.reserve(graph.num_edges());
    partial.push_back(static_cast<Elt>(depth == 2 ? task / n : task));
    if (depth == 2) partial.push_back(static_cast<Elt>(task % n));
    bool ok = true;
    for (int d = 0; d < depth && ok; ++d) ok = search.faces_ok(partial, d);
    if (ok) search.extend(partial, depth, buckets[task]);
  }
  std::vector<Labels> out;
  std::size_t total = 0;
  for (const auto& b : buckets) total += b.size();
  out.reserve(total);
  for (auto& b : buckets)
    for (auto& c : b) out.push_back(std::move(c));
  return out;
}

ProtectedSet protected_set(const RibbonGraph& graph, const FiniteGroup& g, bool parallel) {
  auto flats = parallel ? flat_configurations_parallel(graph, g) : flat_configurations(graph, g);
  ProtectedSet result;
  result.flat_count = static_cast<long long>(flats.size());
  std::unordered_map<Labels, int, TupleHash> index;
  index.reserve(flats.size() * 2);
  for (std::size_t i = 0; i < flats.size(); ++i) index.emplace(flats[i], static_cast<int>(i));
  std::vector<bool> done(flats.size(), false);
  std::vector<std::vector<Labels>> orbits;
  for (std::size_t i = 0; i < flats.size(); ++i) {
    if (done[i]) continue;
    // closure under the joint gauge action, one generator (vertex, h) at a time
    std::set<Labels> orbit{flats[i]};
    std::vector<Labels> queue{flats[i]};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int v = 0; v < graph.num_vertices(); ++v) {
        for (int h = 1; h < g.order(); ++h) {
          Labels next = vertex_action(graph, g, queue[head], v, static_cast<Elt>(h));
          if (orbit.insert(next).second) queue.push_back(std::move(next));
        }
      }
    }
    std::vector<Labels> members(orbit.begin(), orbit.end());
    for (const auto& m : members) {
      auto it = index.find(m);
      require(it != index.end(), errc::internal_invariant,
              "gauge action left the flat configuration set");
      done[it->second] = true;
    }
    orbits.push_back(std::move(members));
  }
  std::sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) { return a[0] < b[0]; });
  for (std::size_t oi = 0; oi < orbits.size(); ++oi) {
    result.orbit_reps.push_back(orbits[oi][0]);
    for (const auto& m : orbits[oi]) result.orbit_of[m] = static_cast<int>(oi);
  }
  return result;
}

namespace {

Labels transport_slide(const RibbonGraph& before, const FiniteGroup& g, const Move& m, Labels labels) {
  int along = m.edge;
  int moving_edge = before.edge_of_half(m.moving_half);
  const auto& along_rec = before.edges()[along];
  // Label of the slide edge read in the direction of travel.
  Elt y = (m.via_half == along_rec.src_half) ? labels[along] : g.inv(labels[along]);
  if (m.moving_half == before.edges()[moving_edge].tgt_half)
    labels[moving_edge] = g.mul(y, labels[moving_edge]);
  else
    labels[moving_edge] = g.mul(labels[moving_edge], g.inv(y));
  return labels;
}

}  // namespace

Labels transport(const RibbonGraph& before, const FiniteGroup& g, const Move& m, Labels labels) {
  require(static_cast<int>(labels.size()) == before.num_edges(), errc::input_error,
          "label vector does not match the edge set");
  switch (m.kind) {
    case MoveKind::reverse_edge:
      labels[m.edge] = g.inv(labels[m.edge]);
      return labels;
    case MoveKind::slide_end:
      return transport_slide(before, g, m, std::move(labels));
    case MoveKind::contract_edge: {
      int sv = before.vertex_of_half(before.edges()[m.edge].src_half);
      Elt h = (m.vertex == sv) ? labels[m.edge] : g.inv(labels[m.edge]);
      Labels acted = vertex_action(before, g, labels, m.vertex, h);
      acted.erase(acted.begin() + m.edge);
      return acted;
    }
    case MoveKind::delete_loop:
      labels.erase(labels.begin() + m.edge);
      return labels;
    case MoveKind::insert_loop:
      labels.push_back(g.identity());
      return labels;
    case MoveKind::rotate_cilium:
    case MoveKind::set_face_cilia:
      return labels;
    case MoveKind::relabel_edges: {
      Labels out(labels.size());
      for (std::size_t e = 0; e < labels.size(); ++e) out[m.edge_perm[e]] = labels[e];
      return out;
    }
  }
  fail(errc::internal_invariant, "unknown move kind");
}

Labels transport(const RibbonGraph& before, const FiniteGroup& g, const MoveScript& script,
                 Labels labels) {
  RibbonGraph cur = before;
  for (const auto& m : script) {
    labels = transport(cur, g, m, std::move(labels));
    cur = cur.apply(m);
  }
  return labels;
}

Labels transport_edge_slide(const RibbonGraph& before, const FiniteGroup& g, const Move& slide,
                            Labels labels) {
  require(slide.kind == MoveKind::slide_end, errc::input_error, "not a slide move");
  (void)before.apply(slide);  // reject illegal slides before touching labels
  return transport(before, g, slide, std::move(labels));
}

Labels transport_contraction(const RibbonGraph& before, const FiniteGroup& g, int edge, int towards,
                             Labels labels) {
  Move m;
  m.kind = MoveKind::contract_edge;
  m.edge = edge;
  m.vertex = towards;
  (void)before.apply(m);
  return transport(before, g, m, std::move(labels));
}

Labels transport_loop_deletion(const RibbonGraph& before, const FiniteGroup& g, int edge,
                               Labels labels) {
  Move m;
  m.kind = MoveKind::delete_loop;
  m.edge = edge;
  (void)before.apply(m);
  return transport(before, g, m, std::move(labels));
}

Labels insert_loop_labels(const FiniteGroup& g, Labels labels) {
  labels.push_back(g.identity());
  return labels;
}

ReductionCheck protected_set_via_reduction(const RibbonGraph& graph, const FiniteGroup& g) {
  ReductionCheck check;
  auto [standard, script] = graph.reduce_to_standard();
  check.script = script;
  check.original = protected_set(graph, g);
  check.standard = protected_set(standard, g);
  check.orbit_map.assign(check.original.orbit_count(), -1);
  std::vector<bool> hit(check.standard.orbit_count(), false);
  bool ok = check.original.orbit_count() == check.standard.orbit_count();
  for (int oi = 0; oi < check.original.orbit_count(); ++oi) {
    Labels moved = transport(graph, g, script, check.original.orbit_reps[oi]);
    require(is_flat(standard, g, moved), errc::internal_invariant,
            "transport broke flatness");
    auto it = check.standard.orbit_of.find(moved);
    require(it != check.standard.orbit_of.end(), errc::internal_invariant,
            "transported configuration is not flat on the standard graph");
    check.orbit_map[oi] = it->second;
    if (hit[it->second]) ok = false;
    hit[it->second] = true;
  }
  check.bijection = ok;
  return check;
}

std::pair<long long, long long> module_rank_counts(const RibbonGraph& graph, const FiniteGroup& g) {
  auto p = protected_set(graph, g);
  return {p.flat_count, p.orbit_count()};
}

ProtectedSet protected_set_disjoint(const std::vector<RibbonGraph>& parts, const FiniteGroup& g) {
  std::vector<ProtectedSet> sets;
  sets.reserve(parts.size());
  for (const auto& p : parts) sets.push_back(protected_set(p, g));
  ProtectedSet combined;
  combined.flat_count = 1;
  for (const auto& s : sets) combined.flat_count *= s.flat_count;
  std::vector<Labels> reps{Labels{}};
  for (const auto& s : sets) {
    std::vector<Labels> next;
    next.reserve(reps.size() * s.orbit_reps.size());
    for (const auto& prefix : reps)
      for (const auto& rep : s.orbit_reps) {
        Labels merged = prefix;
        merged.insert(merged.end(), rep.begin(), rep.end());
        next.push_back(std::move(merged));
      }
    reps = std::move(next);
  }
  std::sort(reps.begin(), reps.end());
  combined.orbit_reps = std::move(reps);
  for (std::size_t i = 0; i < combined.orbit_reps.size(); ++i)
    combined.orbit_of[combined.orbit_reps[i]] = static_cast<int>(i);
  return combined;
}

}  // namespace hopfkit
