#pragma once

#include <unordered_map>
#include <vector>

#include "hopfkit/group.hpp"
#include "hopfkit/ribbon.hpp"

namespace hopfkit {

/// Edge labelling of a ribbon graph by group elements, indexed by edge id.
using Labels = std::vector<Elt>;

/// Gauge action at a vertex: incoming ends multiply the label by h on the
/// left, outgoing ends by h^-1 on the right; loops are conjugated. Cilium
/// independent.
Labels vertex_action(const RibbonGraph& graph, const FiniteGroup& g, const Labels& labels,
                     int vertex, Elt h);

/// Ordered product of the labels along the face, later sides multiplying on
/// the left; sides traversed against orientation contribute inverses.
/// Isolated faces give the identity.
Elt face_holonomy(const RibbonGraph& graph, const FiniteGroup& g, const Labels& labels,
                  const FacePath& face);

bool is_flat(const RibbonGraph& graph, const FiniteGroup& g, const Labels& labels);

/// All labellings with identity holonomy on every face, in lexicographic
/// order. Backtracking prunes as soon as a face is fully labelled.
std::vector<Labels> flat_configurations(const RibbonGraph& graph, const FiniteGroup& g);
/// OpenMP variant partitioned by the first edge's label; identical output.
std::vector<Labels> flat_configurations_parallel(const RibbonGraph& graph, const FiniteGroup& g);

struct ProtectedSet {
  long long flat_count = 0;
  std::vector<Labels> orbit_reps;  // lexicographically minimal member per orbit, sorted
  std::unordered_map<Labels, int, TupleHash> orbit_of;

  int orbit_count() const { return static_cast<int>(orbit_reps.size()); }
};

/// Flat configurations modulo the joint gauge action of G^V.
ProtectedSet protected_set(const RibbonGraph& graph, const FiniteGroup& g, bool parallel = true);

/// Configuration transport along a single move / a whole script. The graph
/// argument is the graph the move applies to.
Labels transport(const RibbonGraph& before, const FiniteGroup& g, const Move& move, Labels labels);
Labels transport(const RibbonGraph& before, const FiniteGroup& g, const MoveScript& script,
                 Labels labels);

/// Lattice-level wrappers for the individual transports.
Labels transport_edge_slide(const RibbonGraph& before, const FiniteGroup& g, const Move& slide,
                            Labels labels);
Labels transport_contraction(const RibbonGraph& before, const FiniteGroup& g, int edge, int towards,
                             Labels labels);
Labels transport_loop_deletion(const RibbonGraph& before, const FiniteGroup& g, int edge,
                               Labels labels);
Labels insert_loop_labels(const FiniteGroup& g, Labels labels);

struct ReductionCheck {
  ProtectedSet original;
  ProtectedSet standard;
  MoveScript script;
  std::vector<int> orbit_map;  // orbit index on the original -> orbit index on the standard graph
  bool bijection = false;
};

/// Reduces the graph, pushes every flat orbit representative through the move
/// script and verifies the induced map of orbit sets is a bijection.
ReductionCheck protected_set_via_reduction(const RibbonGraph& graph, const FiniteGroup& g);

/// (number of flat configurations, number of gauge orbits); the orbit count is
/// simultaneously the free rank of the group-algebra module and of its dual.
std::pair<long long, long long> module_rank_counts(const RibbonGraph& graph, const FiniteGroup& g);

/// Protected set of a disjoint union: cartesian product of the per-component
/// protected sets on the disjoint-union graph's edge numbering.
ProtectedSet protected_set_disjoint(const std::vector<RibbonGraph>& parts, const FiniteGroup& g);

}  // namespace hopfkit
