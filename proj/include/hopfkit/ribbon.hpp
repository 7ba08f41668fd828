#pragma once

#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfkit/common.hpp"

namespace hopfkit {

/// One directed traversal of an edge: forward = source to target.
struct Side {
  int edge = 0;
  bool forward = true;

  friend bool operator==(const Side&, const Side&) = default;
  friend auto operator<=>(const Side& a, const Side& b) {
    if (a.edge != b.edge) return a.edge <=> b.edge;
    return (a.forward ? 0 : 1) <=> (b.forward ? 0 : 1);
  }
};

/// Closed maximal-left-turn path; sides are listed in traversal order starting
/// at the face cilium. Isolated vertices yield faces with no sides.
struct FacePath {
  std::vector<Side> sides;
  int isolated_vertex = -1;  // >= 0 for the face of an isolated vertex

  bool isolated() const { return isolated_vertex >= 0; }
};

struct VertexRec {
  // Linear order of half-edge ids; the cilium sits before rotation[0].
  std::vector<int> rotation;
};

struct EdgeRec {
  int src_half = 0;
  int tgt_half = 0;
  std::string name;
};

enum class MoveKind {
  reverse_edge,
  slide_end,
  contract_edge,
  delete_loop,
  insert_loop,
  rotate_cilium,
  relabel_edges,
  set_face_cilia,
};

/// One graph transformation, recorded against the graph it was applied to.
struct Move {
  MoveKind kind;
  int edge = -1;         // reverse_edge, contract_edge, delete_loop, insert_loop, slide_end (along-edge)
  int moving_half = -1;  // slide_end
  int via_half = -1;     // slide_end: the along-edge end the moving end is adjacent to
  bool moving_is_succ = true;  // slide_end: moving end directly after via (else directly before)
  int vertex = -1;       // contract_edge (towards), insert_loop, rotate_cilium
  int position = 0;      // insert_loop (rotation index), rotate_cilium (left-rotation amount)
  std::vector<int> edge_perm;             // relabel_edges: old id -> new id
  std::vector<std::string> edge_names;    // relabel_edges: names indexed by new id
  std::map<int, Side> face_cilia;         // set_face_cilia
};

using MoveScript = std::vector<Move>;

/// Ribbon graph: rotation system with per-vertex cilia plus optional face
/// cilia. Value type; all transformations return new graphs.
class RibbonGraph {
 public:
  RibbonGraph() = default;
  RibbonGraph(std::vector<VertexRec> vertices, std::vector<EdgeRec> edges,
              std::map<int, Side> face_cilia = {});

  /// One-vertex, 2g-edge, one-face graph presenting the genus-g surface; the
  /// single face's holonomy word is [b_g^-1,a_g]...[b_1^-1,a_1]. Genus 0 is an
  /// isolated vertex.
  static RibbonGraph standard_graph(int genus);
  static RibbonGraph isolated_vertex();

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<VertexRec>& vertices() const { return vertices_; }
  const std::vector<EdgeRec>& edges() const { return edges_; }
  const std::map<int, Side>& face_cilia() const { return face_cilia_; }

  int vertex_of_half(int half) const;
  int position_of_half(int half) const;
  int edge_of_half(int half) const;
  int partner(int half) const;
  bool is_loop(int edge) const;

  /// Faces as orbits of the side-successor map: entering a vertex along half
  /// h, the path exits along the half immediately preceding h in the cyclic
  /// order. Deterministic: side-faces in order of their minimal side, then
  /// isolated vertices. face_cilia overrides rotate the starting side.
  std::vector<FacePath> faces() const;

  /// vertex -> connected component id (components numbered by smallest vertex).
  std::vector<int> components() const;
  /// (component id, genus), ordered by component id.
  std::vector<std::pair<int, int>> genus() const;

  // Graph moves. Each validates its precondition and returns the new graph.
  RibbonGraph reverse_edge(int edge) const;
  /// Slides the end adjacent to via_half to the other end of along_edge,
  /// landing on the same side of the edge's ribbon. An insertion at the
  /// cilium position lands directly after the cilium; callers that need the
  /// other reading rotate the cilium explicitly (configuration transport is
  /// cilium independent either way).
  RibbonGraph slide_end(int moving_half, int along_edge, int via_half, bool moving_is_succ) const;
  /// Resolves via/side automatically when unambiguous.
  Move resolve_slide(int moving_half, int along_edge) const;
  RibbonGraph contract_edge(int edge, int towards_vertex) const;
  RibbonGraph delete_isolated_loop(int edge) const;
  RibbonGraph insert_isolated_loop(int vertex, int position, const std::string& name = "") const;
  RibbonGraph rotate_cilium(int vertex, int amount) const;
  RibbonGraph relabel_edges(const std::vector<int>& perm, const std::vector<std::string>& names) const;
  RibbonGraph with_face_cilia(std::map<int, Side> face_cilia) const;

  /// Inverse of contract_edge, used to generate test graphs: detaches `count`
  /// rotation entries starting at `first_pos` into a new vertex joined by a
  /// new edge (oriented old vertex -> new vertex).
  RibbonGraph split_vertex(int vertex, int first_pos, int count, const std::string& name = "") const;

  RibbonGraph apply(const Move& m) const;
  RibbonGraph apply(const MoveScript& script) const;

  /// Standard graph of the component's genus plus the move script that takes
  /// *this to it. Requires a connected graph.
  std::pair<RibbonGraph, MoveScript> reduce_to_standard() const;

  std::string to_dot() const;

  friend bool operator==(const RibbonGraph& a, const RibbonGraph& b);

 private:
  std::vector<VertexRec> vertices_;
  std::vector<EdgeRec> edges_;
  std::map<int, Side> face_cilia_;
  std::unordered_map<int, std::pair<int, int>> half_pos_;  // half -> (vertex, index)
  std::unordered_map<int, int> half_edge_;                 // half -> edge

  void rebuild_index();
  void validate() const;
  int next_half_id() const;
};

RibbonGraph disjoint_union(const std::vector<RibbonGraph>& parts);

/// Two-vertex, three-edge, one-face torus graph used as a worked input.
RibbonGraph torus_two_vertex_graph();
/// Planar theta graph: two vertices, three parallel edges, three faces.
RibbonGraph theta_graph();

}  // namespace hopfkit
