#include "hopfkit/ribbon.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <sstream>

namespace hopfkit {

RibbonGraph::RibbonGraph(std::vector<VertexRec> vertices, std::vector<EdgeRec> edges,
                         std::map<int, Side> face_cilia)
    : vertices_(std::move(vertices)), edges_(std::move(edges)), face_cilia_(std::move(face_cilia)) {
  rebuild_index();
  validate();
}

void RibbonGraph::rebuild_index() {
  half_pos_.clear();
  half_edge_.clear();
  for (int v = 0; v < num_vertices(); ++v) {
    const auto& rot = vertices_[v].rotation;
    for (int i = 0; i < static_cast<int>(rot.size()); ++i) {
      require(half_pos_.emplace(rot[i], std::make_pair(v, i)).second, errc::schema_violation,
              "half-edge appears twice in the rotation system");
    }
  }
  for (int e = 0; e < num_edges(); ++e) {
    require(edges_[e].src_half != edges_[e].tgt_half, errc::schema_violation,
            "edge with identical half-edges");
    for (int h : {edges_[e].src_half, edges_[e].tgt_half}) {
      require(half_pos_.count(h), errc::schema_violation, "edge references unknown half-edge");
      require(half_edge_.emplace(h, e).second, errc::schema_violation,
              "half-edge belongs to two edges");
    }
  }
  require(half_edge_.size() == half_pos_.size(), errc::schema_violation,
          "rotation system contains half-edges that belong to no edge");
}

void RibbonGraph::validate() const {
  require(num_vertices() >= 1, errc::schema_violation, "graph needs at least one vertex");
  // Euler characteristic must be even on every component.
  (void)genus();
  for (const auto& [face_id, side] : face_cilia_) {
    require(side.edge >= 0 && side.edge < num_edges(), errc::schema_violation,
            "face cilium references unknown edge");
    require(face_id >= 0, errc::schema_violation, "negative face id in face_cilia");
  }
}

int RibbonGraph::vertex_of_half(int half) const {
  auto it = half_pos_.find(half);
  require(it != half_pos_.end(), errc::input_error, "unknown half-edge");
  return it->second.first;
}

int RibbonGraph::position_of_half(int half) const {
  auto it = half_pos_.find(half);
  require(it != half_pos_.end(), errc::input_error, "unknown half-edge");
  return it->second.second;
}

int RibbonGraph::edge_of_half(int half) const {
  auto it = half_edge_.find(half);
  require(it != half_edge_.end(), errc::input_error, "unknown half-edge");
  return it->second;
}

int RibbonGraph::partner(int half) const {
  const auto& e = edges_[edge_of_half(half)];
  return half == e.src_half ? e.tgt_half : e.src_half;
}

bool RibbonGraph::is_loop(int edge) const {
  const auto& e = edges_.at(edge);
  return vertex_of_half(e.src_half) == vertex_of_half(e.tgt_half);
}

int RibbonGraph::next_half_id() const {
  int m = 0;
  for (const auto& [h, _] : half_pos_) m = std::max(m, h + 1);
  return m;
}

std::vector<FacePath> RibbonGraph::faces() const {
  // A side exits through one half-edge; entering along half h, the next side
  // exits through the half directly before h in the cyclic order at h's
  // vertex.
  auto exit_half = [&](Side s) { return s.forward ? edges_[s.edge].src_half : edges_[s.edge].tgt_half; };
  auto side_from_exit = [&](int h) {
    int e = edge_of_half(h);
    return Side{e, h == edges_[e].src_half};
  };
  auto next_side = [&](Side s) {
    int enter = partner(exit_half(s));
    auto [v, pos] = half_pos_.at(enter);
    const auto& rot = vertices_[v].rotation;
    int prev = rot[(pos + rot.size() - 1) % rot.size()];
    return side_from_exit(prev);
  };

  std::vector<FacePath> result;
  std::set<std::pair<int, bool>> visited;
  for (int e = 0; e < num_edges(); ++e) {
    for (bool fwd : {true, false}) {
      if (visited.count({e, fwd})) continue;
      FacePath face;
      Side cur{e, fwd};
      do {
        visited.insert({cur.edge, cur.forward});
        face.sides.push_back(cur);
        cur = next_side(cur);
      } while (!(cur == Side{e, fwd}));
      result.push_back(std::move(face));
    }
  }
  for (int v = 0; v < num_vertices(); ++v) {
    if (vertices_[v].rotation.empty()) {
      FacePath face;
      face.isolated_vertex = v;
      result.push_back(std::move(face));
    }
  }
  for (const auto& [face_id, start] : face_cilia_) {
    require(face_id < static_cast<int>(result.size()), errc::input_error,
            "face cilium for unknown face");
    auto& sides = result[face_id].sides;
    auto it = std::find(sides.begin(), sides.end(), start);
    require(it != sides.end(), errc::input_error, "face cilium side not on the face");
    std::rotate(sides.begin(), it, sides.end());
  }
  return result;
}

std::vector<int> RibbonGraph::components() const {
  std::vector<int> parent(num_vertices());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges_) {
    int a = find(vertex_of_half(e.src_half)), b = find(vertex_of_half(e.tgt_half));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> comp(num_vertices(), -1);
  int next = 0;
  for (int v = 0; v < num_vertices(); ++v) {
    int r = find(v);
    if (comp[r] < 0) comp[r] = next++;
    comp[v] = comp[r];
  }
  return comp;
}

std::vector<std::pair<int, int>> RibbonGraph::genus() const {
  auto comp = components();
  int ncomp = comp.empty() ? 0 : *std::max_element(comp.begin(), comp.end()) + 1;
  std::vector<int> v(ncomp, 0), e(ncomp, 0), f(ncomp, 0);
  for (int i = 0; i < num_vertices(); ++i) v[comp[i]]++;
  for (const auto& ed : edges_) e[comp[vertex_of_half(ed.src_half)]]++;
  for (const auto& face : faces()) {
    int c = face.isolated() ? comp[face.isolated_vertex]
                            : comp[vertex_of_half(edges_[face.sides[0].edge].src_half)];
    f[c]++;
  }
  std::vector<std::pair<int, int>> out;
  for (int c = 0; c < ncomp; ++c) {
    int chi = v[c] - e[c] + f[c];
    require((2 - chi) % 2 == 0, errc::internal_invariant, "odd Euler defect");
    out.emplace_back(c, (2 - chi) / 2);
  }
  return out;
}

RibbonGraph RibbonGraph::reverse_edge(int edge) const {
  require(edge >= 0 && edge < num_edges(), errc::input_error, "unknown edge");
  auto vs = vertices_;
  auto es = edges_;
  std::swap(es[edge].src_half, es[edge].tgt_half);
  return RibbonGraph(std::move(vs), std::move(es));
}

Move RibbonGraph::resolve_slide(int moving_half, int along_edge) const {
  require(along_edge >= 0 && along_edge < num_edges(), errc::input_error, "unknown edge");
  require(edge_of_half(moving_half) != along_edge, errc::illegal_move,
          "an edge end cannot slide along its own edge");
  auto [v, pos] = half_pos_.at(moving_half);
  const auto& rot = vertices_[v].rotation;
  int len = static_cast<int>(rot.size());
  int before = rot[(pos + len - 1) % len];
  int after = rot[(pos + 1) % len];
  for (int via : {before, after}) {
    if (via != moving_half && edge_of_half(via) == along_edge) {
      Move m;
      m.kind = MoveKind::slide_end;
      m.edge = along_edge;
      m.moving_half = moving_half;
      m.via_half = via;
      m.moving_is_succ = (via == before);
      return m;
    }
  }
  fail(errc::illegal_move, "moving end is not adjacent to an end of the slide edge");
}

RibbonGraph RibbonGraph::slide_end(int moving_half, int along_edge, int via_half,
                                   bool moving_is_succ) const {
  require(along_edge >= 0 && along_edge < num_edges(), errc::input_error, "unknown edge");
  const auto& along = edges_[along_edge];
  require(via_half == along.src_half || via_half == along.tgt_half, errc::illegal_move,
          "via half does not belong to the slide edge");
  require(edge_of_half(moving_half) != along_edge, errc::illegal_move,
          "an edge end cannot slide along its own edge");
  auto [v, mpos] = half_pos_.at(moving_half);
  require(vertex_of_half(via_half) == v, errc::illegal_move,
          "moving end and via end are at different vertices");
  const auto& rot = vertices_[v].rotation;
  int len = static_cast<int>(rot.size());
  int expect = moving_is_succ ? rot[(position_of_half(via_half) + 1) % len]
                              : rot[(position_of_half(via_half) + len - 1) % len];
  require(expect == moving_half, errc::illegal_move,
          "moving end is not the stated cyclic neighbour of the via end");

  auto vs = vertices_;
  auto& vrot = vs[v].rotation;
  vrot.erase(vrot.begin() + mpos);
  int dest = partner(via_half);
  int dv = vertex_of_half(dest);
  auto& drot = vs[dv].rotation;
  int dpos = static_cast<int>(std::find(drot.begin(), drot.end(), dest) - drot.begin());
  // The end travels along one side of the edge's ribbon: a successor at this
  // end arrives as a predecessor at the far end and vice versa.
  drot.insert(drot.begin() + (moving_is_succ ? dpos : dpos + 1), moving_half);
  return RibbonGraph(std::move(vs), edges_);
}

RibbonGraph RibbonGraph::contract_edge(int edge, int towards_vertex) const {
  require(edge >= 0 && edge < num_edges(), errc::input_error, "unknown edge");
  require(!is_loop(edge), errc::illegal_move, "cannot contract a loop");
  int sv = vertex_of_half(edges_[edge].src_half);
  int tv = vertex_of_half(edges_[edge].tgt_half);
  require(towards_vertex == sv || towards_vertex == tv, errc::illegal_move,
          "contraction target is not an endpoint");
  int gone = towards_vertex;             // cilium of this endpoint is erased
  int keep = (gone == sv) ? tv : sv;
  int half_gone = (gone == sv) ? edges_[edge].src_half : edges_[edge].tgt_half;
  int half_keep = (gone == sv) ? edges_[edge].tgt_half : edges_[edge].src_half;

  const auto& grot = vertices_[gone].rotation;
  int gpos = position_of_half(half_gone);
  std::vector<int> splice;
  for (int i = 1; i < static_cast<int>(grot.size()); ++i)
    splice.push_back(grot[(gpos + i) % grot.size()]);

  std::vector<VertexRec> vs;
  vs.reserve(vertices_.size() - 1);
  for (int v = 0; v < num_vertices(); ++v) {
    if (v == gone) continue;
    if (v == keep) {
      VertexRec nv;
      for (int h : vertices_[v].rotation) {
        if (h == half_keep)
          nv.rotation.insert(nv.rotation.end(), splice.begin(), splice.end());
        else
          nv.rotation.push_back(h);
      }
      vs.push_back(std::move(nv));
    } else {
      vs.push_back(vertices_[v]);
    }
  }
  std::vector<EdgeRec> es;
  es.reserve(edges_.size() - 1);
  for (int e = 0; e < num_edges(); ++e)
    if (e != edge) es.push_back(edges_[e]);
  return RibbonGraph(std::move(vs), std::move(es));
}

RibbonGraph RibbonGraph::delete_isolated_loop(int edge) const {
  require(edge >= 0 && edge < num_edges(), errc::input_error, "unknown edge");
  require(is_loop(edge), errc::illegal_move, "edge is not a loop");
  int v = vertex_of_half(edges_[edge].src_half);
  const auto& rot = vertices_[v].rotation;
  int len = static_cast<int>(rot.size());
  int p = position_of_half(edges_[edge].src_half);
  int q = position_of_half(edges_[edge].tgt_half);
  require((p + 1) % len == q || (q + 1) % len == p, errc::illegal_move,
          "loop ends are not cyclic neighbours");
  auto vs = vertices_;
  auto& vrot = vs[v].rotation;
  vrot.erase(std::remove_if(vrot.begin(), vrot.end(),
                            [&](int h) { return h == edges_[edge].src_half || h == edges_[edge].tgt_half; }),
             vrot.end());
  std::vector<EdgeRec> es;
  for (int e = 0; e < num_edges(); ++e)
    if (e != edge) es.push_back(edges_[e]);
  return RibbonGraph(std::move(vs), std::move(es));
}

RibbonGraph RibbonGraph::insert_isolated_loop(int vertex, int position, const std::string& name) const {
  require(vertex >= 0 && vertex < num_vertices(), errc::input_error, "unknown vertex");
  const auto& rot = vertices_[vertex].rotation;
  require(position >= 0 && position <= static_cast<int>(rot.size()), errc::input_error,
          "insertion position out of range");
  int hs = next_half_id();
  auto vs = vertices_;
  auto es = edges_;
  vs[vertex].rotation.insert(vs[vertex].rotation.begin() + position, {hs, hs + 1});
  es.push_back(EdgeRec{hs, hs + 1, name.empty() ? "loop" + std::to_string(num_edges()) : name});
  return RibbonGraph(std::move(vs), std::move(es));
}

RibbonGraph RibbonGraph::rotate_cilium(int vertex, int amount) const {
  require(vertex >= 0 && vertex < num_vertices(), errc::input_error, "unknown vertex");
  auto vs = vertices_;
  auto& rot = vs[vertex].rotation;
  if (!rot.empty()) {
    int k = ((amount % static_cast<int>(rot.size())) + static_cast<int>(rot.size())) %
            static_cast<int>(rot.size());
    std::rotate(rot.begin(), rot.begin() + k, rot.end());
  }
  return RibbonGraph(std::move(vs), edges_, face_cilia_);
}

RibbonGraph RibbonGraph::relabel_edges(const std::vector<int>& perm,
                                       const std::vector<std::string>& names) const {
  require(static_cast<int>(perm.size()) == num_edges(), errc::input_error,
          "relabeling permutation has wrong length");
  std::vector<bool> hit(num_edges(), false);
  for (int p : perm) {
    require(p >= 0 && p < num_edges() && !hit[p], errc::input_error, "relabeling is not a permutation");
    hit[p] = true;
  }
  std::unordered_map<int, int> half_map;
  std::vector<EdgeRec> es(num_edges());
  for (int e = 0; e < num_edges(); ++e) {
    int ne = perm[e];
    half_map[edges_[e].src_half] = 2 * ne;
    half_map[edges_[e].tgt_half] = 2 * ne + 1;
    es[ne] = EdgeRec{2 * ne, 2 * ne + 1,
                     ne < static_cast<int>(names.size()) ? names[ne] : edges_[e].name};
  }
  auto vs = vertices_;
  for (auto& v : vs)
    for (auto& h : v.rotation) h = half_map.at(h);
  std::map<int, Side> fc;
  for (const auto& [fid, side] : face_cilia_) fc[fid] = Side{perm[side.edge], side.forward};
  return RibbonGraph(std::move(vs), std::move(es), std::move(fc));
}

RibbonGraph RibbonGraph::with_face_cilia(std::map<int, Side> face_cilia) const {
  return RibbonGraph(vertices_, edges_, std::move(face_cilia));
}

RibbonGraph RibbonGraph::split_vertex(int vertex, int first_pos, int count,
                                      const std::string& name) const {
  require(vertex >= 0 && vertex < num_vertices(), errc::input_error, "unknown vertex");
  const auto& rot = vertices_[vertex].rotation;
  int len = static_cast<int>(rot.size());
  require(first_pos >= 0 && first_pos < std::max(1, len) && count >= 0 && count <= len,
          errc::input_error, "split interval out of range");
  int hs = next_half_id();
  std::vector<int> moved, stay;
  for (int i = 0; i < len; ++i) {
    int idx = (first_pos + i) % len;
    (i < count ? moved : stay).push_back(rot[idx]);
  }
  auto vs = vertices_;
  // New source end takes the interval's place in the remaining cyclic order.
  std::vector<int> nrot;
  if (first_pos + count <= len) {
    for (int i = 0; i < first_pos; ++i) nrot.push_back(rot[i]);
    nrot.push_back(hs);
    for (int i = first_pos + count; i < len; ++i) nrot.push_back(rot[i]);
  } else {
    nrot = stay;
    nrot.push_back(hs);
  }
  vs[vertex].rotation = std::move(nrot);
  VertexRec nv;
  nv.rotation.push_back(hs + 1);
  nv.rotation.insert(nv.rotation.end(), moved.begin(), moved.end());
  vs.push_back(std::move(nv));
  auto es = edges_;
  es.push_back(EdgeRec{hs, hs + 1, name.empty() ? "split" + std::to_string(num_edges()) : name});
  return RibbonGraph(std::move(vs), std::move(es));
}

RibbonGraph RibbonGraph::apply(const Move& m) const {
  switch (m.kind) {
    case MoveKind::reverse_edge: return reverse_edge(m.edge);
    case MoveKind::slide_end: return slide_end(m.moving_half, m.edge, m.via_half, m.moving_is_succ);
    case MoveKind::contract_edge: return contract_edge(m.edge, m.vertex);
    case MoveKind::delete_loop: return delete_isolated_loop(m.edge);
    case MoveKind::insert_loop: return insert_isolated_loop(m.vertex, m.position);
    case MoveKind::rotate_cilium: return rotate_cilium(m.vertex, m.position);
    case MoveKind::relabel_edges: return relabel_edges(m.edge_perm, m.edge_names);
    case MoveKind::set_face_cilia: return with_face_cilia(m.face_cilia);
  }
  fail(errc::internal_invariant, "unknown move kind");
}

RibbonGraph RibbonGraph::apply(const MoveScript& script) const {
  RibbonGraph g = *this;
  for (const auto& m : script) g = g.apply(m);
  return g;
}

RibbonGraph RibbonGraph::standard_graph(int genus) {
  require(genus >= 0, errc::input_error, "genus must be nonnegative");
  if (genus == 0) return isolated_vertex();
  auto src = [](int e) { return 2 * e; };
  auto tgt = [](int e) { return 2 * e + 1; };
  auto a = [](int i) { return 2 * (i - 1); };  // edge id of a_i
  auto b = [](int i) { return 2 * i - 1; };    // edge id of b_i
  VertexRec v;
  v.rotation = {src(a(1)), tgt(b(1)), tgt(a(1))};
  for (int i = genus; i >= 2; --i) {
    v.rotation.push_back(src(b(i)));
    v.rotation.push_back(src(a(i)));
    v.rotation.push_back(tgt(b(i)));
    v.rotation.push_back(tgt(a(i)));
  }
  v.rotation.push_back(src(b(1)));
  std::vector<EdgeRec> es(2 * genus);
  for (int i = 1; i <= genus; ++i) {
    es[a(i)] = EdgeRec{src(a(i)), tgt(a(i)), "a" + std::to_string(i)};
    es[b(i)] = EdgeRec{src(b(i)), tgt(b(i)), "b" + std::to_string(i)};
  }
  // Face cilium at (a1, backward): the unique face then reads exactly
  // [b_g^-1,a_g]...[b_1^-1,a_1].
  return RibbonGraph({v}, std::move(es), {{0, Side{0, false}}});
}

RibbonGraph RibbonGraph::isolated_vertex() { return RibbonGraph({VertexRec{}}, {}); }

bool operator==(const RibbonGraph& a, const RibbonGraph& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges()) return false;
  for (int v = 0; v < a.num_vertices(); ++v)
    if (a.vertices_[v].rotation != b.vertices_[v].rotation) return false;
  for (int e = 0; e < a.num_edges(); ++e) {
    if (a.edges_[e].src_half != b.edges_[e].src_half || a.edges_[e].tgt_half != b.edges_[e].tgt_half ||
        a.edges_[e].name != b.edges_[e].name)
      return false;
  }
  return a.face_cilia_ == b.face_cilia_;
}

std::pair<RibbonGraph, MoveScript> RibbonGraph::reduce_to_standard() const {
  for (int c : components())
    require(c == 0, errc::input_error, "reduce_to_standard requires a connected graph");

  MoveScript script;
  RibbonGraph g = *this;
  auto emit = [&](Move m) {
    g = g.apply(m);
    script.push_back(std::move(m));
  };
  auto slide = [&](int moving, int along, int via, bool succ) {
    Move m;
    m.kind = MoveKind::slide_end;
    m.edge = along;
    m.moving_half = moving;
    m.via_half = via;
    m.moving_is_succ = succ;
    emit(std::move(m));
  };

  // Spanning tree by BFS from vertex 0, neighbours visited in edge-id order;
  // each tree edge is contracted towards the child so the root keeps its
  // cilium.
  {
    std::vector<std::tuple<int, int, int>> tree;  // (edge, parent, child)
    std::vector<bool> seen(num_vertices(), false);
    std::vector<int> queue{0};
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int v = queue[head];
      for (int e = 0; e < num_edges(); ++e) {
        int a = vertex_of_half(edges_[e].src_half);
        int b = vertex_of_half(edges_[e].tgt_half);
        int other = a == v ? b : (b == v ? a : -1);
        if (other < 0 || other == v || seen[other]) continue;
        seen[other] = true;
        tree.emplace_back(e, v, other);
        queue.push_back(other);
      }
    }
    std::vector<int> vmap(num_vertices()), emap(num_edges());
    std::iota(vmap.begin(), vmap.end(), 0);
    std::iota(emap.begin(), emap.end(), 0);
    for (auto [e, p, c] : tree) {
      int ce = emap[e], cc = vmap[c];
      Move m;
      m.kind = MoveKind::contract_edge;
      m.edge = ce;
      m.vertex = cc;
      emit(std::move(m));
      emap[e] = -1;
      for (auto& x : emap)
        if (x > ce) --x;
      vmap[c] = -1;
      for (auto& x : vmap)
        if (x > cc) --x;
      vmap[c] = vmap[p];
    }
  }
  require(g.num_vertices() == 1, errc::internal_invariant, "tree contraction left several vertices");

  // Chord-diagram normalization at the single vertex. Finished interlocked
  // quadruples [y x y' x'] accumulate at the front of the linear order;
  // everything is tracked through stable half-edge ids.
  std::vector<std::array<int, 4>> blocks;
  int fb = 0;
  auto rot = [&]() -> const std::vector<int>& { return g.vertices()[0].rotation; };
  while (fb < static_cast<int>(rot().size())) {
    int u = rot()[fb];
    int X = g.edge_of_half(u);
    int up = g.partner(u);
    int pu = g.position_of_half(up);
    require(pu > fb, errc::internal_invariant, "finished prefix lost a chord end");
    if (pu == fb + 1) {
      Move m;
      m.kind = MoveKind::delete_loop;
      m.edge = X;
      emit(std::move(m));
      continue;
    }
    int zpos = -1;
    for (int p = fb + 1; p < pu && zpos < 0; ++p)
      if (g.position_of_half(g.partner(rot()[p])) > pu) zpos = p;
    if (zpos < 0) {
      // Nothing crosses this chord; hop its far end inward past the chord
      // ending directly before it. The enclosed interval shrinks strictly.
      int c = rot()[pu - 1];
      slide(up, g.edge_of_half(c), c, /*succ=*/true);
      continue;
    }
    int z = rot()[zpos];
    int Z = g.edge_of_half(z);
    while (rot()[fb + 1] != z) slide(rot()[fb + 1], X, u, true);
    while (rot()[fb + 2] != up) slide(rot()[fb + 2], Z, z, true);
    slide(up, Z, z, true);
    while (rot()[fb + 2] != up) {
      int j = rot()[fb + 2];
      slide(j, Z, z, true);
      slide(j, X, up, true);
      for (int bi = static_cast<int>(blocks.size()) - 1; bi >= 0; --bi) {
        auto [y, x, yb, xb] = blocks[bi];
        slide(j, g.edge_of_half(x), xb, true);
        slide(j, g.edge_of_half(y), y, true);
        slide(j, g.edge_of_half(x), x, true);
        slide(j, g.edge_of_half(y), yb, true);
      }
      Move m;
      m.kind = MoveKind::rotate_cilium;
      m.vertex = 0;
      m.position = 1;
      emit(std::move(m));
    }
    if (u != g.edges()[X].src_half) {
      Move m;
      m.kind = MoveKind::reverse_edge;
      m.edge = X;
      emit(std::move(m));
    }
    if (z != g.edges()[Z].src_half) {
      Move m;
      m.kind = MoveKind::reverse_edge;
      m.edge = Z;
      emit(std::move(m));
    }
    blocks.push_back({u, z, up, g.partner(z)});
    fb += 4;
  }

  int genus = static_cast<int>(blocks.size());
  if (genus > 0) {
    // Block j in rotation order carries handle 1 for j = 0 and handle
    // genus - j + 1 afterwards; y plays b, x plays a.
    std::vector<int> perm(g.num_edges(), -1);
    std::vector<std::string> names(2 * genus);
    for (int j = 0; j < genus; ++j) {
      int handle = j == 0 ? 1 : genus - j + 1;
      int ey = g.edge_of_half(blocks[j][0]);
      int ex = g.edge_of_half(blocks[j][1]);
      perm[ey] = 2 * handle - 1;
      perm[ex] = 2 * handle - 2;
      names[2 * handle - 1] = "b" + std::to_string(handle);
      names[2 * handle - 2] = "a" + std::to_string(handle);
    }
    Move rel;
    rel.kind = MoveKind::relabel_edges;
    rel.edge_perm = std::move(perm);
    rel.edge_names = std::move(names);
    emit(std::move(rel));
    Move cil;
    cil.kind = MoveKind::rotate_cilium;
    cil.vertex = 0;
    cil.position = 1;
    emit(std::move(cil));
    Move fc;
    fc.kind = MoveKind::set_face_cilia;
    fc.face_cilia = {{0, Side{0, false}}};
    emit(std::move(fc));
  }
  require(g == standard_graph(genus), errc::internal_invariant,
          "reduction did not reach the standard graph");
  return {g, script};
}

std::string RibbonGraph::to_dot() const {
  std::ostringstream out;
  out << "graph ribbon {\n";
  auto face_list = faces();
  for (std::size_t f = 0; f < face_list.size(); ++f) {
    out << "  // face " << f << ":";
    if (face_list[f].isolated()) {
      out << " isolated vertex v" << face_list[f].isolated_vertex;
    } else {
      for (const Side& s : face_list[f].sides) {
        const auto& name = edges_[s.edge].name;
        out << " " << (name.empty() ? "e" + std::to_string(s.edge) : name)
            << (s.forward ? "+" : "-");
      }
    }
    out << "\n";
  }
  for (int v = 0; v < num_vertices(); ++v) out << "  v" << v << " [shape=point];\n";
  for (int e = 0; e < num_edges(); ++e) {
    out << "  v" << vertex_of_half(edges_[e].src_half) << " -- v" << vertex_of_half(edges_[e].tgt_half)
        << " [label=\"" << (edges_[e].name.empty() ? "e" + std::to_string(e) : edges_[e].name)
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

RibbonGraph disjoint_union(const std::vector<RibbonGraph>& parts) {
  require(!parts.empty(), errc::input_error, "disjoint union of nothing");
  std::vector<VertexRec> vs;
  std::vector<EdgeRec> es;
  int half_off = 0;
  for (const auto& p : parts) {
    int local_max = 0;
    for (const auto& v : p.vertices()) {
      VertexRec nv;
      for (int h : v.rotation) {
        nv.rotation.push_back(h + half_off);
        local_max = std::max(local_max, h + 1);
      }
      vs.push_back(std::move(nv));
    }
    for (const auto& e : p.edges())
      es.push_back(EdgeRec{e.src_half + half_off, e.tgt_half + half_off, e.name});
    half_off += local_max;
  }
  return RibbonGraph(std::move(vs), std::move(es));
}

RibbonGraph torus_two_vertex_graph() {
  // Two vertices, three parallel edges, rotations aligned so there is a
  // single face; attaching a disc to it gives a torus.
  std::vector<VertexRec> vs{{/*rotation=*/{0, 2, 4}}, {{1, 3, 5}}};
  std::vector<EdgeRec> es{{0, 1, "p"}, {2, 3, "q"}, {4, 5, "r"}};
  return RibbonGraph(std::move(vs), std::move(es));
}

RibbonGraph theta_graph() {
  std::vector<VertexRec> vs{{{0, 2, 4}}, {{1, 5, 3}}};
  std::vector<EdgeRec> es{{0, 1, "p"}, {2, 3, "q"}, {4, 5, "r"}};
  return RibbonGraph(std::move(vs), std::move(es));
}

}  // namespace hopfkit
