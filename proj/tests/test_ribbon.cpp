#include <doctest.h>

#include <set>

#include "hopfkit/common.hpp"
#include "hopfkit/ribbon.hpp"

using namespace hopfkit;

namespace {

// Deterministic random ribbon graph produced by growing the standard graph of
// the requested genus with vertex splits, loop insertions, slides and
// reversals.
RibbonGraph scrambled_graph(int genus, int extra_edges, std::uint64_t seed) {
  RibbonGraph g = RibbonGraph::standard_graph(genus);
  SplitMix64 rng(seed);
  for (int i = 0; i < extra_edges; ++i) {
    if (rng.below(2) == 0) {
      // split some vertex
      int v = static_cast<int>(rng.below(g.num_vertices()));
      int len = static_cast<int>(g.vertices()[v].rotation.size());
      if (len == 0) {
        g = g.insert_isolated_loop(v, 0);
        continue;
      }
      int first = static_cast<int>(rng.below(len));
      int count = static_cast<int>(rng.below(len + 1));
      g = g.split_vertex(v, first, count);
    } else {
      int v = static_cast<int>(rng.below(g.num_vertices()));
      int len = static_cast<int>(g.vertices()[v].rotation.size());
      g = g.insert_isolated_loop(v, len == 0 ? 0 : static_cast<int>(rng.below(len + 1)));
    }
  }
  // shuffle with structure-preserving moves
  for (int i = 0; i < 30; ++i) {
    int kind = static_cast<int>(rng.below(2));
    if (kind == 0 && g.num_edges() > 0) {
      g = g.reverse_edge(static_cast<int>(rng.below(g.num_edges())));
    } else if (g.num_edges() > 1) {
      // try a random slide; skip when the picked end has no legal slide
      int v = static_cast<int>(rng.below(g.num_vertices()));
      int len = static_cast<int>(g.vertices()[v].rotation.size());
      if (len < 2) continue;
      int moving = g.vertices()[v].rotation[rng.below(len)];
      int pos = g.position_of_half(moving);
      int via = g.vertices()[v].rotation[(pos + 1 + rng.below(2) * (len - 2)) % len];
      if (g.edge_of_half(via) == g.edge_of_half(moving)) continue;
      bool succ = g.vertices()[v].rotation[(g.position_of_half(via) + 1) % len] == moving;
      bool pred = g.vertices()[v].rotation[(g.position_of_half(via) + len - 1) % len] == moving;
      if (!succ && !pred) continue;
      g = g.slide_end(moving, g.edge_of_half(via), via, succ);
    }
  }
  return g;
}

int total_genus(const RibbonGraph& g) {
  int sum = 0;
  for (auto [c, gen] : g.genus()) sum += gen;
  return sum;
}

}  // namespace

TEST_CASE("faces of the standard graphs") {
  for (int genus : {1, 2, 3}) {
    auto g = RibbonGraph::standard_graph(genus);
    auto fs = g.faces();
    REQUIRE(fs.size() == 1);
    CHECK(static_cast<int>(fs[0].sides.size()) == 4 * genus);
    std::set<std::pair<int, bool>> sides;
    for (const Side& s : fs[0].sides) CHECK(sides.insert({s.edge, s.forward}).second);
    CHECK(sides.size() == 2u * g.num_edges());
    CHECK(g.genus() == std::vector<std::pair<int, int>>{{0, genus}});
  }
}

TEST_CASE("one-vertex graph with interleaved pair ordering s(a)<s(b)<t(a)<t(b) has one face") {
  std::vector<VertexRec> vs{{{0, 2, 1, 3}}};
  std::vector<EdgeRec> es{{0, 1, "a"}, {2, 3, "b"}};
  RibbonGraph g(std::move(vs), std::move(es));
  CHECK(g.faces().size() == 1);
  CHECK(g.genus() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("isolated vertex is a sphere with one isolated face") {
  auto g = RibbonGraph::isolated_vertex();
  auto fs = g.faces();
  REQUIRE(fs.size() == 1);
  CHECK(fs[0].isolated());
  CHECK(g.genus() == std::vector<std::pair<int, int>>{{0, 0}});
}

TEST_CASE("theta graph is planar with three faces") {
  auto g = theta_graph();
  CHECK(g.faces().size() == 3);
  CHECK(g.genus() == std::vector<std::pair<int, int>>{{0, 0}});
}

TEST_CASE("two-vertex torus graph has a single face") {
  auto g = torus_two_vertex_graph();
  CHECK(g.faces().size() == 1);
  CHECK(g.genus() == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("face sides partition the directed sides") {
  for (std::uint64_t seed : {1ull, 2ull, 3ull}) {
    auto g = scrambled_graph(2, 3, seed);
    std::set<std::pair<int, bool>> sides;
    std::size_t total = 0;
    for (const auto& f : g.faces()) {
      total += f.sides.size();
      for (const Side& s : f.sides) CHECK(sides.insert({s.edge, s.forward}).second);
    }
    CHECK(total == 2u * g.num_edges());
  }
}

TEST_CASE("graph validation rejects malformed input") {
  // half-edge in two rotations
  CHECK_THROWS_AS(RibbonGraph({{{0, 1}}, {{1, 2}}}, {{0, 1, ""}, {2, 3, ""}}), error);
  // edge with only one half
  CHECK_THROWS_AS(RibbonGraph({{{0, 0}}}, {{0, 0, ""}}), error);
  // dangling half-edge
  CHECK_THROWS_AS(RibbonGraph({{{0, 1, 2}}}, {{0, 1, ""}}), error);
}

TEST_CASE("edge reversal is an involution") {
  auto g = torus_two_vertex_graph();
  for (int e = 0; e < g.num_edges(); ++e) CHECK(g.reverse_edge(e).reverse_edge(e) == g);
}

TEST_CASE("slides invert and preserve genus") {
  auto g = RibbonGraph::standard_graph(2);
  // slide end 3 = t(b1), adjacent successor of 0 = s(a1), along a1
  auto m = g.resolve_slide(3, 0);
  CHECK(m.via_half == 0);
  auto g2 = g.apply(m);
  CHECK(total_genus(g2) == 2);
  // inverse slide: same end comes back along the same edge
  auto back = g2.resolve_slide(3, 0);
  auto g3 = g2.apply(back);
  CHECK(g3.vertices()[0].rotation == g.vertices()[0].rotation);
  CHECK(total_genus(g3) == 2);
}

TEST_CASE("illegal moves are rejected") {
  auto g = RibbonGraph::standard_graph(1);
  CHECK_THROWS_AS(g.contract_edge(0, 0), error);          // loops cannot contract
  CHECK_THROWS_AS(g.delete_isolated_loop(0), error);      // ends are not adjacent
  CHECK_THROWS_AS(g.slide_end(0, 0, 1, true), error);     // cannot slide along own edge
  auto torus = torus_two_vertex_graph();
  CHECK_THROWS_AS(torus.contract_edge(0, 5), error);      // not an endpoint
}

TEST_CASE("genus is invariant under random move sequences") {
  int trials = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    for (int genus : {0, 1, 2}) {
      auto g = scrambled_graph(genus, 3, seed * 977 + genus);
      if (g.num_edges() > 12) continue;
      SplitMix64 rng(seed * 31 + genus);
      int before = total_genus(g);
      for (int step = 0; step < 25; ++step) {
        int kind = static_cast<int>(rng.below(3));
        if (kind == 0 && g.num_edges() > 0) {
          g = g.reverse_edge(static_cast<int>(rng.below(g.num_edges())));
        } else if (kind == 1) {
          // contract the first non-loop edge, if any
          int pick = -1;
          for (int e = 0; e < g.num_edges(); ++e)
            if (!g.is_loop(e)) {
              pick = e;
              break;
            }
          if (pick < 0) continue;
          int sv = g.vertex_of_half(g.edges()[pick].src_half);
          int tv = g.vertex_of_half(g.edges()[pick].tgt_half);
          g = g.contract_edge(pick, rng.below(2) ? sv : tv);
        } else if (g.num_edges() > 1) {
          int v = static_cast<int>(rng.below(g.num_vertices()));
          int len = static_cast<int>(g.vertices()[v].rotation.size());
          if (len < 2) continue;
          int moving = g.vertices()[v].rotation[rng.below(len)];
          Move m;
          try {
            m = g.resolve_slide(moving, g.edge_of_half(
                                            g.vertices()[v].rotation[rng.below(len)]));
          } catch (const error&) {
            continue;
          }
          g = g.apply(m);
        }
        CHECK(total_genus(g) == before);
        ++trials;
      }
    }
  }
  CHECK(trials > 500);
}

TEST_CASE("reduction of the standard graph is the identity script") {
  for (int genus : {0, 1, 2, 3}) {
    auto g = RibbonGraph::standard_graph(genus);
    auto [std_g, script] = g.reduce_to_standard();
    CHECK(std_g == g);
  }
}

TEST_CASE("reduction of named graphs") {
  SUBCASE("two-vertex torus graph reduces to the genus-1 standard graph") {
    auto [std_g, script] = torus_two_vertex_graph().reduce_to_standard();
    CHECK(std_g == RibbonGraph::standard_graph(1));
    CHECK(torus_two_vertex_graph().apply(script) == std_g);
  }
  SUBCASE("theta graph reduces to an isolated vertex") {
    auto [std_g, script] = theta_graph().reduce_to_standard();
    CHECK(std_g == RibbonGraph::standard_graph(0));
  }
  SUBCASE("disconnected input is rejected") {
    auto two = disjoint_union({theta_graph(), theta_graph()});
    CHECK_THROWS_AS(two.reduce_to_standard(), error);
  }
}

TEST_CASE("reduction handles scrambled graphs and replays bit-for-bit") {
  for (std::uint64_t seed = 1; seed <= 25; ++seed) {
    for (int genus : {0, 1, 2}) {
      auto g = scrambled_graph(genus, 4, seed * 131 + genus);
      auto [std_g, script] = g.reduce_to_standard();
      CHECK(std_g == RibbonGraph::standard_graph(genus));
      CHECK(g.apply(script) == std_g);
    }
  }
}

TEST_CASE("split then contract is the identity on the rotation system") {
  auto g = RibbonGraph::standard_graph(2);
  auto split = g.split_vertex(0, 2, 3);
  REQUIRE(split.num_vertices() == 2);
  int e = split.num_edges() - 1;
  auto back = split.contract_edge(e, 1);
  CHECK(back.vertices()[0].rotation == g.vertices()[0].rotation);
}

TEST_CASE("disjoint unions keep per-component genus") {
  auto g = disjoint_union({RibbonGraph::standard_graph(1), RibbonGraph::standard_graph(2),
                           RibbonGraph::isolated_vertex()});
  CHECK(g.genus() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 0}});
}

TEST_CASE("dot export names nodes, edges and face traversals") {
  auto dot = torus_two_vertex_graph().to_dot();
  CHECK(dot.find("v0") != std::string::npos);
  CHECK(dot.find("\"p\"") != std::string::npos);
  CHECK(dot.find("// face 0:") != std::string::npos);
  auto sphere_dot = RibbonGraph::isolated_vertex().to_dot();
  CHECK(sphere_dot.find("isolated vertex v0") != std::string::npos);
}
