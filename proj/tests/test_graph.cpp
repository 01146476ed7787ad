#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>

#include "septamer/families.hpp"
#include "septamer/graph.hpp"

using namespace septamer;

namespace {

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

}  // namespace

TEST_CASE("construction validates input", "[graph]") {
  REQUIRE_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
  REQUIRE_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::out_of_range);
  Graph g = Graph::from_edges(3, {{0, 1}, {1, 0}, {1, 2}});
  REQUIRE(g.edge_count() == 2);  // duplicate orientation collapses
  REQUIRE(g.has_edge(0, 1));
  REQUIRE(g.has_edge(1, 0));
  REQUIRE_FALSE(g.has_edge(0, 2));
  REQUIRE_THROWS_AS(g.neighbors(3), std::out_of_range);
}

TEST_CASE("neighborhood", "[graph]") {
  Graph triangle = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  REQUIRE(neighborhood(triangle, VertexSet{0}) == VertexSet({1, 2}));
  REQUIRE(neighborhood(triangle, VertexSet{}) == VertexSet{});

  LabeledGraph pr = prism(3);
  VertexSet s = pr.set_of({"x1", "y1"});
  REQUIRE(neighborhood(pr.graph, s) == pr.set_of({"x2", "x3", "y2", "y3"}));

  REQUIRE_THROWS_AS(neighborhood(triangle, VertexSet{5}), std::out_of_range);
}

TEST_CASE("induced subgraph", "[graph]") {
  LabeledGraph th = theta(3, 3);
  SECTION("full set is an identity copy") {
    InducedSubgraph sub = induced_subgraph(th.graph, th.graph.vertices());
    REQUIRE(sub.graph.vertex_count() == th.graph.vertex_count());
    REQUIRE(sub.graph.edges() == th.graph.edges());
    for (int v = 0; v < th.graph.vertex_count(); ++v) {
      REQUIRE(sub.to_sub[static_cast<std::size_t>(v)] == v);
      REQUIRE(sub.to_parent[static_cast<std::size_t>(v)] == v);
    }
  }
  SECTION("pole plus its three internals is a star") {
    InducedSubgraph sub =
        induced_subgraph(th.graph, th.set_of({"x", "x1", "x2", "x3"}));
    REQUIRE(sub.graph.vertex_count() == 4);
    REQUIRE(sub.graph.edge_count() == 3);
    int center = sub.to_sub[static_cast<std::size_t>(th.vertex("x"))];
    REQUIRE(sub.graph.degree(center) == 3);
  }
  SECTION("two path endpoints are isolated") {
    Graph p4 = path_graph(4);
    InducedSubgraph sub = induced_subgraph(p4, VertexSet{0, 3});
    REQUIRE(sub.graph.vertex_count() == 2);
    REQUIRE(sub.graph.edge_count() == 0);
  }
}

TEST_CASE("components", "[graph]") {
  Graph p3 = path_graph(3);
  auto comps = components(p3, VertexSet{1});
  REQUIRE(comps == std::vector<VertexSet>{VertexSet{0}, VertexSet{2}});

  LabeledGraph pr = prism(3);
  auto pc = components(pr.graph, pr.set_of({"x1", "x2", "y3"}));
  REQUIRE(pc == std::vector<VertexSet>{pr.set_of({"x3"}),
                                       pr.set_of({"y1", "y2"})});

  auto whole = components(p3, VertexSet{});
  REQUIRE(whole == std::vector<VertexSet>{VertexSet{0, 1, 2}});
}

TEST_CASE("is_connected", "[graph]") {
  Graph p3 = path_graph(3);
  REQUIRE_FALSE(is_connected(p3, VertexSet{0, 2}));
  REQUIRE(is_connected(p3, VertexSet{0, 1}));
  LabeledGraph th = theta(3, 3);
  REQUIRE(is_connected(th.graph, th.set_of({"y", "y1", "y2", "y3"})));
  REQUIRE_THROWS_AS(is_connected(p3, VertexSet{}), std::invalid_argument);
}

TEST_CASE("is_anti_adjacent", "[graph]") {
  LabeledGraph th = theta(3, 3);
  REQUIRE(is_anti_adjacent(th.graph, th.set_of({"x"}),
                           th.set_of({"y1", "y2", "y3"})));
  REQUIRE_FALSE(is_anti_adjacent(th.graph, th.set_of({"x"}), th.set_of({"x1"})));
  Graph p3 = path_graph(3);
  REQUIRE(is_anti_adjacent(p3, VertexSet{0}, VertexSet{2}));
  REQUIRE_THROWS_AS(is_anti_adjacent(p3, VertexSet{0, 1}, VertexSet{1}),
                    std::invalid_argument);
}

TEST_CASE("core invariants hold on random graphs", "[graph][property]") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    int n = 4 + static_cast<int>(seed % 7);
    Graph g = random_graph(n, seed, 2, 5);
    std::mt19937_64 rng(seed * 977);
    VertexSet s, t, excl;
    for (int v = 0; v < n; ++v) {
      switch (rng() % 4) {
        case 0: s.insert(v); break;
        case 1: t.insert(v); break;
        case 2: excl.insert(v); break;
        default: break;
      }
    }

    // neighborhood never returns members of S
    REQUIRE((neighborhood(g, s) & s).empty());

    // components partition V - excl into connected pieces with no cross edges
    auto comps = components(g, excl);
    VertexSet seen;
    for (const VertexSet& c : comps) {
      REQUIRE_FALSE(c.empty());
      REQUIRE(is_connected(g, c));
      REQUIRE_FALSE(seen.intersects(c));
      seen |= c;
    }
    REQUIRE(seen == g.vertices() - excl);
    for (std::size_t i = 0; i < comps.size(); ++i)
      for (std::size_t j = i + 1; j < comps.size(); ++j)
        REQUIRE(is_anti_adjacent(g, comps[i], comps[j]));

    // taking the induced subgraph first gives the same components
    InducedSubgraph sub = induced_subgraph(g, g.vertices() - excl);
    auto sub_comps = components(sub.graph, VertexSet{});
    REQUIRE(sub_comps.size() == comps.size());
    for (std::size_t i = 0; i < comps.size(); ++i) {
      VertexSet lifted;
      for (int v : sub_comps[i])
        lifted.insert(sub.to_parent[static_cast<std::size_t>(v)]);
      REQUIRE(lifted == comps[i]);
    }

    // anti-adjacency is neighborhood disjointness
    VertexSet t_only = t - s;
    if (!t_only.empty() || !s.intersects(t))
      REQUIRE(is_anti_adjacent(g, s, t_only) ==
              !(neighborhood(g, s).intersects(t_only)));
  }
}
