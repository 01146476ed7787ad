#include <catch2/catch_amalgamated.hpp>

#include <stdexcept>
#include <vector>

#include "septamer/families.hpp"
#include "septamer/graph.hpp"
#include "septamer/separators.hpp"

using namespace septamer;

namespace {

Graph path_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edges(n, e);
}

Graph complete_graph(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edges(n, e);
}

std::vector<VertexSet> just_sets(const std::vector<MinimalSeparator>& seps) {
  std::vector<VertexSet> out;
  for (const auto& ms : seps) out.push_back(ms.S);
  return out;
}

// Oracle for inclusion-minimality of a u-v separator: removing any single
// vertex must reconnect u and v.
bool is_minimal_uv_sep(const Graph& g, int u, int v, const VertexSet& S) {
  if (S.contains(u) || S.contains(v)) return false;
  if (component_of(g, u, S).contains(v)) return false;
  for (int s : S) {
    VertexSet smaller = S;
    smaller.erase(s);
    if (!component_of(g, u, smaller).contains(v)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("is_minimal_separator certificates", "[separators]") {
  LabeledGraph pr = prism(3);

  auto ms = is_minimal_separator(pr.graph, pr.set_of({"x1", "x2", "y3"}));
  REQUIRE(ms.has_value());
  REQUIRE(ms->full_components ==
          std::vector<VertexSet>{pr.set_of({"x3"}), pr.set_of({"y1", "y2"})});

  // one clique side leaves a single component: not a separator
  REQUIRE_FALSE(
      is_minimal_separator(pr.graph, pr.set_of({"x1", "x2", "x3"})).has_value());

  Graph p3 = path_graph(3);
  auto mid = is_minimal_separator(p3, VertexSet{1});
  REQUIRE(mid.has_value());
  REQUIRE(mid->full_components ==
          std::vector<VertexSet>{VertexSet{0}, VertexSet{2}});

  REQUIRE_FALSE(is_minimal_separator(p3, VertexSet{}).has_value());
}

TEST_CASE("minimal_uv_separator_within", "[separators]") {
  Graph p5 = path_graph(5);
  REQUIRE(minimal_uv_separator_within(p5, 0, 4, VertexSet{1, 2, 3}) ==
          VertexSet{1});

  // already-minimal input is a fixed point
  Graph c4 = cycle_graph(4);
  REQUIRE(minimal_uv_separator_within(c4, 0, 2, VertexSet{1, 3}) ==
          VertexSet{1, 3});

  LabeledGraph th = theta(3, 3);
  VertexSet internals = th.graph.vertices() - th.set_of({"x", "y"});
  REQUIRE(minimal_uv_separator_within(th.graph, th.vertex("x"), th.vertex("y"),
                                      internals) ==
          th.set_of({"x1", "x2", "x3"}));

  // S that fails to separate is an input error
  REQUIRE_THROWS_AS(minimal_uv_separator_within(p5, 0, 2, VertexSet{3}),
                    std::invalid_argument);

  // the result is always inclusion-minimal (oracle re-check on random data)
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    int n = 5 + static_cast<int>(seed % 6);
    Graph g = random_graph(n, seed * 13, 1, 3);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        VertexSet rest = g.vertices();
        rest.erase(u);
        rest.erase(v);
        if (g.has_edge(u, v)) continue;
        if (component_of(g, u, rest).contains(v)) continue;  // adjacent only
        VertexSet s = minimal_uv_separator_within(g, u, v, rest);
        REQUIRE(s.is_subset_of(rest));
        REQUIRE(is_minimal_uv_sep(g, u, v, s));
      }
  }
}

TEST_CASE("enumeration matches the closed-form prism counts", "[separators]") {
  for (int k = 3; k <= 5; ++k) {
    auto seps = enumerate_minimal_separators(prism(k).graph);
    REQUIRE(static_cast<int>(seps.size()) == (1 << k) - 2);
  }
  REQUIRE(enumerate_minimal_separators(complete_graph(5)).empty());
}

TEST_CASE("enumeration agrees with brute force on random graphs",
          "[separators][property]") {
  int graphs = 0;
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    for (int density = 1; density <= 3; ++density) {
      int n = 4 + static_cast<int>((seed + static_cast<std::uint64_t>(density)) % 9);  // 4..12
      Graph g = random_graph(n, seed * 7919 + static_cast<std::uint64_t>(density), density, 4);
      auto fast = enumerate_minimal_separators(g);
      auto slow = brute_force_separators(g);
      REQUIRE(just_sets(fast) == just_sets(slow));
      // emitted certificates re-verify: every full component is full
      for (const auto& ms : fast) {
        REQUIRE(ms.full_components.size() >= 2);
        for (const auto& c : ms.full_components) {
          REQUIRE(is_connected(g, c));
          REQUIRE(neighborhood(g, c) == ms.S);
        }
      }
      ++graphs;
    }
  }
  REQUIRE(graphs == 300);
}

TEST_CASE("brute force on the tiny classics", "[separators]") {
  auto c4 = brute_force_separators(cycle_graph(4));
  REQUIRE(just_sets(c4) == std::vector<VertexSet>{{0, 2}, {1, 3}});

  auto p4 = brute_force_separators(path_graph(4));
  REQUIRE(just_sets(p4) == std::vector<VertexSet>{{1}, {2}});

  LabeledGraph l2 = skinny_ladder(2);
  auto seps = just_sets(brute_force_separators(l2.graph));
  VertexSet rungs = l2.set_of({"r1", "r2"});
  REQUIRE(std::find(seps.begin(), seps.end(), rungs) != seps.end());

  REQUIRE_THROWS_AS(brute_force_separators(Graph(21)), std::invalid_argument);
}

TEST_CASE("separator traces", "[separators]") {
  LabeledGraph pr = prism(3);
  auto seps = enumerate_minimal_separators(pr.graph);
  REQUIRE(seps.size() == 6);
  auto traces = separator_traces(pr.graph, pr.vertex("x1"), seps);
  for (const VertexSet& t : traces) REQUIRE(t.size() <= 3);
  REQUIRE(traces.size() <= 6u * 6u * 6u * 6u);

  auto none = separator_traces(complete_graph(4), 0,
                               enumerate_minimal_separators(complete_graph(4)));
  REQUIRE(none.empty());

  Graph p4 = path_graph(4);
  auto tr = separator_traces(p4, 0, enumerate_minimal_separators(p4));
  REQUIRE(tr == std::set<VertexSet>{VertexSet{}, VertexSet{1}});
}
