#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "septamer/vertex_set.hpp"

namespace septamer {

/// An undirected simple graph on vertices 0..n-1, immutable once built.
class Graph {
 public:
  Graph() = default;

  /// An edgeless graph on n vertices.
  explicit Graph(int n) : adj_(check_size(n)) {}

  static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) {
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw std::out_of_range("Graph::from_edges: vertex index out of range");
      if (u == v) throw std::invalid_argument("Graph::from_edges: self-loop");
      g.adj_[static_cast<std::size_t>(u)].insert(v);
      g.adj_[static_cast<std::size_t>(v)].insert(u);
    }
    return g;
  }

  int vertex_count() const { return static_cast<int>(adj_.size()); }

  const VertexSet& neighbors(int v) const {
    check_vertex(v);
    return adj_[static_cast<std::size_t>(v)];
  }

  bool has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u)].contains(v);
  }

  int degree(int v) const { return neighbors(v).size(); }

  int edge_count() const {
    int twice = 0;
    for (const VertexSet& nb : adj_) twice += nb.size();
    return twice / 2;
  }

  VertexSet vertices() const { return VertexSet::universe(vertex_count()); }

  /// Sorted edge list with u < v in each pair.
  std::vector<std::pair<int, int>> edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < vertex_count(); ++u)
      for (int v : adj_[static_cast<std::size_t>(u)])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  void check_vertex(int v) const {
    if (v < 0 || v >= vertex_count())
      throw std::out_of_range("vertex index out of range");
  }

  /// Throws if any element of S is not a vertex of this graph.
  void check_subset(const VertexSet& S) const {
    if (!S.empty() && S.last() >= vertex_count())
      throw std::out_of_range("vertex set contains an index out of range");
  }

 private:
  static int check_size(int n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    return n;
  }

  std::vector<VertexSet> adj_;
};

/// N(S): all vertices outside S with at least one neighbor in S.
inline VertexSet neighborhood(const Graph& g, const VertexSet& S) {
  g.check_subset(S);
  VertexSet acc;
  for (int v : S) acc |= g.neighbors(v);
  return acc - S;
}

/// N[S] = N(S) ∪ S.
inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& S) {
  g.check_subset(S);
  VertexSet acc = S;
  for (int v : S) acc |= g.neighbors(v);
  return acc;
}

/// G[S] together with the index maps in both directions.  Vertices keep
/// their relative order: the i-th smallest element of S becomes vertex i.
struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_sub;     ///< parent index -> sub index, -1 if absent
  std::vector<int> to_parent;  ///< sub index -> parent index
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& S) {
  g.check_subset(S);
  InducedSubgraph out;
  out.to_sub.assign(static_cast<std::size_t>(g.vertex_count()), -1);
  out.to_parent = S.to_vector();
  for (std::size_t i = 0; i < out.to_parent.size(); ++i)
    out.to_sub[static_cast<std::size_t>(out.to_parent[i])] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t i = 0; i < out.to_parent.size(); ++i)
    for (int w : g.neighbors(out.to_parent[i]) & S)
      if (out.to_parent[i] < w)
        edges.emplace_back(static_cast<int>(i), out.to_sub[static_cast<std::size_t>(w)]);
  out.graph = Graph::from_edges(static_cast<int>(out.to_parent.size()), edges);
  return out;
}

/// Connected component of G - excluded containing v (v must not be excluded).
inline VertexSet component_of(const Graph& g, int v, const VertexSet& excluded) {
  g.check_vertex(v);
  if (excluded.contains(v))
    throw std::invalid_argument("component_of: start vertex is excluded");
  VertexSet comp{v};
  VertexSet frontier{v};
  while (!frontier.empty()) {
    VertexSet next;
    for (int u : frontier) next |= g.neighbors(u);
    next -= comp;
    next -= excluded;
    comp |= next;
    frontier = std::move(next);
  }
  return comp;
}

/// Connected components of G - excluded, ordered by smallest vertex.
inline std::vector<VertexSet> components(const Graph& g, const VertexSet& excluded) {
  g.check_subset(excluded);
  std::vector<VertexSet> out;
  VertexSet remaining = g.vertices() - excluded;
  while (!remaining.empty()) {
    VertexSet comp = component_of(g, remaining.first(), excluded);
    remaining -= comp;
    out.push_back(std::move(comp));
  }
  return out;
}

/// Connected components of G[inside], ordered by smallest vertex.
inline std::vector<VertexSet> components_within(const Graph& g, const VertexSet& inside) {
  return components(g, g.vertices() - inside);
}

/// Whether G[S] is connected.  S must be nonempty: connectivity of the empty
/// graph is deliberately undefined here.
inline bool is_connected(const Graph& g, const VertexSet& S) {
  g.check_subset(S);
  if (S.empty()) throw std::invalid_argument("is_connected: empty vertex set");
  return component_of(g, S.first(), g.vertices() - S) == S;
}

/// Whether there is no edge between S and T.  Throws if S and T overlap —
/// anti-adjacency is a relation between disjoint sets.
inline bool is_anti_adjacent(const Graph& g, const VertexSet& S, const VertexSet& T) {
  g.check_subset(S);
  g.check_subset(T);
  if (S.intersects(T))
    throw std::invalid_argument("is_anti_adjacent: sets overlap");
  for (int v : S)
    if (g.neighbors(v).intersects(T)) return false;
  return true;
}

}  // namespace septamer
