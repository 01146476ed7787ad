#pragma once

#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "septamer/graph.hpp"

namespace septamer {

/// A graph whose vertices carry construction-time role labels ("x3", "r1", …).
/// Labels are a bijection onto the vertex set; algorithms ignore them, tests
/// and the CLI use them to address vertices by role.
struct LabeledGraph {
  Graph graph;
  std::map<std::string, int> labels;

  int vertex(const std::string& label) const {
    auto it = labels.find(label);
    if (it == labels.end())
      throw std::invalid_argument("unknown vertex label: " + label);
    return it->second;
  }

  VertexSet set_of(const std::vector<std::string>& names) const {
    VertexSet s;
    for (const std::string& name : names) s.insert(vertex(name));
    return s;
  }
};

/// Two k-cliques {x1..xk}, {y1..yk} joined by the perfect matching x_i y_i.
/// Vertex order: x1..xk are 0..k-1, y1..yk are k..2k-1.
inline LabeledGraph prism(int k) {
  if (k < 3) throw std::invalid_argument("prism: k must be at least 3");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      edges.emplace_back(i, j);          // X clique
      edges.emplace_back(k + i, k + j);  // Y clique
    }
  for (int i = 0; i < k; ++i) edges.emplace_back(i, k + i);
  LabeledGraph out;
  out.graph = Graph::from_edges(2 * k, edges);
  for (int i = 0; i < k; ++i) {
    out.labels["x" + std::to_string(i + 1)] = i;
    out.labels["y" + std::to_string(i + 1)] = k + i;
  }
  return out;
}

/// k internally disjoint induced paths of path_len edges between poles x, y.
/// Poles are vertices 0 and 1; the internals of path i follow in order from
/// the x side.  For path_len = 3 the two internals of path i are labeled
/// "xi" and "yi" (they are exactly the vertices adjacent to x and to y);
/// otherwise internals are labeled "p{i}_{j}", j counted from the x side.
inline LabeledGraph theta(int k, int path_len) {
  if (k < 1) throw std::invalid_argument("theta: k must be at least 1");
  if (path_len < 2)
    throw std::invalid_argument("theta: path_len must be at least 2");
  int internals = path_len - 1;
  int n = 2 + k * internals;
  std::vector<std::pair<int, int>> edges;
  LabeledGraph out;
  out.labels["x"] = 0;
  out.labels["y"] = 1;
  for (int i = 0; i < k; ++i) {
    int base = 2 + i * internals;
    edges.emplace_back(0, base);
    for (int j = 0; j + 1 < internals; ++j)
      edges.emplace_back(base + j, base + j + 1);
    edges.emplace_back(base + internals - 1, 1);
    for (int j = 0; j < internals; ++j) {
      std::string label;
      if (path_len == 3)
        label = (j == 0 ? "x" : "y") + std::to_string(i + 1);
      else
        label = "p" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
      out.labels[label] = base + j;
    }
  }
  out.graph = Graph::from_edges(n, edges);
  return out;
}

/// Two anti-adjacent induced paths P = p1..pk, Q = q1..qk and an independent
/// set R = r1..rk with rung edges p_i r_i, q_i r_i.
/// Vertex order: p's are 0..k-1, q's are k..2k-1, r's are 2k..3k-1.
inline LabeledGraph skinny_ladder(int k) {
  if (k < 1) throw std::invalid_argument("skinny_ladder: k must be at least 1");
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < k; ++i) {
    edges.emplace_back(i, i + 1);          // P path
    edges.emplace_back(k + i, k + i + 1);  // Q path
  }
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(i, 2 * k + i);
    edges.emplace_back(k + i, 2 * k + i);
  }
  LabeledGraph out;
  out.graph = Graph::from_edges(3 * k, edges);
  for (int i = 0; i < k; ++i) {
    out.labels["p" + std::to_string(i + 1)] = i;
    out.labels["q" + std::to_string(i + 1)] = k + i;
    out.labels["r" + std::to_string(i + 1)] = 2 * k + i;
  }
  return out;
}

/// The canonical graph that IS a k-creature: A a path a1..a_{a_size}, B a
/// path b1..b_{b_size}, independent sets X, Y of size k with the matching
/// x_i y_i, every x_i adjacent to the A-path endpoint a_{a_size}, every y_i
/// adjacent to b_{b_size}.  With a_size = b_size = 1 this is theta(k,3) with
/// the poles renamed.
inline LabeledGraph creature_graph(int k, int a_size, int b_size) {
  if (k < 1) throw std::invalid_argument("creature_graph: k must be at least 1");
  if (a_size < 1 || b_size < 1)
    throw std::invalid_argument("creature_graph: part sizes must be at least 1");
  int xs = a_size + b_size;           // first X vertex
  int ys = xs + k;                    // first Y vertex
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < a_size; ++i) edges.emplace_back(i, i + 1);
  for (int i = 0; i + 1 < b_size; ++i)
    edges.emplace_back(a_size + i, a_size + i + 1);
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(a_size - 1, xs + i);      // x_i sees the A endpoint
    edges.emplace_back(xs - 1, ys + i);          // y_i sees the B endpoint
    edges.emplace_back(xs + i, ys + i);          // matching
  }
  LabeledGraph out;
  out.graph = Graph::from_edges(xs + 2 * k, edges);
  for (int i = 0; i < a_size; ++i) out.labels["a" + std::to_string(i + 1)] = i;
  for (int i = 0; i < b_size; ++i)
    out.labels["b" + std::to_string(i + 1)] = a_size + i;
  for (int i = 0; i < k; ++i) {
    out.labels["x" + std::to_string(i + 1)] = xs + i;
    out.labels["y" + std::to_string(i + 1)] = ys + i;
  }
  return out;
}

/// Intersection graph of n random closed intervals with endpoints drawn from
/// {0..2n-1}.  Interval graphs are chordal, so these are the tame control
/// family.  Pure function of (n, seed): draws come straight from mt19937_64,
/// whose output sequence is fixed by the standard.
inline Graph random_interval_graph(int n, std::uint64_t seed) {
  if (n < 1)
    throw std::invalid_argument("random_interval_graph: n must be at least 1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> iv(static_cast<std::size_t>(n));
  for (auto& [lo, hi] : iv) {
    std::uint64_t a = rng() % static_cast<std::uint64_t>(2 * n);
    std::uint64_t b = rng() % static_cast<std::uint64_t>(2 * n);
    lo = std::min(a, b);
    hi = std::max(a, b);
  }
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      auto [lu, hu] = iv[static_cast<std::size_t>(u)];
      auto [lv, hv] = iv[static_cast<std::size_t>(v)];
      if (lu <= hv && lv <= hu) edges.emplace_back(u, v);
    }
  return Graph::from_edges(n, edges);
}

/// Erdős–Rényi-style random graph: each pair becomes an edge when the next
/// generator draw falls below prob_num/prob_den.  Used by tests to build
/// random corpora deterministically.
inline Graph random_graph(int n, std::uint64_t seed, int prob_num, int prob_den) {
  if (n < 0) throw std::invalid_argument("random_graph: negative n");
  if (prob_den <= 0 || prob_num < 0)
    throw std::invalid_argument("random_graph: bad probability");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng() % static_cast<std::uint64_t>(prob_den) <
          static_cast<std::uint64_t>(prob_num))
        edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

}  // namespace septamer
