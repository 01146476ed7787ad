#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "septamer/graph.hpp"
#include "septamer/rational.hpp"
#include "septamer/separators.hpp"

namespace septamer {

/// Vertex-weighted graph; weights are exact non-negative rationals so the
/// dynamic programming below never faces floating-point ties.
struct WeightedGraph {
  Graph graph;
  std::vector<Rational> weight;
};

namespace detail {

inline void check_weights(const WeightedGraph& wg) {
  if (static_cast<int>(wg.weight.size()) != wg.graph.vertex_count())
    throw std::invalid_argument("weighted graph: one weight per vertex required");
  for (const Rational& w : wg.weight)
    if (w.num < 0)
      throw std::invalid_argument("weighted graph: weights must be non-negative");
}

}  // namespace detail

/// A potential maximal clique: a vertex set that appears as a maximal clique
/// in some minimal triangulation.
struct PotentialMaximalClique {
  VertexSet Omega;
};

/// Local characterization test: Omega is a potential maximal clique iff
/// (a) no component of G − Omega has all of Omega in its neighborhood, and
/// (b) every non-adjacent pair inside Omega has a common component of
///     G − Omega seeing both.
inline bool is_pmc(const Graph& g, const VertexSet& omega) {
  g.check_subset(omega);
  if (omega.empty()) return false;
  std::vector<VertexSet> hoods;
  for (const VertexSet& c : components(g, omega)) {
    VertexSet nc = neighborhood(g, c);
    if (nc == omega) return false;
    hoods.push_back(std::move(nc));
  }
  for (int u : omega)
    for (int v : omega - g.neighbors(u)) {
      if (v <= u) continue;
      bool covered = false;
      for (const VertexSet& nc : hoods)
        if (nc.contains(u) && nc.contains(v)) {
          covered = true;
          break;
        }
      if (!covered) return false;
    }
  return true;
}

/// Every potential maximal clique of a connected graph, derived from the
/// complete minimal-separator list.  Each PMC other than the whole vertex
/// set splits as S ∪ T where S is the neighborhood of any component of
/// G − Omega and T lives inside one FULL component of G − S: given a
/// component C of G − Omega, any s ∈ S = N(C) without neighbors in the
/// component D ⊇ Omega ∖ S would be non-adjacent to some w ∈ Omega ∖ S,
/// and the component certifying the pair (s, w) sits inside D and sees s —
/// so D is full.  Scanning all subsets of all full components therefore
/// misses nothing; every candidate is re-verified by is_pmc.
inline std::vector<PotentialMaximalClique> enumerate_pmcs(
    const Graph& g, const std::vector<MinimalSeparator>& seps) {
  std::set<VertexSet> found;
  if (g.vertex_count() > 0 && is_pmc(g, g.vertices())) found.insert(g.vertices());
  for (const MinimalSeparator& ms : seps)
    for (const VertexSet& d : ms.full_components) {
      std::vector<int> verts = d.to_vector();
      if (verts.size() > 25)
        throw std::invalid_argument("enumerate_pmcs: component too large for desk scale");
      for (std::uint64_t mask = 1; mask < (1ull << verts.size()); ++mask) {
        VertexSet cand = ms.S;
        for (std::size_t i = 0; i < verts.size(); ++i)
          if (mask & (1ull << i)) cand.insert(verts[i]);
        if (found.count(cand)) continue;
        if (is_pmc(g, cand)) found.insert(std::move(cand));
      }
    }
  std::vector<PotentialMaximalClique> out;
  out.reserve(found.size());
  for (const VertexSet& s : found) out.push_back(PotentialMaximalClique{s});
  return out;
}

/// Oracle twin of enumerate_pmcs: test every subset against is_pmc.
inline std::vector<PotentialMaximalClique> brute_force_pmcs(const Graph& g) {
  int n = g.vertex_count();
  if (n > 14) throw std::invalid_argument("brute_force_pmcs: n must be at most 14");
  std::vector<PotentialMaximalClique> out;
  for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
    VertexSet cand;
    for (int v = 0; v < n; ++v)
      if (mask & (1ull << v)) cand.insert(v);
    if (is_pmc(g, cand)) out.push_back(PotentialMaximalClique{cand});
  }
  std::sort(out.begin(), out.end(),
            [](const PotentialMaximalClique& a, const PotentialMaximalClique& b) {
              return a.Omega < b.Omega;
            });
  return out;
}

/// Exact maximum over all independent subsets.  Walks the subsets in Gray
/// code order so each step updates the running weight by one vertex.
inline Rational brute_mwis(const WeightedGraph& wg) {
  detail::check_weights(wg);
  int n = wg.graph.vertex_count();
  if (n > 20) throw std::invalid_argument("brute_mwis: n must be at most 20");
  Rational best, running;
  std::uint64_t prev = 0;
  std::vector<std::uint64_t> adj(static_cast<std::size_t>(n), 0);
  for (int v = 0; v < n; ++v)
    for (int u : wg.graph.neighbors(v)) adj[static_cast<std::size_t>(v)] |= 1ull << u;
  for (std::uint64_t i = 1; i < (1ull << n); ++i) {
    std::uint64_t cur = i ^ (i >> 1);
    std::uint64_t flipped = cur ^ prev;
    int v = 0;
    while (!(flipped & (1ull << v))) ++v;
    if (cur & flipped)
      running += wg.weight[static_cast<std::size_t>(v)];
    else
      running -= wg.weight[static_cast<std::size_t>(v)];
    prev = cur;
    bool independent = true;
    for (std::uint64_t rest = cur; rest;) {
      int x = __builtin_ctzll(rest);
      rest &= rest - 1;
      if (adj[static_cast<std::size_t>(x)] & cur) {
        independent = false;
        break;
      }
    }
    if (independent && best < running) best = running;
  }
  return best;
}

struct MwisResult {
  Rational weight;
  VertexSet chosen;
};

namespace detail {

/// Block dynamic programming for maximum weight independent set.
///
/// Any independent set stays independent in some minimal triangulation of
/// the graph, and in such a triangulation every bag — a potential maximal
/// clique — contains at most one chosen vertex.  So the program can pick, per
/// block (S = N(C), C), a bag Omega with S ⊊ Omega ⊆ S ∪ C and a single
/// chosen vertex b of Omega (or none), recursing into the components of
/// C ∖ Omega.  The only cross-block information needed is the at-most-one
/// chosen vertex of the block's own separator: a chosen b reaches a deeper
/// component only when it lies in that component's neighborhood, so the
/// single trace vertex carries the entire adjacency constraint.
struct BlockSolver {
  const Graph& g;
  const std::vector<Rational>& w;
  std::vector<VertexSet> pmcs;

  struct Entry {
    Rational value;
    int omega = -1;  // index into pmcs
    int pick = -1;   // chosen vertex at the bag, -1 for none
  };
  std::map<std::pair<VertexSet, int>, Entry> memo;

  BlockSolver(const Graph& graph, const std::vector<Rational>& weight)
      : g(graph), w(weight) {
    for (const PotentialMaximalClique& p :
         enumerate_pmcs(g, enumerate_minimal_separators(g)))
      pmcs.push_back(p.Omega);
  }

  // best weight of I ∩ C over the block (N(C), C), where `trace` (-1 = none)
  // is the separator vertex the parent already placed in I
  const Entry& beta(const VertexSet& c, int trace) {
    auto key = std::make_pair(c, trace);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    VertexSet s = neighborhood(g, c);
    VertexSet block = s | c;
    Entry best;
    bool seen = false;
    for (std::size_t oi = 0; oi < pmcs.size(); ++oi) {
      const VertexSet& omega = pmcs[oi];
      if (!s.is_subset_of(omega) || omega == s || !omega.is_subset_of(block))
        continue;
      std::vector<int> picks;
      if (trace >= 0) {
        picks.push_back(trace);  // trace ∈ S ⊆ Omega: the bag's pick is forced
      } else {
        picks.push_back(-1);
        for (int b : omega - s) picks.push_back(b);
      }
      std::vector<VertexSet> parts = components_within(g, c - omega);
      for (int b : picks) {
        Rational value;
        if (b >= 0 && c.contains(b)) value += w[static_cast<std::size_t>(b)];
        for (const VertexSet& part : parts) {
          int sub_trace =
              (b >= 0 && neighborhood(g, part).contains(b)) ? b : -1;
          value += beta(part, sub_trace).value;
        }
        if (!seen || best.value < value) {
          seen = true;
          best.value = value;
          best.omega = static_cast<int>(oi);
          best.pick = b;
        }
      }
    }
    if (!seen)
      throw std::logic_error("mwis: no potential maximal clique fits a block");
    return memo.emplace(std::move(key), std::move(best)).first->second;
  }

  void rebuild(const VertexSet& c, int trace, VertexSet& out) {
    const Entry& e = beta(c, trace);
    const VertexSet& omega = pmcs[static_cast<std::size_t>(e.omega)];
    if (e.pick >= 0 && c.contains(e.pick)) out.insert(e.pick);
    for (const VertexSet& part : components_within(g, c - omega)) {
      int sub_trace =
          (e.pick >= 0 && neighborhood(g, part).contains(e.pick)) ? e.pick : -1;
      rebuild(part, sub_trace, out);
    }
  }

  // solve one connected graph by rooting the decomposition at every bag
  MwisResult solve_connected() {
    MwisResult best;
    bool seen = false;
    int root_omega = -1, root_pick = -1;
    for (std::size_t oi = 0; oi < pmcs.size(); ++oi) {
      const VertexSet& omega = pmcs[oi];
      std::vector<VertexSet> parts = components(g, omega);
      std::vector<int> picks{-1};
      for (int b : omega) picks.push_back(b);
      for (int b : picks) {
        Rational value;
        if (b >= 0) value += w[static_cast<std::size_t>(b)];
        for (const VertexSet& part : parts) {
          int sub_trace =
              (b >= 0 && neighborhood(g, part).contains(b)) ? b : -1;
          value += beta(part, sub_trace).value;
        }
        if (!seen || best.weight < value) {
          seen = true;
          best.weight = value;
          root_omega = static_cast<int>(oi);
          root_pick = b;
        }
      }
    }
    if (!seen) throw std::logic_error("mwis: graph without potential maximal cliques");
    const VertexSet& omega = pmcs[static_cast<std::size_t>(root_omega)];
    if (root_pick >= 0) best.chosen.insert(root_pick);
    for (const VertexSet& part : components(g, omega)) {
      int sub_trace = (root_pick >= 0 && neighborhood(g, part).contains(root_pick))
                          ? root_pick
                          : -1;
      rebuild(part, sub_trace, best.chosen);
    }
    return best;
  }
};

}  // namespace detail

/// Exact maximum weight independent set via block dynamic programming over
/// (separator, component) pairs and potential maximal cliques.  The result
/// is self-certified: the returned set is re-checked for independence and
/// its weight recomputed before returning.
inline MwisResult solve_mwis(const WeightedGraph& wg) {
  detail::check_weights(wg);
  MwisResult total;
  for (const VertexSet& comp : components(wg.graph, VertexSet{})) {
    InducedSubgraph sub = induced_subgraph(wg.graph, comp);
    std::vector<Rational> sw;
    for (int v : comp) sw.push_back(wg.weight[static_cast<std::size_t>(v)]);
    detail::BlockSolver solver(sub.graph, sw);
    MwisResult part = solver.solve_connected();
    total.weight += part.weight;
    for (int v : part.chosen)
      total.chosen.insert(sub.to_parent[static_cast<std::size_t>(v)]);
  }
  Rational check;
  for (int v : total.chosen) {
    if (wg.graph.neighbors(v).intersects(total.chosen))
      throw std::logic_error("mwis: produced a dependent set");
    check += wg.weight[static_cast<std::size_t>(v)];
  }
  if (!(check == total.weight))
    throw std::logic_error("mwis: weight does not match the chosen set");
  return total;
}

}  // namespace septamer
