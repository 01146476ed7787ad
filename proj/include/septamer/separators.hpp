#pragma once

#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <vector>

#include "septamer/graph.hpp"

namespace septamer {

/// A minimal separator together with its certificate: the components of
/// G - S whose neighborhood is exactly S.  There are always at least two.
struct MinimalSeparator {
  VertexSet S;
  std::vector<VertexSet> full_components;
};

/// Checks whether S is a minimal separator.  On success the certificate
/// lists ALL full components, in component order (by smallest vertex).
/// The empty set is never reported as a separator, even for disconnected
/// graphs: all counting here is about nonempty separators.
inline std::optional<MinimalSeparator> is_minimal_separator(const Graph& g,
                                                            const VertexSet& S) {
  g.check_subset(S);
  if (S.empty()) return std::nullopt;
  MinimalSeparator ms;
  ms.S = S;
  for (VertexSet& c : components(g, S)) {
    if (neighborhood(g, c) == S) ms.full_components.push_back(std::move(c));
  }
  if (ms.full_components.size() < 2) return std::nullopt;
  return ms;
}

/// Given a set S that separates the connected set U from the connected set W,
/// trims S to an inclusion-minimal U-W separator: first keep only N(C_U),
/// the neighbors of U's component, then re-trim from the W side.
///
/// Why the result is inclusion-minimal: every s in the final S2 has a
/// neighbor in C_W by construction, and a neighbor in C_U because s was
/// already in N(C_U) and C_U can only grow when S shrinks to S1 ⊇ S2.
/// Dropping s would merge a path U..s..W through those neighbors; formally,
/// for any s ∈ S2, C_U ∪ {s} ∪ C_W is connected in G - (S2 ∖ {s}).
inline VertexSet minimal_separator_between_within(const Graph& g,
                                                  const VertexSet& U,
                                                  const VertexSet& W,
                                                  const VertexSet& S) {
  g.check_subset(U);
  g.check_subset(W);
  g.check_subset(S);
  if (U.empty() || W.empty())
    throw std::invalid_argument("minimal separator: empty side");
  if (S.intersects(U) || S.intersects(W))
    throw std::invalid_argument("minimal separator: S overlaps a side");

  VertexSet cu = component_of(g, U.first(), S);
  if (!U.is_subset_of(cu))
    throw std::invalid_argument("minimal separator: U side is not connected in G - S");
  if (cu.intersects(W))
    throw std::invalid_argument("minimal separator: S does not separate the sides");
  VertexSet s1 = neighborhood(g, cu);  // ⊆ S since C_U is a whole component
  VertexSet cw = component_of(g, W.first(), s1);
  if (!W.is_subset_of(cw))
    throw std::invalid_argument("minimal separator: W side is not connected in G - S");
  if (cw.intersects(cu))
    throw std::logic_error("minimal separator: trim failed to separate");
  return neighborhood(g, cw) & s1;
}

/// Single-vertex convenience form: a minimal u-v separator inside S.
inline VertexSet minimal_uv_separator_within(const Graph& g, int u, int v,
                                             const VertexSet& S) {
  g.check_vertex(u);
  g.check_vertex(v);
  return minimal_separator_between_within(g, VertexSet{u}, VertexSet{v}, S);
}

/// All minimal separators, each verified, sorted lexicographically by their
/// sorted vertex lists.
///
/// Generation: seed with N(C) for every component C of G - N[v] over all v,
/// then saturate: for a known separator S and x ∈ S, every component C of
/// G - (S ∪ N(x)) contributes candidate N(C).  Every candidate is verified
/// with is_minimal_separator before being admitted, so the output is sound
/// by construction; completeness of this generation rule is classical and
/// is additionally anchored to brute_force_separators on every small corpus
/// graph in the tests.
inline std::vector<MinimalSeparator> enumerate_minimal_separators(const Graph& g) {
  std::set<VertexSet> seen;
  std::vector<MinimalSeparator> found;
  std::queue<VertexSet> work;

  auto offer = [&](const VertexSet& cand) {
    if (cand.empty() || seen.count(cand)) return;
    seen.insert(cand);
    if (auto ms = is_minimal_separator(g, cand)) {
      found.push_back(std::move(*ms));
      work.push(cand);
    }
  };

  for (int v = 0; v < g.vertex_count(); ++v) {
    VertexSet closed = g.neighbors(v);
    closed.insert(v);
    for (const VertexSet& c : components(g, closed)) offer(neighborhood(g, c));
  }
  while (!work.empty()) {
    VertexSet s = work.front();
    work.pop();
    for (int x : s) {
      VertexSet excluded = s | g.neighbors(x);
      for (const VertexSet& c : components(g, excluded))
        offer(neighborhood(g, c));
    }
  }

  std::sort(found.begin(), found.end(),
            [](const MinimalSeparator& a, const MinimalSeparator& b) {
              return a.S < b.S;
            });
  return found;
}

/// Ground-truth oracle: tests every nonempty subset.  Guarded against
/// accidental exponential blowup.
inline std::vector<MinimalSeparator> brute_force_separators(const Graph& g) {
  int n = g.vertex_count();
  if (n > 20)
    throw std::invalid_argument("brute_force_separators: refusing n > 20");
  std::vector<MinimalSeparator> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet s;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) s.insert(i);
    if (auto ms = is_minimal_separator(g, s)) out.push_back(std::move(*ms));
  }
  std::sort(out.begin(), out.end(),
            [](const MinimalSeparator& a, const MinimalSeparator& b) {
              return a.S < b.S;
            });
  return out;
}

/// The trace family S_G^v: every N(v) ∩ S over minimal separators S that
/// avoid v.  Note the empty trace is a perfectly good member.
inline std::set<VertexSet> separator_traces(const Graph& g, int v,
                                            const std::vector<MinimalSeparator>& seps) {
  g.check_vertex(v);
  std::set<VertexSet> out;
  for (const MinimalSeparator& ms : seps)
    if (!ms.S.contains(v)) out.insert(g.neighbors(v) & ms.S);
  return out;
}

}  // namespace septamer
