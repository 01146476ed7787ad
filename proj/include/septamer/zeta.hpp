#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "septamer/graph.hpp"

namespace septamer {

/// Witness for ζ_G(S): a maximum I ⊆ S that is independent and has
/// |N(v) ∩ I| ≤ 1 for every vertex v outside S.
struct ZetaCertificate {
  VertexSet S;
  VertexSet I;
  int value = 0;
};

/// Re-checks the two ζ conditions from scratch; certificates must survive
/// this independently of how they were computed.
inline bool check_zeta_witness(const Graph& g, const VertexSet& S,
                               const VertexSet& I) {
  g.check_subset(S);
  if (!I.is_subset_of(S)) return false;
  for (int v : I)
    if (g.neighbors(v).intersects(I)) return false;
  for (int v : g.vertices() - S)
    if ((g.neighbors(v) & I).size() > 1) return false;
  return true;
}

namespace detail {

// Shared precomputation: S's elements in a fixed order, adjacency among them
// as element-index bitmasks, and each element's outside neighbors.
struct ZetaContext {
  std::vector<int> elem;                 // element index -> vertex
  std::vector<std::uint64_t> adj_mask;   // adjacency within S
  std::vector<VertexSet> out_adj;        // neighbors outside S

  ZetaContext(const Graph& g, const VertexSet& S, const std::vector<int>& order)
      : elem(order) {
    if (elem.size() > 64)
      throw std::invalid_argument("zeta: |S| > 64 is beyond desk scale");
    std::vector<int> pos(static_cast<std::size_t>(g.vertex_count()), -1);
    for (std::size_t i = 0; i < elem.size(); ++i)
      pos[static_cast<std::size_t>(elem[i])] = static_cast<int>(i);
    adj_mask.assign(elem.size(), 0);
    out_adj.resize(elem.size());
    for (std::size_t i = 0; i < elem.size(); ++i) {
      for (int w : g.neighbors(elem[i])) {
        int j = pos[static_cast<std::size_t>(w)];
        if (j >= 0)
          adj_mask[i] |= std::uint64_t{1} << j;
        else if (!S.contains(w))
          out_adj[i].insert(w);
      }
    }
  }
};

// Branch and bound for the optimum value only.
inline void zeta_best(const ZetaContext& ctx, std::size_t pos,
                      std::uint64_t chosen, const VertexSet& touched, int count,
                      int& best) {
  if (count > best) best = count;
  if (pos == ctx.elem.size()) return;
  if (count + static_cast<int>(ctx.elem.size() - pos) <= best) return;
  // include ctx.elem[pos] when no conflict arises
  if ((ctx.adj_mask[pos] & chosen) == 0 &&
      !ctx.out_adj[pos].intersects(touched)) {
    VertexSet touched2 = touched | ctx.out_adj[pos];
    zeta_best(ctx, pos + 1, chosen | (std::uint64_t{1} << pos), touched2,
              count + 1, best);
  }
  zeta_best(ctx, pos + 1, chosen, touched, count, best);
}

// Include-first DFS over ascending vertex order: the first witness reaching
// the optimum is the lexicographically smallest maximum witness.
inline bool zeta_witness(const ZetaContext& ctx, std::size_t pos,
                         std::uint64_t chosen, const VertexSet& touched,
                         int count, int target, std::uint64_t& out) {
  if (count == target) {
    out = chosen;
    return true;
  }
  if (pos == ctx.elem.size()) return false;
  if (count + static_cast<int>(ctx.elem.size() - pos) < target) return false;
  if ((ctx.adj_mask[pos] & chosen) == 0 &&
      !ctx.out_adj[pos].intersects(touched)) {
    VertexSet touched2 = touched | ctx.out_adj[pos];
    if (zeta_witness(ctx, pos + 1, chosen | (std::uint64_t{1} << pos), touched2,
                     count + 1, target, out))
      return true;
  }
  return zeta_witness(ctx, pos + 1, chosen, touched, count, target, out);
}

}  // namespace detail

/// Exact ζ_G(S) with the lexicographically smallest maximum witness.
///
/// Two passes: a branch-and-bound over S ordered by decreasing degree (most
/// constrained first) establishes the optimum with the bound
/// |I_partial| + |S_remaining|; a second include-first pass in ascending
/// vertex order emits the lex-least witness of that value.
inline ZetaCertificate zeta(const Graph& g, const VertexSet& S) {
  g.check_subset(S);
  ZetaCertificate cert;
  cert.S = S;
  if (S.empty()) return cert;

  std::vector<int> by_degree = S.to_vector();
  std::stable_sort(by_degree.begin(), by_degree.end(),
                   [&](int a, int b) { return g.degree(a) > g.degree(b); });
  detail::ZetaContext bound_ctx(g, S, by_degree);
  int best = 0;
  detail::zeta_best(bound_ctx, 0, 0, VertexSet{}, 0, best);

  detail::ZetaContext lex_ctx(g, S, S.to_vector());
  std::uint64_t mask = 0;
  bool found = detail::zeta_witness(lex_ctx, 0, 0, VertexSet{}, 0, best, mask);
  if (!found) throw std::logic_error("zeta: witness pass missed the optimum");
  for (std::size_t i = 0; i < lex_ctx.elem.size(); ++i)
    if (mask >> i & 1) cert.I.insert(lex_ctx.elem[i]);
  cert.value = best;
  if (!check_zeta_witness(g, S, cert.I) || cert.I.size() != best)
    throw std::logic_error("zeta: produced witness failed re-verification");
  return cert;
}

/// Oracle: scans all 2^|S| subsets.
inline int zeta_brute(const Graph& g, const VertexSet& S) {
  g.check_subset(S);
  if (S.size() > 20) throw std::invalid_argument("zeta_brute: refusing |S| > 20");
  detail::ZetaContext ctx(g, S, S.to_vector());
  std::size_t m = ctx.elem.size();

  // element mask of S-neighbors for every outside vertex with >= 2 S-edges
  std::vector<std::uint64_t> outside_masks;
  for (int w : g.vertices() - S) {
    std::uint64_t mask = 0;
    for (std::size_t i = 0; i < m; ++i)
      if (ctx.out_adj[i].contains(w)) mask |= std::uint64_t{1} << i;
    if (std::popcount(mask) >= 2) outside_masks.push_back(mask);
  }

  int best = 0;
  for (std::uint64_t pick = 0; pick < (std::uint64_t{1} << m); ++pick) {
    bool ok = true;
    for (std::size_t i = 0; ok && i < m; ++i)
      if ((pick >> i & 1) && (ctx.adj_mask[i] & pick) != 0) ok = false;
    for (std::size_t j = 0; ok && j < outside_masks.size(); ++j)
      if (std::popcount(outside_masks[j] & pick) > 1) ok = false;
    if (ok) best = std::max(best, std::popcount(pick));
  }
  return best;
}

}  // namespace septamer
