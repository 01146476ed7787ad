#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "septamer/families.hpp"
#include "septamer/graph.hpp"
#include "septamer/separators.hpp"

namespace septamer {

/// Outcome of a budgeted exhaustive search.  "exhausted" is a proof of
/// absence; "budget_exceeded" is not — callers asserting freeness must check
/// for exhausted, never for the mere lack of a witness.
enum class SearchStatus { found, exhausted, budget_exceeded };

template <typename W>
struct SearchResult {
  SearchStatus status = SearchStatus::exhausted;
  std::optional<W> witness;
  long long steps = 0;  ///< search steps consumed
};

/// Ordered matching pairs (x_i, y_i) claimed to satisfy: x_i y_j is an edge
/// iff i = j.
struct SemiInducedMatching {
  std::vector<std::pair<int, int>> pairs;
};

inline bool verify_semi_induced_matching(const Graph& g,
                                         const SemiInducedMatching& m) {
  VertexSet used;
  for (auto [x, y] : m.pairs) {
    g.check_vertex(x);
    g.check_vertex(y);
    if (x == y || used.contains(x) || used.contains(y)) return false;
    used.insert(x);
    used.insert(y);
  }
  for (std::size_t i = 0; i < m.pairs.size(); ++i)
    for (std::size_t j = 0; j < m.pairs.size(); ++j)
      if (g.has_edge(m.pairs[i].first, m.pairs[j].second) != (i == j))
        return false;
  return true;
}

/// The tuple (A, B, X, Y).  X and Y are ordered lists: x_i is matched to y_i.
struct CreatureWitness {
  VertexSet A, B;
  std::vector<int> X, Y;
  int k() const { return static_cast<int>(X.size()); }
};

struct CreatureCheck {
  bool ok = true;
  std::string violation;  ///< empty when ok; otherwise names the failed condition
};

/// Checks every defining condition of a creature and names the first one
/// violated.  The order below is fixed so diagnostics are stable.
inline CreatureCheck verify_creature(const Graph& g, const CreatureWitness& w) {
  auto fail = [](const char* what) { return CreatureCheck{false, what}; };

  if (w.X.size() != w.Y.size()) return fail("size-mismatch");
  if (w.X.empty() || w.A.empty() || w.B.empty()) return fail("empty-part");

  VertexSet xs, ys;
  for (int x : w.X) {
    g.check_vertex(x);
    if (xs.contains(x)) return fail("not-disjoint");
    xs.insert(x);
  }
  for (int y : w.Y) {
    g.check_vertex(y);
    if (ys.contains(y)) return fail("not-disjoint");
    ys.insert(y);
  }
  g.check_subset(w.A);
  g.check_subset(w.B);
  const VertexSet* parts[4] = {&w.A, &w.B, &xs, &ys};
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j)
      if (parts[i]->intersects(*parts[j])) return fail("not-disjoint");

  if (!is_connected(g, w.A)) return fail("A-not-connected");
  if (!is_connected(g, w.B)) return fail("B-not-connected");

  if (!is_anti_adjacent(g, w.A, w.B)) return fail("A-sees-B");
  if (!is_anti_adjacent(g, w.A, ys)) return fail("A-sees-Y");
  if (!is_anti_adjacent(g, w.B, xs)) return fail("B-sees-X");

  for (int x : w.X)
    if (!g.neighbors(x).intersects(w.A)) return fail("X-unattached");
  for (int y : w.Y)
    if (!g.neighbors(y).intersects(w.B)) return fail("Y-unattached");

  for (std::size_t i = 0; i < w.X.size(); ++i)
    for (std::size_t j = 0; j < w.Y.size(); ++j)
      if (g.has_edge(w.X[i], w.Y[j]) != (i == j)) return fail("matching");

  return {};
}

namespace detail {

/// Enumerates the connected subsets of G[allowed] in a canonical order:
/// grouped by smallest member (ascending), each group pre-order (a set is
/// visited before its extensions).  visit returning true stops everything.
/// Every connected subset of size <= max_size is visited exactly once.
template <typename Visit>
bool enumerate_connected_subsets(const Graph& g, const VertexSet& allowed,
                                 int max_size, Visit&& visit) {
  if (max_size <= 0) return false;
  std::vector<int> roots = allowed.to_vector();
  for (int root : roots) {
    VertexSet permitted = allowed;
    for (int v : roots) {
      if (v >= root) break;
      permitted.erase(v);  // sets with a smaller minimum belong to that root
    }
    VertexSet start{root};
    // rec(S, ext, banned): visit S, then branch on each extension vertex in
    // ascending order, banning it afterwards so no subset repeats.
    auto rec = [&](auto&& self, const VertexSet& S, const VertexSet& ext,
                   VertexSet banned) -> bool {
      if (visit(S)) return true;
      if (S.size() >= max_size) return false;
      for (int v : ext.to_vector()) {
        if (banned.contains(v)) continue;
        VertexSet s2 = S;
        s2.insert(v);
        VertexSet ext2 = (ext | (g.neighbors(v) & permitted)) - s2 - banned;
        if (self(self, s2, ext2, banned)) return true;
        banned.insert(v);
      }
      return false;
    };
    if (rec(rec, start, g.neighbors(root) & permitted, VertexSet{})) return true;
  }
  return false;
}

}  // namespace detail

/// Exhaustive budgeted search for a k-creature.
///
/// Pivots on the semi-induced matching (the most constraining condition):
/// enumerates ordered matchings as strictly increasing edge-index sequences,
/// trying both orientations of every pair except the first (swapping all
/// X/Y roles maps creatures to creatures, so one global orientation may be
/// fixed).  For a fixed matching, A must be a connected subset of
/// F_A = V ∖ X ∖ Y ∖ N(Y) dominating X; those are enumerated per component.
/// B then exists iff some component of G[F_B ∖ N[A]] dominates Y, because a
/// valid B stays valid when grown to its whole component (all constraints
/// on B are closed under that superset) — so only whole components need
/// testing, which keeps the inner check polynomial.
///
/// Steps counted against the budget: matching-DFS nodes and A-candidates.
inline SearchResult<CreatureWitness> find_creature(const Graph& g, int k,
                                                   long long budget) {
  if (k < 1) throw std::invalid_argument("find_creature: k must be at least 1");
  SearchResult<CreatureWitness> result;
  auto edges = g.edges();
  std::vector<std::pair<int, int>> pairs;  // oriented (x_i, y_i)
  bool out_of_budget = false;

  auto tick = [&]() {
    if (result.steps >= budget) {
      out_of_budget = true;
      return true;
    }
    ++result.steps;
    return false;
  };

  // Complete matching: search for A, then B.
  auto try_matching = [&]() -> bool {
    VertexSet xs, ys;
    for (auto [x, y] : pairs) {
      xs.insert(x);
      ys.insert(y);
    }
    // A avoids X, Y and N(Y) (anti-adjacency); B mirrors with N(X).
    VertexSet fa = g.vertices() - xs - ys - neighborhood(g, ys);
    VertexSet fb = g.vertices() - xs - ys - neighborhood(g, xs);

    for (const VertexSet& comp : components_within(g, fa)) {
      // A must dominate X, so only components seeing all of X can host it
      bool can = true;
      for (int x : xs)
        if (!g.neighbors(x).intersects(comp)) {
          can = false;
          break;
        }
      if (!can) continue;
      bool stop = detail::enumerate_connected_subsets(
          g, comp, comp.size(), [&](const VertexSet& a) {
            if (tick()) return true;
            for (int x : xs)
              if (!g.neighbors(x).intersects(a)) return false;
            VertexSet region = fb - closed_neighborhood(g, a);
            for (const VertexSet& b : components_within(g, region)) {
              bool dom = true;
              for (int y : ys)
                if (!g.neighbors(y).intersects(b)) {
                  dom = false;
                  break;
                }
              if (!dom) continue;
              CreatureWitness w;
              w.A = a;
              w.B = b;
              for (auto [x, y] : pairs) {
                w.X.push_back(x);
                w.Y.push_back(y);
              }
              CreatureCheck check = verify_creature(g, w);
              if (!check.ok)
                throw std::logic_error("find_creature: unverified candidate: " +
                                       check.violation);
              result.witness = std::move(w);
              return true;
            }
            return false;
          });
      if (stop) return true;
    }
    return false;
  };

  // Ordered matchings as increasing edge-index sequences.
  auto extend = [&](auto&& self, std::size_t next_edge) -> bool {
    if (tick()) return true;
    if (static_cast<int>(pairs.size()) == k) return try_matching();
    for (std::size_t e = next_edge; e < edges.size(); ++e) {
      auto [u, v] = edges[e];
      bool clash = false;
      for (auto [x, y] : pairs)
        if (x == u || x == v || y == u || y == v) {
          clash = true;
          break;
        }
      if (clash) continue;
      for (int orient = 0; orient < (pairs.empty() ? 1 : 2); ++orient) {
        int x = orient == 0 ? u : v;
        int y = orient == 0 ? v : u;
        // semi-induced against the existing pairs: no cross chords
        bool ok = true;
        for (auto [px, py] : pairs)
          if (g.has_edge(px, y) || g.has_edge(x, py)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        pairs.emplace_back(x, y);
        bool stop = self(self, e + 1);
        pairs.pop_back();
        if (stop) return true;
      }
    }
    return false;
  };

  bool stopped = extend(extend, 0);
  if (stopped && result.witness) {
    result.status = SearchStatus::found;
  } else if (out_of_budget) {
    result.status = SearchStatus::budget_exceeded;
  } else {
    result.status = SearchStatus::exhausted;
  }
  return result;
}

/// The 2^k separators a creature forces in its own induced subgraph
/// H = G[A ∪ B ∪ X ∪ Y]: for every way of picking one endpoint from each
/// matching edge, the picked set trims to a minimal A-B separator of H.
/// Separators are reported in H's indexing; the embedded InducedSubgraph
/// carries the maps back to G.
struct CreatureSeparatorFamily {
  InducedSubgraph sub;
  std::vector<MinimalSeparator> separators;  ///< one per endpoint choice, 2^k total
};

inline CreatureSeparatorFamily creature_separators(const Graph& g,
                                                   const CreatureWitness& w) {
  CreatureCheck check = verify_creature(g, w);
  if (!check.ok)
    throw std::invalid_argument("creature_separators: invalid witness: " +
                                check.violation);
  int k = w.k();
  if (k > 20) throw std::invalid_argument("creature_separators: k > 20");

  VertexSet all = w.A | w.B;
  for (int x : w.X) all.insert(x);
  for (int y : w.Y) all.insert(y);

  CreatureSeparatorFamily fam;
  fam.sub = induced_subgraph(g, all);
  const Graph& h = fam.sub.graph;
  auto to_sub = [&](int v) { return fam.sub.to_sub[static_cast<std::size_t>(v)]; };

  int a0 = to_sub(w.A.first());
  int b0 = to_sub(w.B.first());
  std::set<VertexSet> distinct;
  for (std::uint64_t choice = 0; choice < (std::uint64_t{1} << k); ++choice) {
    VertexSet t;
    for (int i = 0; i < k; ++i)
      t.insert(to_sub(choice >> i & 1 ? w.X[static_cast<std::size_t>(i)]
                                      : w.Y[static_cast<std::size_t>(i)]));
    VertexSet trimmed = minimal_uv_separator_within(h, a0, b0, t);
    auto ms = is_minimal_separator(h, trimmed);
    if (!ms)
      throw std::logic_error("creature_separators: lifted set failed verification");
    if (!distinct.insert(trimmed).second)
      throw std::logic_error("creature_separators: endpoint choices collided");
    fam.separators.push_back(std::move(*ms));
  }
  return fam;
}

/// Branch-set model of a k-skinny-ladder as an induced minor: p, q, r hold
/// the branch sets of p_i, q_i, r_i in pattern order.
struct LadderModel {
  int k = 0;
  std::vector<VertexSet> p, q, r;
};

/// From-scratch verification of the induced-minor conditions: disjoint
/// nonempty connected branch sets whose pairwise adjacency in G matches the
/// skinny-ladder pattern exactly (edge somewhere iff the roles are adjacent).
inline bool verify_ladder_model(const Graph& g, const LadderModel& m) {
  int k = m.k;
  if (k < 1) return false;
  if (static_cast<int>(m.p.size()) != k || static_cast<int>(m.q.size()) != k ||
      static_cast<int>(m.r.size()) != k)
    return false;

  Graph pattern = skinny_ladder(k).graph;  // roles: p_i = i-1, q_i = k+i-1, r_i = 2k+i-1
  std::vector<const VertexSet*> branch(static_cast<std::size_t>(3 * k));
  for (int i = 0; i < k; ++i) {
    branch[static_cast<std::size_t>(i)] = &m.p[static_cast<std::size_t>(i)];
    branch[static_cast<std::size_t>(k + i)] = &m.q[static_cast<std::size_t>(i)];
    branch[static_cast<std::size_t>(2 * k + i)] = &m.r[static_cast<std::size_t>(i)];
  }

  VertexSet used;
  for (const VertexSet* b : branch) {
    if (b->empty()) return false;
    if (b->last() >= g.vertex_count()) return false;
    if (used.intersects(*b)) return false;
    used |= *b;
    if (!is_connected(g, *b)) return false;
  }
  for (int a = 0; a < 3 * k; ++a)
    for (int b = a + 1; b < 3 * k; ++b) {
      bool joined = !is_anti_adjacent(g, *branch[static_cast<std::size_t>(a)],
                                      *branch[static_cast<std::size_t>(b)]);
      if (joined != pattern.has_edge(a, b)) return false;
    }
  return true;
}

/// Budgeted exhaustive search for a k-skinny-ladder induced-minor model.
///
/// Assigns branch sets in the fixed role order r1, p1, q1, r2, p2, q2, …
/// For the next role, candidates are connected subsets of the region that
/// excludes all assigned branches and the neighborhoods of assigned roles
/// that must stay anti-adjacent; a candidate must touch every assigned
/// pattern-neighbor.  A cheap lookahead prunes assignments that leave some
/// future role with no possible vertex.  Steps = candidate subsets tested.
inline SearchResult<LadderModel> find_skinny_ladder_minor(const Graph& g, int k,
                                                          long long budget) {
  if (k < 1)
    throw std::invalid_argument("find_skinny_ladder_minor: k must be at least 1");
  SearchResult<LadderModel> result;
  Graph pattern = skinny_ladder(k).graph;
  int roles = 3 * k;

  // assignment order r1, p1, q1, r2, …  (pattern ids)
  std::vector<int> order;
  for (int i = 0; i < k; ++i) {
    order.push_back(2 * k + i);
    order.push_back(i);
    order.push_back(k + i);
  }
  std::vector<VertexSet> branch(static_cast<std::size_t>(roles));
  std::vector<bool> assigned(static_cast<std::size_t>(roles), false);
  bool out_of_budget = false;

  // region a candidate for `role` must live in, given current assignments
  auto region_for = [&](int role) {
    VertexSet region = g.vertices();
    for (int other = 0; other < roles; ++other) {
      if (!assigned[static_cast<std::size_t>(other)]) continue;
      region -= branch[static_cast<std::size_t>(other)];
      if (!pattern.has_edge(role, other))
        region -= neighborhood(g, branch[static_cast<std::size_t>(other)]);
    }
    return region;
  };

  auto rec = [&](auto&& self, int step) -> bool {
    if (step == roles) {
      LadderModel m;
      m.k = k;
      m.p.assign(branch.begin(), branch.begin() + k);
      m.q.assign(branch.begin() + k, branch.begin() + 2 * k);
      m.r.assign(branch.begin() + 2 * k, branch.end());
      if (!verify_ladder_model(g, m))
        throw std::logic_error("find_skinny_ladder_minor: unverified model");
      result.witness = std::move(m);
      return true;
    }
    int role = order[static_cast<std::size_t>(step)];
    VertexSet region = region_for(role);
    if (region.empty()) return false;
    // every remaining role needs at least one vertex outside all branches
    VertexSet unused = g.vertices();
    for (int other = 0; other < roles; ++other)
      if (assigned[static_cast<std::size_t>(other)])
        unused -= branch[static_cast<std::size_t>(other)];
    int remaining_roles = roles - step;
    if (unused.size() < remaining_roles) return false;
    int max_size = std::min(unused.size() - remaining_roles + 1, region.size());

    return detail::enumerate_connected_subsets(
        g, region, max_size, [&](const VertexSet& cand) {
          if (result.steps >= budget) {
            out_of_budget = true;
            return true;
          }
          ++result.steps;
          // must touch every assigned pattern-neighbor
          for (int other = 0; other < roles; ++other)
            if (assigned[static_cast<std::size_t>(other)] &&
                pattern.has_edge(role, other) &&
                !neighborhood(g, branch[static_cast<std::size_t>(other)])
                     .intersects(cand))
              return false;
          branch[static_cast<std::size_t>(role)] = cand;
          assigned[static_cast<std::size_t>(role)] = true;
          // lookahead: every unassigned role still needs a viable vertex
          bool viable = true;
          for (int later = step + 1; viable && later < roles; ++later) {
            int future = order[static_cast<std::size_t>(later)];
            VertexSet fregion = region_for(future);
            if (fregion.empty()) viable = false;
            for (int other = 0; viable && other < roles; ++other)
              if (assigned[static_cast<std::size_t>(other)] &&
                  pattern.has_edge(future, other) &&
                  !neighborhood(g, branch[static_cast<std::size_t>(other)])
                       .intersects(fregion))
                viable = false;
          }
          bool stop = viable && self(self, step + 1);
          assigned[static_cast<std::size_t>(role)] = false;
          branch[static_cast<std::size_t>(role)].clear();
          return stop;
        });
  };

  bool stopped = rec(rec, 0);
  if (stopped && result.witness) {
    result.status = SearchStatus::found;
  } else if (out_of_budget) {
    result.status = SearchStatus::budget_exceeded;
  } else {
    result.status = SearchStatus::exhausted;
  }
  return result;
}

}  // namespace septamer
