#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

#include "septamer/graph.hpp"
#include "septamer/separators.hpp"
#include "septamer/structures.hpp"
#include "septamer/zeta.hpp"

namespace septamer {

/// Everything the separator-counting argument derives from one minimal
/// separator S with chosen full sides A and B.  D_list and Z_D are parallel:
/// Z_D[i] belongs to the component D_list[i].
struct ReconstructionCertificate {
  VertexSet S, A, B;
  VertexSet tB;        ///< minimal connected subset of B dominating S
  int u = -1;          ///< removable vertex of tB (highest-indexed)
  int v = -1;          ///< private neighbor of u in S (lowest-indexed)
  VertexSet S_u, S_v, S_A, S_B;
  VertexSet Z_A;       ///< minimal subset of N(v)∖S∖B dominating S_A
  std::vector<VertexSet> D_list;  ///< minimal dominating family from CC(G[A∖N(v)])
  std::vector<VertexSet> Z_D;     ///< per-component minimal subsets of N(v)∩B
  VertexSet Z;         ///< {u} ∪ Z_A ∪ ⋃ Z_D
  VertexSet S_prime;   ///< (S ∖ {v}) ∪ (N(v) ∩ B)
  VertexSet S_pp;      ///< minimal subset of S_prime separating A ∪ {v} from tB ∖ {u}
  VertexSet Q;         ///< ⋃_{z ∈ Z} N(z) ∩ S
  VertexSet R;         ///< N(v) ∩ S_pp
  VertexSet S0;        ///< S ∖ Q ∖ R
  VertexSet B0;        ///< component of G₀ − S0 containing tB ∖ {u}
  int zeta_before = 0;  ///< ζ_G(S)
  int zeta_after = 0;   ///< ζ_{G₀}(S0) where G₀ = G − (Q ∪ R)
  bool dominated_check = false;  ///< no outside vertex sees all of S (verified)
};

enum class BuildStatus { certified, dominated, degenerate_tb };

struct BuildOutcome {
  BuildStatus status = BuildStatus::certified;
  std::optional<ReconstructionCertificate> cert;  ///< set when certified
  int dominator = -1;  ///< lowest outside vertex seeing all of S, when dominated
};

/// Inclusion-minimal connected subset of B whose neighborhood still covers S.
/// Deletes vertices in descending index order whenever connectivity and
/// domination both survive, looping until no deletion is possible.
inline VertexSet minimal_connected_dominator(const Graph& g, const VertexSet& B,
                                             const VertexSet& S) {
  g.check_subset(B);
  g.check_subset(S);
  if (B.empty() || !is_connected(g, B))
    throw std::invalid_argument(
        "minimal_connected_dominator: B must be nonempty and connected");
  if (!S.is_subset_of(neighborhood(g, B)))
    throw std::invalid_argument("minimal_connected_dominator: B does not dominate S");
  VertexSet t = B;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    std::vector<int> order = t.to_vector();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      if (t.size() == 1) break;
      VertexSet cand = t;
      cand.erase(*it);
      if (is_connected(g, cand) && S.is_subset_of(neighborhood(g, cand))) {
        t = std::move(cand);
        shrunk = true;
      }
    }
  }
  return t;
}

namespace detail {

/// Greedy inclusion-minimal subset of `universe` keeping `feasible` true,
/// deleting in descending index order until a fixed point.  `feasible` must
/// hold for the full universe.
template <typename Pred>
VertexSet greedy_minimal_subset(const VertexSet& universe, Pred&& feasible) {
  VertexSet t = universe;
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    std::vector<int> order = t.to_vector();
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      VertexSet cand = t;
      cand.erase(*it);
      if (feasible(cand)) {
        t = std::move(cand);
        shrunk = true;
      }
    }
  }
  return t;
}

/// True when no vertex of W is reachable from U in G − S.
inline bool separates(const Graph& g, const VertexSet& U, const VertexSet& W,
                      const VertexSet& S) {
  VertexSet side = component_of(g, U.first(), S);
  for (int x : U)
    if (!side.contains(x)) side |= component_of(g, x, S);
  return !side.intersects(W);
}

[[noreturn]] inline void violated(const std::string& what) {
  throw std::logic_error("reconstruction: invariant violated: " + what);
}

}  // namespace detail

/// Builds the complete certificate for a minimal separator S with full sides
/// A and B, verifying every structural invariant along the way.  The two
/// non-certificate outcomes mirror the argument's case split: a vertex
/// outside S adjacent to all of S short-circuits the construction
/// ("dominated"), and a single-vertex tB would leave nothing on the B side
/// after removing u ("degenerate_tb" — unreachable in practice, because a
/// one-vertex dominator is itself a dominating vertex).
inline BuildOutcome build_certificate(const Graph& g, const MinimalSeparator& ms,
                                      const VertexSet& A, const VertexSet& B) {
  const VertexSet& S = ms.S;
  if (S.empty()) throw std::invalid_argument("build_certificate: empty separator");
  g.check_subset(S);
  if (A.empty() || B.empty() || A.intersects(B) || !is_connected(g, A) ||
      !is_connected(g, B) || neighborhood(g, A) != S || neighborhood(g, B) != S)
    throw std::invalid_argument("build_certificate: A and B must be full sides of S");

  // dominated case: some outside vertex sees every vertex of S
  for (int w : g.vertices() - S)
    if (S.is_subset_of(g.neighbors(w))) {
      BuildOutcome out;
      out.status = BuildStatus::dominated;
      out.dominator = w;
      return out;
    }

  ReconstructionCertificate c;
  c.S = S;
  c.A = A;
  c.B = B;
  c.dominated_check = true;

  c.tB = minimal_connected_dominator(g, B, S);
  if (c.tB.size() == 1) {
    BuildOutcome out;
    out.status = BuildStatus::degenerate_tb;
    return out;
  }

  // u: highest-indexed vertex whose removal keeps tB connected (some leaf of
  // any spanning tree qualifies, so the scan always succeeds)
  std::vector<int> tb_desc = c.tB.to_vector();
  for (auto it = tb_desc.rbegin(); it != tb_desc.rend(); ++it) {
    VertexSet rest = c.tB;
    rest.erase(*it);
    if (is_connected(g, rest)) {
      c.u = *it;
      break;
    }
  }
  if (c.u < 0) detail::violated("tB has no removable vertex");
  VertexSet tb_u = c.tB;
  tb_u.erase(c.u);

  // v: lowest-indexed private neighbor of u in S
  for (int s : g.neighbors(c.u) & S)
    if (!g.neighbors(s).intersects(tb_u)) {
      c.v = s;
      break;
    }
  if (c.v < 0) detail::violated("u has no private neighbor in S");

  c.S_u = g.neighbors(c.u) & S;
  c.S_v = (g.neighbors(c.v) & S) - c.S_u;
  VertexSet nv_out = g.neighbors(c.v) - S - B;  // candidates for Z_A
  VertexSet nv_b = g.neighbors(c.v) & B;        // candidates for each Z_D
  VertexSet s_rest = S - c.S_u - c.S_v;
  c.S_A = s_rest & neighborhood(g, nv_out);
  c.S_B = (s_rest - c.S_A) & neighborhood(g, nv_b);
  if (c.S_u.intersects(c.S_v) || c.S_u.intersects(c.S_A) || c.S_u.intersects(c.S_B) ||
      c.S_v.intersects(c.S_A) || c.S_v.intersects(c.S_B) || c.S_A.intersects(c.S_B))
    detail::violated("S_u, S_v, S_A, S_B overlap");

  c.Z_A = detail::greedy_minimal_subset(nv_out, [&](const VertexSet& t) {
    return c.S_A.is_subset_of(neighborhood(g, t));
  });
  for (int z : c.Z_A) {
    VertexSet others = c.Z_A;
    others.erase(z);
    if (((g.neighbors(z) & c.S_A) - neighborhood(g, others)).empty())
      detail::violated("Z_A member without a private neighbor");
  }

  // minimal dominating family from the components of G[A ∖ N(v)]
  std::vector<VertexSet> comps = components_within(g, A - g.neighbors(c.v));
  VertexSet d_target = s_rest - c.S_A;
  auto family_dominates = [&](const std::vector<bool>& alive) {
    VertexSet covered;
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (alive[i]) covered |= neighborhood(g, comps[i]);
    return d_target.is_subset_of(covered);
  };
  std::vector<bool> alive(comps.size(), true);
  if (!family_dominates(alive))
    detail::violated("components of A beyond N(v) do not dominate the rest of S");
  bool shrunk = true;
  while (shrunk) {
    shrunk = false;
    for (std::size_t i = comps.size(); i-- > 0;) {
      if (!alive[i]) continue;
      alive[i] = false;
      if (family_dominates(alive)) {
        shrunk = true;
      } else {
        alive[i] = true;
      }
    }
  }
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (alive[i]) c.D_list.push_back(comps[i]);

  for (const VertexSet& d : c.D_list) {
    VertexSet target = neighborhood(g, d) & c.S_B;
    c.Z_D.push_back(detail::greedy_minimal_subset(nv_b, [&](const VertexSet& t) {
      return target.is_subset_of(neighborhood(g, t));
    }));
    for (int z : c.Z_D.back()) {
      VertexSet others = c.Z_D.back();
      others.erase(z);
      if (((g.neighbors(z) & target) - neighborhood(g, others)).empty())
        detail::violated("Z_D member without a private neighbor");
    }
  }

  c.Z = c.Z_A;
  c.Z.insert(c.u);
  for (const VertexSet& zd : c.Z_D) c.Z |= zd;
  for (int z : c.Z) c.Q |= g.neighbors(z) & S;
  if (!c.S_u.is_subset_of(c.Q) || !c.S_A.is_subset_of(c.Q) || !c.S_B.is_subset_of(c.Q))
    detail::violated("Q misses part of S_u, S_A or S_B");

  // trim S' to a minimal separator between A ∪ {v} and tB ∖ {u}
  VertexSet a_side = A;
  a_side.insert(c.v);
  c.S_prime = (S - VertexSet{c.v}) | nv_b;
  c.S_pp = minimal_separator_between_within(g, a_side, tb_u, c.S_prime);
  if (!c.S_pp.is_subset_of(c.S_prime)) detail::violated("trimmed separator left S'");
  if (!detail::separates(g, a_side, tb_u, c.S_pp))
    detail::violated("trimmed S'' does not separate");
  for (int s : c.S_pp) {
    VertexSet smaller = c.S_pp;
    smaller.erase(s);
    if (detail::separates(g, a_side, tb_u, smaller))
      detail::violated("trimmed S'' is not inclusion-minimal");
  }

  c.R = g.neighbors(c.v) & c.S_pp;
  if (!c.S_v.is_subset_of(c.R)) detail::violated("R misses part of S_v");
  c.S0 = S - c.Q - c.R;
  if (!c.S0.is_subset_of(S - c.S_u - c.S_v - c.S_A - c.S_B))
    detail::violated("S0 meets a dominated part of S");

  // the reduced graph G₀ = G − (Q ∪ R): A stays a full side of S0 and the
  // component holding tB ∖ {u} must be full to S0 as well
  VertexSet removed = c.Q | c.R;
  if (removed.intersects(A) || removed.intersects(tb_u))
    detail::violated("Q or R touches A or tB minus u");
  VertexSet excluded = removed | c.S0;
  c.B0 = component_of(g, tb_u.first(), excluded);
  if (!tb_u.is_subset_of(c.B0)) detail::violated("tB minus u split in the reduced graph");
  if (c.B0.intersects(A)) detail::violated("A and B0 are not separated by S0");
  if ((neighborhood(g, A) - removed) != c.S0 || !c.S0.is_subset_of(neighborhood(g, c.B0)))
    detail::violated("A or B0 is not full to S0 in the reduced graph");

  c.zeta_before = zeta(g, S).value;
  InducedSubgraph g0 = induced_subgraph(g, g.vertices() - removed);
  VertexSet s0_sub;
  for (int s : c.S0) s0_sub.insert(g0.to_sub[static_cast<std::size_t>(s)]);
  c.zeta_after = zeta(g0.graph, s0_sub).value;

  BuildOutcome out;
  out.status = BuildStatus::certified;
  out.cert = std::move(c);
  return out;
}

/// First creature construction: ({v}, tB∖{u}, Z_A, private neighbors in S_A).
/// Returns nothing when Z_A is empty.  The witness is assembled from the
/// certificate's deterministic choices; callers re-verify it.
inline std::optional<CreatureWitness> claim1_creature(
    const Graph& g, const ReconstructionCertificate& c) {
  if (c.Z_A.empty()) return std::nullopt;
  CreatureWitness w;
  w.A = VertexSet{c.v};
  w.B = c.tB;
  w.B.erase(c.u);
  for (int z : c.Z_A) {
    VertexSet others = c.Z_A;
    others.erase(z);
    VertexSet priv = (g.neighbors(z) & c.S_A) - neighborhood(g, others);
    if (priv.empty()) detail::violated("Z_A member lost its private neighbor");
    w.X.push_back(z);
    w.Y.push_back(priv.first());
  }
  return w;
}

/// Second creature construction: one matched pair (x_D, y_D) per component in
/// D_list, with shortest-path interiors P_D hooking each x_D back to N(v)∩A.
inline std::optional<CreatureWitness> claim2_creature(
    const Graph& g, const ReconstructionCertificate& c) {
  if (c.D_list.empty()) return std::nullopt;

  VertexSet nv_a = g.neighbors(c.v) & c.A;
  // BFS distances from N(v)∩A inside G[A]
  std::vector<int> dist(static_cast<std::size_t>(g.vertex_count()), -1);
  std::queue<int> queue;
  for (int s : nv_a) {
    dist[static_cast<std::size_t>(s)] = 0;
    queue.push(s);
  }
  while (!queue.empty()) {
    int x = queue.front();
    queue.pop();
    for (int y : g.neighbors(x) & c.A)
      if (dist[static_cast<std::size_t>(y)] < 0) {
        dist[static_cast<std::size_t>(y)] = dist[static_cast<std::size_t>(x)] + 1;
        queue.push(y);
      }
  }

  VertexSet d_target = c.S - c.S_u - c.S_v - c.S_A;
  CreatureWitness w;
  w.B = c.tB;
  w.B.erase(c.u);
  VertexSet a_part = nv_a;
  a_part.insert(c.v);
  std::vector<VertexSet> interiors;

  for (const VertexSet& d : c.D_list) {
    // y_D: lowest vertex of the target dominated by this component alone
    int y_d = -1;
    for (int s : neighborhood(g, d) & d_target) {
      bool shared = false;
      for (const VertexSet& other : c.D_list)
        if (&other != &d && g.neighbors(s).intersects(other)) {
          shared = true;
          break;
        }
      if (!shared) {
        y_d = s;
        break;
      }
    }
    if (y_d < 0) detail::violated("component without a privately dominated vertex");

    // x_D: neighbor of y_D in D closest to N(v)∩A within G[A], lowest index
    int x_d = -1;
    for (int cand : g.neighbors(y_d) & d) {
      if (dist[static_cast<std::size_t>(cand)] < 0)
        detail::violated("component vertex unreachable inside A");
      if (x_d < 0 ||
          dist[static_cast<std::size_t>(cand)] < dist[static_cast<std::size_t>(x_d)])
        x_d = cand;
    }
    if (x_d < 0) detail::violated("privately dominated vertex has no neighbor in its component");

    // P_D: interior of a shortest x_D → N(v)∩A path, walked deterministically
    VertexSet interior;
    int cur = x_d;
    while (dist[static_cast<std::size_t>(cur)] > 1) {
      int next = -1;
      for (int nb : g.neighbors(cur) & c.A)
        if (dist[static_cast<std::size_t>(nb)] ==
            dist[static_cast<std::size_t>(cur)] - 1) {
          next = nb;
          break;
        }
      if (next < 0) detail::violated("shortest-path walk got stuck");
      interior.insert(next);
      cur = next;
    }
    if (!interior.is_subset_of(d)) detail::violated("path interior left its component");
    interiors.push_back(interior);
    a_part |= interior;
    w.X.push_back(x_d);
    w.Y.push_back(y_d);
  }

  // shortest-path interiors may not touch any matched target vertex
  for (const VertexSet& interior : interiors)
    for (int y : w.Y)
      if (g.neighbors(y).intersects(interior))
        detail::violated("path interior touches a matched target");

  w.A = a_part;
  return w;
}

/// Third creature construction for one component D: ({v}, D, Z_D, private
/// neighbors in N(D) ∩ S_B).  D must be a member of the certificate's family.
inline std::optional<CreatureWitness> claim3_creature(
    const Graph& g, const ReconstructionCertificate& c, const VertexSet& D) {
  std::size_t idx = 0;
  while (idx < c.D_list.size() && !(c.D_list[idx] == D)) ++idx;
  if (idx == c.D_list.size())
    throw std::invalid_argument("claim3_creature: D is not in the certificate family");
  const VertexSet& zd = c.Z_D[idx];
  if (zd.empty()) return std::nullopt;

  VertexSet target = neighborhood(g, D) & c.S_B;
  CreatureWitness w;
  w.A = VertexSet{c.v};
  w.B = D;
  for (int z : zd) {
    VertexSet others = zd;
    others.erase(z);
    VertexSet priv = (g.neighbors(z) & target) - neighborhood(g, others);
    if (priv.empty()) detail::violated("Z_D member lost its private neighbor");
    w.X.push_back(z);
    w.Y.push_back(priv.first());
  }
  return w;
}

/// Aggregate results of reconstructing every minimal separator of a graph.
struct CountBreakdown {
  long long separators = 0;      ///< total minimal separators enumerated
  long long dominated = 0;       ///< skipped: some outside vertex sees all of S
  long long certified = 0;       ///< certificates built and verified
  long long degenerate_tb = 0;   ///< single-vertex tB (expected never)
  long long zeta_capped = 0;     ///< skipped: ζ_G(S) exceeds the cap L
  int max_z = 0;                 ///< largest |Z| over certificates
  int max_z_a = 0;               ///< largest |Z_A|
  int max_z_d = 0;               ///< largest |Z_D| over all components
  int max_zeta_drop = 0;         ///< largest ζ_G(S) − ζ_{G₀}(S0)
  std::map<int, long long> zeta_histogram;  ///< ζ_G(S) over all separators
  long long zeta_violations = 0;  ///< certificates where ζ failed to drop
  long long key_collisions = 0;     ///< distinct S sharing (u,v,Q,R,S0,A)
  long long claims_built = 0;       ///< creature witnesses assembled
  long long claim_failures = 0;     ///< witnesses rejected by verify_creature
  bool z_bound_ok = true;           ///< |Z| < k² everywhere (when k > 0)
  bool dominated_traces_ok = true;  ///< each dominated S equals N(w) ∩ S
};

/// Runs the full reconstruction over every minimal separator: classifies the
/// dominated ones, builds and verifies certificates for the rest (skipping
/// separators with ζ_G(S) > L), assembles all three creature constructions,
/// and checks that the key (u, v, Q, R, S0, component index of A) determines
/// S.  Pass k > 0 to additionally check |Z| < k² on every certificate (only
/// meaningful when the graph is known k-creature-free); k = 0 disables it.
inline CountBreakdown count_by_reconstruction(const Graph& g, int k, int L) {
  CountBreakdown out;
  std::vector<MinimalSeparator> seps = enumerate_minimal_separators(g);
  out.separators = static_cast<long long>(seps.size());
  using Key = std::tuple<int, int, VertexSet, VertexSet, VertexSet, int>;
  std::map<Key, VertexSet> keys;

  for (const MinimalSeparator& ms : seps) {
    int zv = zeta(g, ms.S).value;
    ++out.zeta_histogram[zv];

    BuildOutcome outcome =
        build_certificate(g, ms, ms.full_components[0], ms.full_components[1]);
    if (outcome.status == BuildStatus::dominated) {
      ++out.dominated;
      if ((g.neighbors(outcome.dominator) & ms.S) != ms.S)
        out.dominated_traces_ok = false;
      continue;
    }
    if (outcome.status == BuildStatus::degenerate_tb) {
      ++out.degenerate_tb;
      continue;
    }
    const ReconstructionCertificate& c = *outcome.cert;
    if (c.zeta_before > L) {
      ++out.zeta_capped;
      continue;
    }
    ++out.certified;

    out.max_z = std::max(out.max_z, c.Z.size());
    out.max_z_a = std::max(out.max_z_a, c.Z_A.size());
    for (const VertexSet& zd : c.Z_D) out.max_z_d = std::max(out.max_z_d, zd.size());
    if (c.zeta_after >= c.zeta_before) ++out.zeta_violations;
    out.max_zeta_drop = std::max(out.max_zeta_drop, c.zeta_before - c.zeta_after);
    if (k > 0 && c.Z.size() >= k * k) out.z_bound_ok = false;

    auto record = [&](const std::optional<CreatureWitness>& w) {
      if (!w) return;
      ++out.claims_built;
      if (!verify_creature(g, *w).ok) ++out.claim_failures;
    };
    record(claim1_creature(g, c));
    record(claim2_creature(g, c));
    for (const VertexSet& d : c.D_list) record(claim3_creature(g, c, d));

    // recover S from the key: A must reappear among the components left by
    // Q ∪ R ∪ S0, and its neighborhood is S again
    std::vector<VertexSet> comps = components(g, c.Q | c.R | c.S0);
    int a_index = -1;
    for (std::size_t i = 0; i < comps.size(); ++i)
      if (comps[i] == c.A) {
        a_index = static_cast<int>(i);
        break;
      }
    if (a_index < 0 || neighborhood(g, c.A) != ms.S)
      detail::violated("separator is not recoverable from its key");
    Key key{c.u, c.v, c.Q, c.R, c.S0, a_index};
    auto [it, inserted] = keys.emplace(std::move(key), ms.S);
    if (!inserted && !(it->second == ms.S)) ++out.key_collisions;
  }
  return out;
}

}  // namespace septamer
