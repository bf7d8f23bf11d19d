#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "lampkit/congruence.hpp"
#include "lampkit/construction.hpp"
#include "lampkit/error.hpp"
#include "lampkit/lamps.hpp"
#include "lampkit/lattice.hpp"
#include "lampkit/layout.hpp"
#include "lampkit/poset.hpp"

namespace lampkit {

// ---------------------------------------------------------------------------
// Trajectories: maximal chains of edges where consecutive edges are opposite
// sides of a 4-cell. Every trajectory carries exactly one neon tube; it is
// straight when that tube sits on the upper boundary and a hat trajectory
// otherwise.
// ---------------------------------------------------------------------------

struct Trajectory {
  std::vector<int> edges;  // indices into L.covers, ordered along the path
  int top_edge = -1;       // the unique neon-tube edge
  bool hat = false;
};

inline std::vector<Trajectory> trajectories(const FiniteLattice& L, const Layout& lay) {
  int E = (int)L.covers.size();
  std::map<CoverPair, int> edge_id;
  for (int e = 0; e < E; ++e) edge_id[L.covers[e]] = e;

  std::vector<std::vector<int>> adj(E);
  for (const FourCell& c : four_cells(L, lay)) {
    int e_bl = edge_id.at({c.bottom, c.left});
    int e_br = edge_id.at({c.bottom, c.right});
    int e_ul = edge_id.at({c.left, c.top});
    int e_ur = edge_id.at({c.right, c.top});
    adj[e_bl].push_back(e_ur);  // opposite pairs share no endpoint
    adj[e_ur].push_back(e_bl);
    adj[e_br].push_back(e_ul);
    adj[e_ul].push_back(e_br);
  }
  for (int e = 0; e < E; ++e)
    require(adj[e].size() <= 2, ErrorCode::InternalError,
            "edge with more than two consecutive edges");

  auto irr = irreducibles(L);
  std::vector<bool> mir(L.n, false);
  for (Elem m : irr.mir) mir[m] = true;
  std::vector<bool> on_up(L.n, false);
  for (Elem x : lay.upper_left) on_up[x] = true;
  for (Elem x : lay.upper_right) on_up[x] = true;

  std::vector<Trajectory> out;
  std::vector<bool> seen(E, false);
  for (int e0 = 0; e0 < E; ++e0) {
    if (seen[e0]) continue;
    // Walk to one end of the path, then collect.
    int prev = -1, cur = e0;
    int guard = 0;
    while (true) {
      require(++guard <= 2 * E + 4, ErrorCode::InternalError, "trajectory cycle");
      int nxt = -1;
      for (int nb : adj[cur])
        if (nb != prev) nxt = nb;
      if (nxt < 0 || nxt == e0) break;
      prev = cur;
      cur = nxt;
    }
    Trajectory t;
    prev = -1;
    int walk = cur;
    while (walk >= 0) {
      t.edges.push_back(walk);
      seen[walk] = true;
      int nxt = -1;
      for (int nb : adj[walk])
        if (nb != prev && !seen[nb]) nxt = nb;
      prev = walk;
      walk = nxt;
    }
    bool has_upper = false;
    for (int e : t.edges) {
      auto [p, q] = L.covers[e];
      if ((on_up[p] && on_up[q])) has_upper = true;
      if (mir[p]) {
        require(t.top_edge < 0, ErrorCode::InternalError,
                "trajectory with two neon tubes");
        t.top_edge = e;
      }
    }
    require(t.top_edge >= 0, ErrorCode::InternalError, "trajectory without a neon tube");
    t.hat = !has_upper;
    // Cross-check the two characterizations of straightness.
    Elem tube_foot = L.covers[t.top_edge].first;
    require(t.hat == !lay.on_boundary(tube_foot), ErrorCode::InternalError,
            "hat/straight classification mismatch");
    out.push_back(std::move(t));
  }
  std::sort(out.begin(), out.end(),
            [](const Trajectory& a, const Trajectory& b) { return a.top_edge < b.top_edge; });
  return out;
}

// ---------------------------------------------------------------------------
// The relations on trajectories and the quotient poset.
// ---------------------------------------------------------------------------

struct TrajectoryOrder {
  std::vector<Trajectory> trajs;
  std::vector<std::vector<bool>> sigma;  // the generating relation
  std::vector<std::vector<bool>> tau;    // reflexive-transitive closure
  std::vector<int> block;                // theta block id per trajectory
  int block_count = 0;
  Poset quotient;                        // tau / theta
};

inline bool sigma_related(const FiniteLattice& L, const Trajectory& u, const Trajectory& v) {
  auto [u0, u1] = L.covers[u.top_edge];
  auto [v0, v1] = L.covers[v.top_edge];
  return u.hat && L.le(u1, v1) && !L.le(u0, v0);
}

inline TrajectoryOrder trajectory_order(const FiniteLattice& L, const Layout& lay) {
  TrajectoryOrder T;
  T.trajs = trajectories(L, lay);
  int k = (int)T.trajs.size();
  T.sigma.assign(k, std::vector<bool>(k, false));
  T.tau.assign(k, std::vector<bool>(k, false));
  for (int i = 0; i < k; ++i) {
    T.tau[i][i] = true;
    for (int j = 0; j < k; ++j)
      if (i != j && sigma_related(L, T.trajs[i], T.trajs[j])) {
        T.sigma[i][j] = true;
        T.tau[i][j] = true;
      }
  }
  for (int m = 0; m < k; ++m)
    for (int i = 0; i < k; ++i)
      if (T.tau[i][m])
        for (int j = 0; j < k; ++j)
          if (T.tau[m][j]) T.tau[i][j] = true;

  T.block.assign(k, -1);
  for (int i = 0; i < k; ++i) {
    if (T.block[i] >= 0) continue;
    T.block[i] = T.block_count;
    for (int j = i + 1; j < k; ++j)
      if (T.tau[i][j] && T.tau[j][i]) T.block[j] = T.block_count;
    ++T.block_count;
  }
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (T.tau[i][j] && T.block[i] != T.block[j]) rel.emplace_back(T.block[i], T.block[j]);
  T.quotient = poset_from_relations(T.block_count, rel);
  return T;
}

// ---------------------------------------------------------------------------
// Quotient-versus-lamps cross-check.
// ---------------------------------------------------------------------------

struct QuotientIsoReport {
  bool block_lamp_bijection = false;
  bool order_agrees = false;      // tau(u,v) <=> Lmp u <= Lmp v
  bool con_top_matches = false;   // con(top edge) = con(lamp interval)
  bool iso_jir_con = false;       // quotient poset vs join-irreducible congruences
  bool iso_jir_elems = false;     // the same against Jir L itself (informational)
  int trajectory_count = 0;
  int hat_count = 0;
  int block_count_ = 0;

  bool ok() const { return block_lamp_bijection && order_agrees && con_top_matches && iso_jir_con; }
};

inline int lamp_of_tube_foot(const std::vector<Lamp>& lam, Elem foot) {
  for (int i = 0; i < (int)lam.size(); ++i)
    for (Elem m : lam[i].tubes)
      if (m == foot) return i;
  return -1;
}

inline QuotientIsoReport check_quotient_iso(const FiniteLattice& L, const Layout& lay,
                                            const LampPoset& LP, const JirCon& jc) {
  QuotientIsoReport rep;
  TrajectoryOrder T = trajectory_order(L, lay);
  int k = (int)T.trajs.size();
  rep.trajectory_count = k;
  for (const Trajectory& t : T.trajs)
    if (t.hat) ++rep.hat_count;
  rep.block_count_ = T.block_count;

  std::vector<int> lmp(k, -1);
  for (int i = 0; i < k; ++i) {
    lmp[i] = lamp_of_tube_foot(LP.lamps, L.covers[T.trajs[i].top_edge].first);
    require(lmp[i] >= 0, ErrorCode::InternalError, "tube without a lamp");
  }

  // Blocks correspond to lamps.
  rep.block_lamp_bijection = true;
  std::map<int, int> lamp_of_block;
  for (int i = 0; i < k; ++i) {
    auto it = lamp_of_block.find(T.block[i]);
    if (it == lamp_of_block.end())
      lamp_of_block[T.block[i]] = lmp[i];
    else if (it->second != lmp[i])
      rep.block_lamp_bijection = false;
  }
  {
    std::vector<int> used;
    for (auto& [b, l] : lamp_of_block) used.push_back(l);
    std::sort(used.begin(), used.end());
    if (std::adjacent_find(used.begin(), used.end()) != used.end())
      rep.block_lamp_bijection = false;
    if ((int)lamp_of_block.size() != (int)LP.lamps.size()) rep.block_lamp_bijection = false;
  }

  rep.order_agrees = true;
  for (int i = 0; i < k && rep.order_agrees; ++i)
    for (int j = 0; j < k; ++j)
      if (T.tau[i][j] != LP.poset.le(lmp[i], lmp[j])) {
        rep.order_agrees = false;
        break;
      }

  rep.con_top_matches = true;
  {
    std::vector<Congruence> lamp_con;
    for (const Lamp& I : LP.lamps)
      lamp_con.push_back(principal_congruence(L, I.foot, I.peak));
    for (int i = 0; i < k && rep.con_top_matches; ++i) {
      const Congruence& via_tube = jc.members[jc.member_of_edge[T.trajs[i].top_edge]];
      if (!(via_tube == lamp_con[lmp[i]])) rep.con_top_matches = false;
    }
  }

  rep.iso_jir_con = poset_isomorphic(T.quotient, jc.poset);
  rep.iso_jir_elems = poset_isomorphic(T.quotient, poset_of_lattice_jir(L));
  return rep;
}

inline QuotientIsoReport check_quotient_iso(const FiniteLattice& L, const Layout& lay) {
  return check_quotient_iso(L, lay, lamp_poset(L, lay), jir_con(L));
}

}  // namespace lampkit
