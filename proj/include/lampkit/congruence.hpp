#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <unordered_set>
#include <vector>

#include "lampkit/error.hpp"
#include "lampkit/lattice.hpp"
#include "lampkit/poset.hpp"

namespace lampkit {

// ---------------------------------------------------------------------------
// Congruences as canonical partitions: rep[x] is the least element of the
// block of x. A congruence of a finite lattice is determined by the set of
// covers it collapses, which gives a compact bitmask key.
// ---------------------------------------------------------------------------

struct Congruence {
  std::vector<Elem> rep;

  int n() const { return (int)rep.size(); }
  bool same(Elem x, Elem y) const { return rep[x] == rep[y]; }
  int block_count() const {
    int c = 0;
    for (Elem x = 0; x < n(); ++x)
      if (rep[x] == x) ++c;
    return c;
  }
  friend bool operator==(const Congruence& a, const Congruence& b) { return a.rep == b.rep; }
  friend bool operator<(const Congruence& a, const Congruence& b) { return a.rep < b.rep; }
};

namespace detail {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    if (x < y) std::swap(x, y);  // keep the smaller id as root
    parent[x] = y;
    return true;
  }
};

inline Congruence canonical(UnionFind& uf) {
  int n = (int)uf.parent.size();
  Congruence c;
  c.rep.resize(n);
  for (int x = 0; x < n; ++x) c.rep[x] = uf.find(x);
  return c;
}

}  // namespace detail

inline Congruence identity_congruence(const FiniteLattice& L) {
  Congruence c;
  c.rep.resize(L.n);
  std::iota(c.rep.begin(), c.rep.end(), 0);
  return c;
}

inline bool is_congruence(const FiniteLattice& L, const Congruence& c) {
  for (Elem x = 0; x < L.n; ++x)
    for (Elem y = x + 1; y < L.n; ++y) {
      if (!c.same(x, y)) continue;
      for (Elem z = 0; z < L.n; ++z) {
        if (!c.same(L.meet(x, z), L.meet(y, z))) return false;
        if (!c.same(L.join(x, z), L.join(y, z))) return false;
      }
    }
  return true;
}

// Smallest congruence collapsing all generator pairs: fixpoint closure that
// pushes every fresh identification through meets and joins with every
// element. `order` optionally permutes the element sweep; the result must
// not depend on it.
inline Congruence congruence_closure(const FiniteLattice& L,
                                     const std::vector<CoverPair>& gens,
                                     const std::vector<Elem>* order = nullptr) {
  detail::UnionFind uf(L.n);
  std::deque<CoverPair> work;
  for (auto [a, b] : gens)
    if (uf.unite(a, b)) work.emplace_back(a, b);
  while (!work.empty()) {
    auto [x, y] = work.front();
    work.pop_front();
    for (Elem i = 0; i < L.n; ++i) {
      Elem z = order ? (*order)[i] : i;
      Elem mx = L.meet(x, z), my = L.meet(y, z);
      if (uf.unite(mx, my)) work.emplace_back(mx, my);
      Elem jx = L.join(x, z), jy = L.join(y, z);
      if (uf.unite(jx, jy)) work.emplace_back(jx, jy);
    }
  }
  return detail::canonical(uf);
}

inline Congruence principal_congruence(const FiniteLattice& L, Elem a, Elem b,
                                       const std::vector<Elem>* order = nullptr) {
  return congruence_closure(L, {{a, b}}, order);
}

// Join of congruences: the transitive closure of the union. Each step of a
// connecting chain is compatible with meets and joins, so the closure is
// already a congruence and no further saturation is required.
inline Congruence con_join(const FiniteLattice& L, const Congruence& a,
                           const Congruence& b) {
  detail::UnionFind uf(L.n);
  for (Elem x = 0; x < L.n; ++x) {
    uf.unite(x, a.rep[x]);
    uf.unite(x, b.rep[x]);
  }
  return detail::canonical(uf);
}

// theta <= psi in the refinement order.
inline bool con_leq(const Congruence& a, const Congruence& b) {
  for (Elem x = 0; x < a.n(); ++x)
    if (!b.same(x, a.rep[x])) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Collapsed-edge masks
// ---------------------------------------------------------------------------

struct EdgeMask {
  std::vector<uint64_t> words;
  friend bool operator==(const EdgeMask& a, const EdgeMask& b) { return a.words == b.words; }
  friend bool operator<(const EdgeMask& a, const EdgeMask& b) { return a.words < b.words; }
  bool subset_of(const EdgeMask& o) const {
    for (size_t w = 0; w < words.size(); ++w)
      if (words[w] & ~o.words[w]) return false;
    return true;
  }
};

struct EdgeMaskHash {
  size_t operator()(const EdgeMask& m) const {
    size_t h = 1469598103934665603ull;
    for (uint64_t w : m.words) h = (h ^ w) * 1099511628211ull;
    return h;
  }
};

inline EdgeMask collapsed_edges(const FiniteLattice& L, const Congruence& c) {
  EdgeMask m;
  m.words.assign((L.covers.size() + 63) / 64, 0);
  for (size_t e = 0; e < L.covers.size(); ++e)
    if (c.same(L.covers[e].first, L.covers[e].second))
      m.words[e / 64] |= uint64_t{1} << (e % 64);
  return m;
}

// A congruence block is order convex and cover-connected, so the partition
// can be rebuilt from the collapsed covers alone.
inline Congruence congruence_from_mask(const FiniteLattice& L, const EdgeMask& m) {
  detail::UnionFind uf(L.n);
  for (size_t e = 0; e < L.covers.size(); ++e)
    if ((m.words[e / 64] >> (e % 64)) & 1u) uf.unite(L.covers[e].first, L.covers[e].second);
  return detail::canonical(uf);
}

// ---------------------------------------------------------------------------
// The join-irreducible congruences and the full congruence lattice.
// ---------------------------------------------------------------------------

struct JirCon {
  std::vector<Congruence> members;   // distinct principal cover congruences
  std::vector<EdgeMask> masks;       // parallel to members
  std::vector<int> member_of_edge;   // edge index -> member index
  Poset poset;                       // refinement order
};

inline JirCon jir_con(const FiniteLattice& L) {
  JirCon out;
  std::vector<Congruence> per_edge;
  per_edge.reserve(L.covers.size());
  std::map<EdgeMask, int> seen;
  std::vector<EdgeMask> edge_masks;
  for (auto [p, q] : L.covers) {
    Congruence c = principal_congruence(L, p, q);
    EdgeMask m = collapsed_edges(L, c);
    edge_masks.push_back(m);
    if (!seen.count(m)) {
      seen[m] = (int)out.members.size();
      out.members.push_back(c);
      out.masks.push_back(m);
    }
  }
  // Deterministic order.
  std::vector<int> idx(out.members.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int i, int j) { return out.masks[i] < out.masks[j]; });
  {
    std::vector<Congruence> ms;
    std::vector<EdgeMask> ks;
    std::vector<int> rank(idx.size());
    for (size_t r = 0; r < idx.size(); ++r) rank[idx[r]] = (int)r;
    for (int i : idx) {
      ms.push_back(out.members[i]);
      ks.push_back(out.masks[i]);
    }
    out.members = std::move(ms);
    out.masks = std::move(ks);
    out.member_of_edge.reserve(edge_masks.size());
    for (const EdgeMask& m : edge_masks) out.member_of_edge.push_back(rank[seen[m]]);
  }
  // Each member must be join-irreducible: not the join of the strictly
  // smaller members.
  int k = (int)out.members.size();
  for (int i = 0; i < k; ++i) {
    Congruence below = identity_congruence(L);
    for (int j = 0; j < k; ++j)
      if (j != i && out.masks[j].subset_of(out.masks[i]))
        below = con_join(L, below, out.members[j]);
    require(!(below == out.members[i]), ErrorCode::InternalError,
            "principal cover congruence failed to be join-irreducible");
  }
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && out.masks[i].subset_of(out.masks[j])) rel.emplace_back(i, j);
  out.poset = poset_from_relations(k, rel);
  return out;
}

// Number of congruences, by breadth-first join closure over the principal
// cover congruences. Exact but exponential in the width of Con L; fine at
// desk scale.
inline uint64_t con_count(const FiniteLattice& L, const JirCon& gens) {
  std::unordered_set<EdgeMask, EdgeMaskHash> visited;
  std::deque<EdgeMask> queue;
  EdgeMask empty;
  empty.words.assign((L.covers.size() + 63) / 64, 0);
  visited.insert(empty);
  queue.push_back(empty);
  while (!queue.empty()) {
    EdgeMask m = queue.front();
    queue.pop_front();
    Congruence cur = congruence_from_mask(L, m);
    for (size_t g = 0; g < gens.members.size(); ++g) {
      if (gens.masks[g].subset_of(m)) continue;
      Congruence joined = con_join(L, cur, gens.members[g]);
      EdgeMask km = collapsed_edges(L, joined);
      if (visited.insert(km).second) queue.push_back(km);
    }
  }
  return visited.size();
}

inline uint64_t con_count(const FiniteLattice& L) { return con_count(L, jir_con(L)); }

// The congruence lattice as an explicit FiniteLattice, for small cases.
struct ConLattice {
  FiniteLattice lattice;                 // refinement order
  std::vector<Congruence> congruences;   // id -> congruence
};

inline ConLattice con_lattice(const FiniteLattice& L, size_t limit = 1 << 14) {
  JirCon gens = jir_con(L);
  std::set<Congruence> all;
  all.insert(identity_congruence(L));
  std::deque<Congruence> queue(all.begin(), all.end());
  while (!queue.empty()) {
    Congruence cur = queue.front();
    queue.pop_front();
    for (const Congruence& g : gens.members) {
      Congruence j = con_join(L, cur, g);
      if (all.insert(j).second) {
        require(all.size() <= limit, ErrorCode::BoundTooLarge,
                "congruence lattice larger than the requested limit");
        queue.push_back(j);
      }
    }
  }
  ConLattice out;
  out.congruences.assign(all.begin(), all.end());
  int m = (int)out.congruences.size();
  std::vector<CoverPair> cv;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      if (i == j || !con_leq(out.congruences[i], out.congruences[j])) continue;
      bool cover = true;
      for (int z = 0; z < m && cover; ++z)
        if (z != i && z != j && con_leq(out.congruences[i], out.congruences[z]) &&
            con_leq(out.congruences[z], out.congruences[j]))
          cover = false;
      if (cover) cv.emplace_back(i, j);
    }
  out.lattice = build_lattice(m, cv);
  return out;
}

// ---------------------------------------------------------------------------
// Exhaustive partition oracle for tiny lattices: every equivalence relation
// is tested for compatibility directly. Independent of the join-closure path.
// ---------------------------------------------------------------------------

inline uint64_t con_count_exhaustive(const FiniteLattice& L, int max_n = 10) {
  require(L.n <= max_n, ErrorCode::BoundTooLarge, "exhaustive oracle is for tiny lattices");
  // Restricted growth strings enumerate set partitions.
  std::vector<int> rgs(L.n, 0);
  uint64_t count = 0;
  auto rec = [&](auto&& self, int i, int maxv) -> void {
    if (i == L.n) {
      Congruence c;
      c.rep.resize(L.n, 0);
      std::vector<Elem> first(L.n, -1);
      for (Elem x = 0; x < L.n; ++x) {
        if (first[rgs[x]] < 0) first[rgs[x]] = x;
        c.rep[x] = first[rgs[x]];
      }
      if (is_congruence(L, c)) ++count;
      return;
    }
    for (int v = 0; v <= maxv + 1; ++v) {
      rgs[i] = v;
      self(self, i + 1, std::max(maxv, v));
    }
  };
  rec(rec, 1, 0);  // rgs[0] = 0 fixed
  return count;
}

}  // namespace lampkit
