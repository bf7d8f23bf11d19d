#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "lampkit/error.hpp"
#include "lampkit/lattice.hpp"

namespace lampkit {

// ---------------------------------------------------------------------------
// Poset on at most 64 elements, order stored as bitmask rows. Used for
// abstract join-irreducible posets, lamp posets and trajectory quotients.
// ---------------------------------------------------------------------------

struct Poset {
  int n = 0;
  std::vector<uint64_t> below;  // below[x] = mask of {y : y <= x}
  std::vector<std::string> labels;

  bool le(int x, int y) const { return (below[y] >> x) & 1u; }
  bool lt(int x, int y) const { return x != y && le(x, y); }
  bool covers(int x, int y) const {
    if (!lt(x, y)) return false;
    uint64_t between = below[y] & ~below[x];
    between &= ~(uint64_t{1} << y);
    // x < z < y for z in between \ {x}? x itself is not in below[y]&~below[x].
    for (int z = 0; z < n; ++z)
      if (((between >> z) & 1u) && z != y && lt(x, z)) return false;
    return true;
  }
  std::vector<std::pair<int, int>> cover_pairs() const {
    std::vector<std::pair<int, int>> cp;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if (covers(x, y)) cp.emplace_back(x, y);
    return cp;
  }
  std::vector<int> maximal() const {
    std::vector<int> m;
    for (int x = 0; x < n; ++x) {
      bool mx = true;
      for (int y = 0; y < n && mx; ++y)
        if (lt(x, y)) mx = false;
      if (mx) m.push_back(x);
    }
    return m;
  }
  std::vector<int> upper_covers(int x) const {
    std::vector<int> u;
    for (int y = 0; y < n; ++y)
      if (covers(x, y)) u.push_back(y);
    return u;
  }
  std::vector<int> lower_covers(int x) const {
    std::vector<int> d;
    for (int y = 0; y < n; ++y)
      if (covers(y, x)) d.push_back(y);
    return d;
  }
};

// Build from strict relation pairs (a < b); reflexive-transitive closure taken.
inline Poset poset_from_relations(int n, const std::vector<std::pair<int, int>>& rel) {
  require(n >= 0 && n <= 64, ErrorCode::BoundTooLarge, "poset limited to 64 elements");
  Poset P;
  P.n = n;
  P.below.assign(n, 0);
  for (int x = 0; x < n; ++x) P.below[x] = uint64_t{1} << x;
  for (auto [a, b] : rel) P.below[b] |= uint64_t{1} << a;
  // Warshall closure.
  for (int k = 0; k < n; ++k)
    for (int y = 0; y < n; ++y)
      if ((P.below[y] >> k) & 1u) P.below[y] |= P.below[k];
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (x != y && P.le(x, y) && P.le(y, x))
        fail(ErrorCode::NotAntisymmetric, "relation closure is not antisymmetric");
  return P;
}

inline Poset poset_of_lattice_jir(const FiniteLattice& L) {
  auto irr = irreducibles(L);
  std::vector<std::pair<int, int>> rel;
  for (size_t i = 0; i < irr.jir.size(); ++i)
    for (size_t j = 0; j < irr.jir.size(); ++j)
      if (i != j && L.lt(irr.jir[i], irr.jir[j])) rel.emplace_back((int)i, (int)j);
  return poset_from_relations((int)irr.jir.size(), rel);
}

// ---------------------------------------------------------------------------
// Down-sets and the distributive lattice they form.
// ---------------------------------------------------------------------------

inline bool is_downset(const Poset& P, uint64_t mask) {
  for (int x = 0; x < P.n; ++x)
    if ((mask >> x) & 1u) {
      if ((P.below[x] & mask) != P.below[x]) return false;
    }
  return true;
}

inline std::vector<uint64_t> downsets(const Poset& P) {
  // Grow downsets element by element in a fixed linear extension.
  std::vector<int> order(P.n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return __builtin_popcountll(P.below[a]) < __builtin_popcountll(P.below[b]);
  });
  std::vector<uint64_t> sets = {0};
  for (int x : order) {
    size_t sz = sets.size();
    for (size_t i = 0; i < sz; ++i) {
      uint64_t d = sets[i];
      uint64_t need = P.below[x] & ~(uint64_t{1} << x);
      if ((d & need) == need) sets.push_back(d | (uint64_t{1} << x));
    }
  }
  std::sort(sets.begin(), sets.end(), [](uint64_t a, uint64_t b) {
    int pa = __builtin_popcountll(a), pb = __builtin_popcountll(b);
    return pa != pb ? pa < pb : a < b;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  return sets;
}

// Down-set count without materializing. Branch on an element x restricted to
// the still-undecided set: count(alive) = [x in the set, so all of below[x]
// is too] + [x out, so all of up(x) is too].
inline uint64_t downset_count(const Poset& P) {
  struct Rec {
    const Poset& P;
    uint64_t count(uint64_t alive) const {
      if (alive == 0) return 1;
      int x = 63 - __builtin_clzll(alive);
      uint64_t upx = 0;
      for (int y = 0; y < P.n; ++y)
        if (((alive >> y) & 1u) && P.le(x, y)) upx |= uint64_t{1} << y;
      return count(alive & ~P.below[x]) + count(alive & ~upx);
    }
  };
  Rec rec{P};
  uint64_t alive = P.n == 64 ? ~uint64_t{0} : (uint64_t{1} << P.n) - 1;
  return rec.count(alive);
}

// The lattice of down-sets ordered by inclusion; ids sorted by (size, mask).
struct DownsetLattice {
  FiniteLattice lattice;
  std::vector<uint64_t> mask_of;  // id -> down-set mask
};

inline DownsetLattice downset_lattice(const Poset& P) {
  DownsetLattice D;
  D.mask_of = downsets(P);
  int m = (int)D.mask_of.size();
  std::vector<CoverPair> cv;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      uint64_t a = D.mask_of[i], b = D.mask_of[j];
      if (a != b && (a & b) == a && __builtin_popcountll(b) == __builtin_popcountll(a) + 1)
        cv.emplace_back(i, j);
    }
  D.lattice = build_lattice(m, cv);
  return D;
}

// ---------------------------------------------------------------------------
// Poset isomorphism by backtracking with degree invariants.
// ---------------------------------------------------------------------------

inline bool poset_isomorphic(const Poset& P, const Poset& Q) {
  if (P.n != Q.n) return false;
  int n = P.n;
  auto sig = [](const Poset& R, int x) {
    int below = __builtin_popcountll(R.below[x]);
    int above = 0;
    for (int y = 0; y < R.n; ++y)
      if (R.le(x, y)) ++above;
    return std::pair<int, int>{below, above};
  };
  std::vector<std::pair<int, int>> sp(n), sq(n);
  for (int x = 0; x < n; ++x) sp[x] = sig(P, x), sq[x] = sig(Q, x);
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return false;
  }
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  // Match elements in order of rarity of signature for faster pruning.
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto rec = [&](auto&& self, int idx) -> bool {
    if (idx == n) return true;
    int x = order[idx];
    for (int y = 0; y < n; ++y) {
      if (used[y] || sq[y] != sp[x]) continue;
      bool ok = true;
      for (int j = 0; j < idx && ok; ++j) {
        int x2 = order[j], y2 = map[x2];
        if (P.le(x, x2) != Q.le(y, y2) || P.le(x2, x) != Q.le(y2, y)) ok = false;
      }
      if (!ok) continue;
      map[x] = y;
      used[y] = true;
      if (self(self, idx + 1)) return true;
      used[y] = false;
      map[x] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

}  // namespace lampkit
