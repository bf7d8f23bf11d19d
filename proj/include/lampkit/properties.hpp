#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "lampkit/error.hpp"
#include "lampkit/poset.hpp"

namespace lampkit {

// ---------------------------------------------------------------------------
// Necessary-condition checkers on abstract join-irreducible posets.
// ---------------------------------------------------------------------------

enum class PosetProperty {
  P2,
  BipartiteMaximal,
  Dioecious,
  TwoCover,
  ForbiddenMarriage,
  TwoPendantFourCrown,
};

inline const std::vector<PosetProperty>& all_poset_properties() {
  static const std::vector<PosetProperty> k = {
      PosetProperty::P2,       PosetProperty::BipartiteMaximal,
      PosetProperty::Dioecious, PosetProperty::TwoCover,
      PosetProperty::ForbiddenMarriage, PosetProperty::TwoPendantFourCrown};
  return k;
}

inline const char* property_name(PosetProperty p) {
  switch (p) {
    case PosetProperty::P2: return "p2";
    case PosetProperty::BipartiteMaximal: return "bipartite-maximal";
    case PosetProperty::Dioecious: return "dioecious";
    case PosetProperty::TwoCover: return "two-cover";
    case PosetProperty::ForbiddenMarriage: return "forbidden-marriage";
    case PosetProperty::TwoPendantFourCrown: return "two-pendant-four-crown";
  }
  return "?";
}

inline bool property_p2(const Poset& P) { return P.maximal().size() >= 2; }

// A split of the maximal elements into two nonempty sides such that maxima
// sharing a lower cover land on different sides. Exists iff there are at
// least two maxima and the conflict graph is bipartite.
inline bool property_bipartite_maximal(const Poset& P) {
  std::vector<int> mx = P.maximal();
  if (mx.size() < 2) return false;
  int k = (int)mx.size();
  std::vector<std::vector<int>> conflict(k);
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      bool share = false;
      for (int x = 0; x < P.n && !share; ++x)
        if (P.covers(x, mx[i]) && P.covers(x, mx[j])) share = true;
      if (share) {
        conflict[i].push_back(j);
        conflict[j].push_back(i);
      }
    }
  std::vector<int> color(k, -1);
  for (int s = 0; s < k; ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::vector<int> stack = {s};
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int y : conflict[x]) {
        if (color[y] < 0) {
          color[y] = 1 - color[x];
          stack.push_back(y);
        } else if (color[y] == color[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

inline bool property_dioecious(const Poset& P) {
  std::vector<int> mx = P.maximal();
  std::vector<bool> is_max(P.n, false);
  for (int m : mx) is_max[m] = true;
  for (int x = 0; x < P.n; ++x)
    for (int y = 0; y < P.n; ++y) {
      if (!is_max[y] || !P.covers(x, y)) continue;
      bool other = false;
      for (int z = 0; z < P.n && !other; ++z)
        if (z != y && P.covers(x, z)) other = true;
      if (!other) return false;
    }
  return true;
}

inline bool property_two_cover(const Poset& P) {
  for (int x = 0; x < P.n; ++x)
    if (P.upper_covers(x).size() > 2) return false;
  return true;
}

inline bool property_forbidden_marriage(const Poset& P) {
  std::vector<int> mx = P.maximal();
  for (int z : mx)
    for (int x = 0; x < P.n; ++x)
      for (int y = 0; y < P.n; ++y) {
        if (x == y || !P.covers(x, z) || !P.covers(y, z)) continue;
        for (int p = 0; p < P.n; ++p)
          if (P.covers(p, x) && P.covers(p, y)) return false;
      }
  return true;
}

// ---------------------------------------------------------------------------
// The two-pendant four-crown: a four-crown a,b,c,d over m_ab..m_da with two
// pendants z (under m_ab and m_cd) and w (under m_bc and m_da).
// ---------------------------------------------------------------------------

inline Poset two_pendant_four_crown_poset() {
  // 0..3 = a,b,c,d; 4..7 = m_ab, m_bc, m_cd, m_da; 8 = z, 9 = w
  std::vector<std::pair<int, int>> rel = {
      {4, 0}, {4, 1}, {5, 1}, {5, 2}, {6, 2}, {6, 3}, {7, 3}, {7, 0},
      {8, 4}, {8, 6}, {9, 5}, {9, 7}};
  Poset R = poset_from_relations(10, rel);
  R.labels = {"a", "b", "c", "d", "m_ab", "m_bc", "m_cd", "m_da", "z", "w"};
  return R;
}

// Injective order-embedding of R into P carrying covers to covers and the
// maxima of R to maxima of P.
inline bool embeds_two_pendant_four_crown(const Poset& P) {
  Poset R = two_pendant_four_crown_poset();
  if (P.n < R.n) return false;
  std::vector<bool> is_max(P.n, false);
  for (int m : P.maximal()) is_max[m] = true;
  std::vector<int> img(R.n, -1);
  std::vector<bool> used(P.n, false);
  auto rec = [&](auto&& self, int i) -> bool {
    if (i == R.n) return true;
    for (int cand = 0; cand < P.n; ++cand) {
      if (used[cand]) continue;
      if (i < 4 && !is_max[cand]) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) {
        if (R.le(j, i) != P.le(img[j], cand)) ok = false;
        if (R.le(i, j) != P.le(cand, img[j])) ok = false;
        if (ok && R.covers(j, i) && !P.covers(img[j], cand)) ok = false;
        if (ok && R.covers(i, j) && !P.covers(cand, img[j])) ok = false;
      }
      if (!ok) continue;
      img[i] = cand;
      used[cand] = true;
      if (self(self, i + 1)) return true;
      used[cand] = false;
      img[i] = -1;
    }
    return false;
  };
  return rec(rec, 0);
}

inline bool property_two_pendant_four_crown(const Poset& P) {
  return !embeds_two_pendant_four_crown(P);
}

inline bool check_property(const Poset& P, PosetProperty p) {
  switch (p) {
    case PosetProperty::P2: return property_p2(P);
    case PosetProperty::BipartiteMaximal: return property_bipartite_maximal(P);
    case PosetProperty::Dioecious: return property_dioecious(P);
    case PosetProperty::TwoCover: return property_two_cover(P);
    case PosetProperty::ForbiddenMarriage: return property_forbidden_marriage(P);
    case PosetProperty::TwoPendantFourCrown: return property_two_pendant_four_crown(P);
  }
  return false;
}

struct PropertyReport {
  bool p2 = false, bipartite_maximal = false, dioecious = false;
  bool two_cover = false, forbidden_marriage = false, two_pendant_four_crown = false;
  bool all() const {
    return p2 && bipartite_maximal && dioecious && two_cover && forbidden_marriage &&
           two_pendant_four_crown;
  }
};

inline PropertyReport check_all(const Poset& P) {
  PropertyReport r;
  r.p2 = property_p2(P);
  r.bipartite_maximal = property_bipartite_maximal(P);
  r.dioecious = property_dioecious(P);
  r.two_cover = property_two_cover(P);
  r.forbidden_marriage = property_forbidden_marriage(P);
  r.two_pendant_four_crown = property_two_pendant_four_crown(P);
  return r;
}

// ---------------------------------------------------------------------------
// Exhaustive poset enumeration (up to isomorphism) and the minimal-failure
// search over down-set lattice sizes.
// ---------------------------------------------------------------------------

namespace detail {

// Relations on a fixed topological labeling: x_i < x_j only for i < j.
inline uint64_t canonical_code(const Poset& P) {
  std::vector<int> perm(P.n);
  for (int i = 0; i < P.n; ++i) perm[i] = i;
  uint64_t best = ~uint64_t{0};
  do {
    uint64_t code = 0;
    int bit = 0;
    for (int i = 0; i < P.n; ++i)
      for (int j = 0; j < P.n; ++j) {
        if (i == j) continue;
        if (P.lt(perm[i], perm[j])) code |= uint64_t{1} << bit;
        ++bit;
      }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace detail

inline std::vector<Poset> enumerate_posets(int n) {
  require(n >= 1 && n <= 6, ErrorCode::BoundTooLarge,
          "poset enumeration supports up to 6 elements");
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::vector<Poset> out;
  std::set<uint64_t> seen;
  for (uint64_t mask = 0; mask < (uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::vector<bool>> lt(n, std::vector<bool>(n, false));
    for (size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1u) lt[slots[s].first][slots[s].second] = true;
    bool transitive = true;
    for (int i = 0; i < n && transitive; ++i)
      for (int j = 0; j < n && transitive; ++j)
        for (int k = 0; k < n; ++k)
          if (lt[i][j] && lt[j][k] && !lt[i][k]) {
            transitive = false;
            break;
          }
    if (!transitive) continue;
    std::vector<std::pair<int, int>> rel;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (lt[i][j]) rel.emplace_back(i, j);
    Poset P = poset_from_relations(n, rel);
    if (seen.insert(detail::canonical_code(P)).second) out.push_back(P);
  }
  return out;
}

struct MinFailing {
  bool found = false;
  uint64_t lattice_size = 0;  // |downset lattice| of the smallest witness
  Poset witness;
};

inline MinFailing min_failing(PosetProperty prop, int max_elems) {
  require(max_elems >= 1 && max_elems <= 6, ErrorCode::BoundTooLarge,
          "exhaustive search supports posets up to 6 elements");
  MinFailing best;
  for (int n = 1; n <= max_elems; ++n) {
    for (const Poset& P : enumerate_posets(n)) {
      if (check_property(P, prop)) continue;
      uint64_t size = downset_count(P);
      if (!best.found || size < best.lattice_size) {
        best.found = true;
        best.lattice_size = size;
        best.witness = P;
      }
    }
  }
  return best;
}

}  // namespace lampkit
