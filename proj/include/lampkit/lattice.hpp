#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "lampkit/error.hpp"

namespace lampkit {

using Elem = int;
using CoverPair = std::pair<Elem, Elem>;  // (lower, upper)

// ---------------------------------------------------------------------------
// Bit rows: one dynamic bitset per element, n up to a few thousand.
// ---------------------------------------------------------------------------

class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), words_((cols + 63) / 64),
        data_(static_cast<size_t>(rows) * words_, 0) {}

  bool get(int i, int j) const {
    return (data_[static_cast<size_t>(i) * words_ + j / 64] >> (j % 64)) & 1u;
  }
  void set(int i, int j) {
    data_[static_cast<size_t>(i) * words_ + j / 64] |= (uint64_t{1} << (j % 64));
  }
  // row(i) |= row(j)
  void or_row(int i, int j) {
    size_t a = static_cast<size_t>(i) * words_, b = static_cast<size_t>(j) * words_;
    for (int w = 0; w < words_; ++w) data_[a + w] |= data_[b + w];
  }
  int rows() const { return rows_; }

  // Number of set bits in the intersection of rows i and j.
  int and_count(int i, int j) const {
    size_t a = static_cast<size_t>(i) * words_, b = static_cast<size_t>(j) * words_;
    int c = 0;
    for (int w = 0; w < words_; ++w) c += __builtin_popcountll(data_[a + w] & data_[b + w]);
    return c;
  }

  // Highest/lowest set bit of row(i) & row(j); -1 when empty.
  int and_highest(int i, int j) const {
    size_t a = static_cast<size_t>(i) * words_, b = static_cast<size_t>(j) * words_;
    for (int w = words_ - 1; w >= 0; --w) {
      uint64_t v = data_[a + w] & data_[b + w];
      if (v) return w * 64 + 63 - __builtin_clzll(v);
    }
    return -1;
  }
  int and_lowest(int i, int j) const {
    size_t a = static_cast<size_t>(i) * words_, b = static_cast<size_t>(j) * words_;
    for (int w = 0; w < words_; ++w) {
      uint64_t v = data_[a + w] & data_[b + w];
      if (v) return w * 64 + __builtin_ctzll(v);
    }
    return -1;
  }
  // row(i) & row(j) subset of row(k)
  bool and_implies(int i, int j, int k) const {
    size_t a = static_cast<size_t>(i) * words_, b = static_cast<size_t>(j) * words_;
    size_t c = static_cast<size_t>(k) * words_;
    for (int w = 0; w < words_; ++w)
      if ((data_[a + w] & data_[b + w]) & ~data_[c + w]) return false;
    return true;
  }

 private:
  int rows_ = 0, cols_ = 0, words_ = 0;
  std::vector<uint64_t> data_;
};

// ---------------------------------------------------------------------------
// FiniteLattice: covers, order, meet/join tables. Immutable once built.
// ---------------------------------------------------------------------------

struct FiniteLattice {
  int n = 0;
  std::vector<CoverPair> covers;            // strict cover relation, sorted
  std::vector<std::vector<Elem>> up;        // upper covers per element
  std::vector<std::vector<Elem>> down;      // lower covers per element
  BitMatrix leq;                            // leq.get(x,y) <=> x <= y
  std::vector<Elem> meet_table;             // n*n, row-major
  std::vector<Elem> join_table;
  Elem bottom = -1;
  Elem top = -1;
  std::vector<std::string> labels;          // optional names

  Elem meet(Elem x, Elem y) const { return meet_table[static_cast<size_t>(x) * n + y]; }
  Elem join(Elem x, Elem y) const { return join_table[static_cast<size_t>(x) * n + y]; }
  bool le(Elem x, Elem y) const { return leq.get(x, y); }
  bool lt(Elem x, Elem y) const { return x != y && leq.get(x, y); }
  bool covers_pair(Elem x, Elem y) const {
    for (Elem u : up[x]) if (u == y) return true;
    return false;
  }
  bool incomparable(Elem x, Elem y) const { return !le(x, y) && !le(y, x); }
};

struct IrreducibleSets {
  std::vector<Elem> jir;     // nonzero join-irreducible: exactly one lower cover
  std::vector<Elem> mir;     // non-top meet-irreducible: exactly one upper cover
  std::vector<Elem> doubly;  // jir and mir
};

inline IrreducibleSets irreducibles(const FiniteLattice& L) {
  IrreducibleSets s;
  for (Elem x = 0; x < L.n; ++x) {
    bool j = L.down[x].size() == 1;
    bool m = L.up[x].size() == 1;
    if (j) s.jir.push_back(x);
    if (m) s.mir.push_back(x);
    if (j && m) s.doubly.push_back(x);
  }
  return s;
}

// ---------------------------------------------------------------------------
// build_lattice: validate a cover set and derive order plus meet/join tables.
// Transitively implied pairs in the input are dropped.
// ---------------------------------------------------------------------------

namespace detail {

inline std::vector<Elem> topo_order(int n, const std::vector<std::vector<Elem>>& up) {
  std::vector<int> indeg(n, 0);
  for (int x = 0; x < n; ++x)
    for (Elem y : up[x]) (void)y, ++indeg[y];
  std::vector<Elem> stack, order;
  for (int x = 0; x < n; ++x)
    if (indeg[x] == 0) stack.push_back(x);
  while (!stack.empty()) {
    Elem x = stack.back();
    stack.pop_back();
    order.push_back(x);
    for (Elem y : up[x])
      if (--indeg[y] == 0) stack.push_back(y);
  }
  require(static_cast<int>(order.size()) == n, ErrorCode::CycleDetected,
          "cover relation contains a cycle");
  return order;
}

}  // namespace detail

inline FiniteLattice build_lattice(int n, std::vector<CoverPair> raw_covers) {
  require(n >= 1, ErrorCode::NotALattice, "empty element set");
  FiniteLattice L;
  L.n = n;
  std::sort(raw_covers.begin(), raw_covers.end());
  raw_covers.erase(std::unique(raw_covers.begin(), raw_covers.end()), raw_covers.end());

  std::vector<std::vector<Elem>> up(n);
  for (auto [a, b] : raw_covers) {
    require(a >= 0 && a < n && b >= 0 && b < n && a != b, ErrorCode::NotALattice,
            "cover pair out of range");
    up[a].push_back(b);
  }
  std::vector<Elem> order = detail::topo_order(n, up);

  // Reachability: leq(x,y) <=> x <= y, via reverse topological sweep.
  L.leq = BitMatrix(n, n);
  for (int i = n - 1; i >= 0; --i) {
    Elem x = order[i];
    L.leq.set(x, x);
    for (Elem y : up[x]) L.leq.or_row(x, y);
  }

  // Keep only true covers: (a,b) with nothing strictly between.
  for (auto [a, b] : raw_covers) {
    bool strict = true;
    for (Elem z : up[a]) {
      if (z != b && L.leq.get(z, b)) { strict = false; break; }
    }
    if (strict) L.covers.emplace_back(a, b);
  }
  std::sort(L.covers.begin(), L.covers.end());
  L.up.assign(n, {});
  L.down.assign(n, {});
  for (auto [a, b] : L.covers) {
    L.up[a].push_back(b);
    L.down[b].push_back(a);
  }

  // Unique bottom and top.
  for (Elem x = 0; x < n; ++x) {
    if (L.down[x].empty()) {
      require(L.bottom < 0, ErrorCode::NoBounds, "two minimal elements");
      L.bottom = x;
    }
    if (L.up[x].empty()) {
      require(L.top < 0, ErrorCode::NoBounds, "two maximal elements");
      L.top = x;
    }
  }
  require(L.bottom >= 0 && L.top >= 0, ErrorCode::NoBounds, "no bounds");

  // Meet and join tables over topologically position-indexed reachability
  // rows: the candidate bound is the extreme bit of the intersection, and it
  // must dominate the whole intersection.
  BitMatrix down_pos(n, n), up_pos(n, n);
  for (int i = 0; i < n; ++i) {
    Elem x = order[i];
    down_pos.set(x, i);
    for (Elem w : L.down[x]) down_pos.or_row(x, w);
  }
  for (int i = n - 1; i >= 0; --i) {
    Elem x = order[i];
    up_pos.set(x, i);
    for (Elem y : L.up[x]) up_pos.or_row(x, y);
  }
  L.meet_table.assign(static_cast<size_t>(n) * n, -1);
  L.join_table.assign(static_cast<size_t>(n) * n, -1);
  for (Elem x = 0; x < n; ++x) {
    for (Elem y = x; y < n; ++y) {
      Elem m = order[down_pos.and_highest(x, y)];
      require(down_pos.and_implies(x, y, m), ErrorCode::NotALattice,
              "pair without a meet");
      Elem j = order[up_pos.and_lowest(x, y)];
      require(up_pos.and_implies(x, y, j), ErrorCode::NotALattice,
              "pair without a join");
      L.meet_table[static_cast<size_t>(x) * n + y] = m;
      L.meet_table[static_cast<size_t>(y) * n + x] = m;
      L.join_table[static_cast<size_t>(x) * n + y] = j;
      L.join_table[static_cast<size_t>(y) * n + x] = j;
    }
  }
  return L;
}

inline FiniteLattice build_lattice(const std::vector<CoverPair>& raw_covers) {
  int n = 0;
  for (auto [a, b] : raw_covers) n = std::max({n, a + 1, b + 1});
  return build_lattice(n, raw_covers);
}

// Relabel: new_of_old[x] gives the new id of old element x.
inline FiniteLattice relabel(const FiniteLattice& L, const std::vector<Elem>& new_of_old) {
  std::vector<CoverPair> cv;
  cv.reserve(L.covers.size());
  for (auto [a, b] : L.covers) cv.emplace_back(new_of_old[a], new_of_old[b]);
  FiniteLattice M = build_lattice(L.n, cv);
  if (!L.labels.empty()) {
    M.labels.assign(L.n, {});
    for (Elem x = 0; x < L.n; ++x) M.labels[new_of_old[x]] = L.labels[x];
  }
  return M;
}

// ---------------------------------------------------------------------------
// Structural verdicts; the layout-dependent ones live in layout.hpp.
// ---------------------------------------------------------------------------

// Upper semimodularity in cover form: a^b -< a implies b -< avb.
inline bool is_semimodular(const FiniteLattice& L) {
  for (Elem a = 0; a < L.n; ++a)
    for (Elem b = 0; b < L.n; ++b) {
      if (a == b) continue;
      if (L.covers_pair(L.meet(a, b), a) && !L.covers_pair(b, L.join(a, b))) return false;
    }
  return true;
}

// Jir L is a union of two chains <=> no 3-element antichain among jir.
inline bool is_slim(const FiniteLattice& L) {
  auto irr = irreducibles(L);
  const auto& j = irr.jir;
  for (size_t a = 0; a < j.size(); ++a)
    for (size_t b = a + 1; b < j.size(); ++b) {
      if (!L.incomparable(j[a], j[b])) continue;
      for (size_t c = b + 1; c < j.size(); ++c)
        if (L.incomparable(j[a], j[c]) && L.incomparable(j[b], j[c])) return false;
    }
  return true;
}

inline bool has_at_most_two_upper_covers(const FiniteLattice& L) {
  for (Elem x = 0; x < L.n; ++x)
    if (x != L.top && (L.up[x].empty() || L.up[x].size() > 2)) return false;
  return true;
}

// Exactly two doubly irreducible, complementary elements; |L| >= 4.
inline bool is_rectangular(const FiniteLattice& L) {
  if (L.n < 4) return false;
  auto irr = irreducibles(L);
  if (irr.doubly.size() != 2) return false;
  Elem c = irr.doubly[0], d = irr.doubly[1];
  return L.join(c, d) == L.top && L.meet(c, d) == L.bottom;
}

// The two doubly irreducible elements of a rectangular lattice, unordered.
inline std::pair<Elem, Elem> corner_pair(const FiniteLattice& L) {
  auto irr = irreducibles(L);
  require(irr.doubly.size() == 2, ErrorCode::NotRectangular,
          "need exactly two doubly irreducible elements");
  require(is_rectangular(L), ErrorCode::NotRectangular, "corners not complementary");
  return {irr.doubly[0], irr.doubly[1]};
}

}  // namespace lampkit
