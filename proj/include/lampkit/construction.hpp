#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "lampkit/error.hpp"
#include "lampkit/lamps.hpp"
#include "lampkit/lattice.hpp"
#include "lampkit/layout.hpp"

namespace lampkit {

// ---------------------------------------------------------------------------
// Recipes: a grid and a sequence of multifork steps. Cells are addressed by
// the (l_index, r_index) of their bottom element in the lattice of the stage
// the step applies to, so addresses are stage dependent.
// ---------------------------------------------------------------------------

struct CellAddress {
  int l = 0, r = 0;
  friend bool operator==(const CellAddress& a, const CellAddress& b) {
    return a.l == b.l && a.r == b.r;
  }
};

struct RecipeStep {
  CellAddress cell;
  int rank = 1;
};

struct Recipe {
  int grid_a = 2, grid_b = 2;
  std::vector<RecipeStep> steps;
  friend bool operator==(const Recipe& x, const Recipe& y) {
    if (x.grid_a != y.grid_a || x.grid_b != y.grid_b) return false;
    if (x.steps.size() != y.steps.size()) return false;
    for (size_t i = 0; i < x.steps.size(); ++i)
      if (!(x.steps[i].cell == y.steps[i].cell) || x.steps[i].rank != y.steps[i].rank)
        return false;
    return true;
  }
};

struct FourCell {
  Elem bottom = -1, left = -1, right = -1, top = -1;
};

struct BuildResult {
  FiniteLattice lattice;
  Layout layout;
};

// ---------------------------------------------------------------------------
// Grids
// ---------------------------------------------------------------------------

inline BuildResult grid(int a, int b) {
  require(a >= 2 && b >= 2, ErrorCode::SingletonChain, "grid needs nonsingleton chains");
  auto id = [b](int i, int j) { return i * b + j; };
  std::vector<CoverPair> cv;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) {
      if (i + 1 < a) cv.emplace_back(id(i, j), id(i + 1, j));
      if (j + 1 < b) cv.emplace_back(id(i, j), id(i, j + 1));
    }
  FiniteLattice L = build_lattice(a * b, cv);
  Layout lay = layout(L);
  std::vector<Elem> perm = canonical_permutation(L, lay);
  BuildResult r;
  r.lattice = relabel(L, perm);
  r.layout = layout(r.lattice);
  return r;
}

// ---------------------------------------------------------------------------
// 4-cells
// ---------------------------------------------------------------------------

inline int interval_size(const FiniteLattice& L, Elem p, Elem q) {
  int c = 0;
  for (Elem z = 0; z < L.n; ++z)
    if (L.le(p, z) && L.le(z, q)) ++c;
  return c;
}

inline std::vector<FourCell> four_cells(const FiniteLattice& L, const Layout& lay) {
  std::vector<FourCell> cells;
  for (Elem p = 0; p < L.n; ++p) {
    if (L.up[p].size() != 2) continue;
    Elem x = L.up[p][0], y = L.up[p][1];
    Elem q = L.join(x, y);
    if (!L.covers_pair(x, q) || !L.covers_pair(y, q)) continue;
    if (interval_size(L, p, q) != 4) continue;
    FourCell c;
    c.bottom = p;
    c.top = q;
    if (lay.u(x) < lay.u(y)) { c.left = x; c.right = y; }
    else { c.left = y; c.right = x; }
    cells.push_back(c);
  }
  std::sort(cells.begin(), cells.end(), [&](const FourCell& a, const FourCell& b) {
    if (lay.l_index[a.bottom] != lay.l_index[b.bottom])
      return lay.l_index[a.bottom] < lay.l_index[b.bottom];
    return lay.r_index[a.bottom] < lay.r_index[b.bottom];
  });
  return cells;
}

inline bool ideal_is_distributive(const FiniteLattice& L, Elem top) {
  std::vector<Elem> ideal;
  for (Elem z = 0; z < L.n; ++z)
    if (L.le(z, top)) ideal.push_back(z);
  for (Elem x : ideal)
    for (Elem y : ideal)
      for (Elem z : ideal)
        if (L.meet(x, L.join(y, z)) != L.join(L.meet(x, y), L.meet(x, z))) return false;
  return true;
}

inline bool cell_is_distributive(const FiniteLattice& L, const Layout& lay,
                                 const FourCell& c) {
  // Geometric form: no precipitous edge inside the ideal of the top.
  bool geometric = true;
  for (auto [p, q] : L.covers) {
    if (!L.le(q, c.top)) continue;
    if (classify_edge(lay, L, p, q) == Slope::Precipitous) { geometric = false; break; }
  }
  bool direct = ideal_is_distributive(L, c.top);
  require(geometric == direct, ErrorCode::InternalError,
          "slope test and distributivity test disagree on a 4-cell");
  return geometric;
}

inline std::vector<FourCell> distributive_cells(const FiniteLattice& L, const Layout& lay) {
  std::vector<FourCell> out;
  for (const FourCell& c : four_cells(L, lay))
    if (cell_is_distributive(L, lay, c)) out.push_back(c);
  return out;
}

// ---------------------------------------------------------------------------
// Multifork extension
// ---------------------------------------------------------------------------

namespace detail {

// The 4-cell having [x, y] as one of its upper sides, if any; returns the
// opposite (lower, parallel) side. Unique for edges of normal slope.
inline std::optional<CoverPair> opposite_below(const FiniteLattice& L, Elem x, Elem y) {
  std::optional<CoverPair> found;
  for (Elem w : L.down[x])
    for (Elem z : L.up[w]) {
      if (z == x || !L.covers_pair(z, y)) continue;
      if (interval_size(L, w, y) != 4) continue;
      require(!found.has_value(), ErrorCode::InternalError,
              "normal-slope edge with two cells below");
      found = CoverPair{w, z};
    }
  return found;
}

// Walk the trajectory of a lower cell side toward the bottom boundary:
// each step crosses the 4-cell below, keeping the slope family.
inline std::vector<CoverPair> propagation_edges(const FiniteLattice& L, const Layout& lay,
                                                Elem bot, Elem side) {
  std::vector<CoverPair> edges = {{bot, side}};
  Slope family = classify_edge(lay, L, bot, side);
  require(family != Slope::Precipitous, ErrorCode::InternalError,
          "cell side of a distributive cell cannot be precipitous");
  int guard = 0;
  while (true) {
    require(++guard <= L.n, ErrorCode::InternalError, "propagation did not terminate");
    auto [p, q] = edges.back();
    auto next = opposite_below(L, p, q);
    if (!next) break;
    require(classify_edge(lay, L, next->first, next->second) == family,
            ErrorCode::InternalError, "propagation changed slope family");
    edges.push_back(*next);
  }
  auto [bp, tp] = edges.back();
  const auto& chain = family == Slope::NormalLeft ? lay.lower_left : lay.lower_right;
  bool bot_on = std::find(chain.begin(), chain.end(), bp) != chain.end();
  bool top_on = std::find(chain.begin(), chain.end(), tp) != chain.end();
  require(bot_on && top_on, ErrorCode::InternalError,
          "propagation stopped before the bottom boundary");
  return edges;
}

}  // namespace detail

struct MultiforkResult {
  FiniteLattice lattice;
  Layout layout;
  std::vector<Elem> embed;  // old element id -> new element id
  Lamp new_lamp;            // in new ids
};

// Number of elements the extension would add, without building it.
inline int multifork_growth(const FiniteLattice& L, const Layout& lay, const FourCell& cell,
                            int rank) {
  auto left = detail::propagation_edges(L, lay, cell.bottom, cell.left);
  auto right = detail::propagation_edges(L, lay, cell.bottom, cell.right);
  return rank * (rank + 1) / 2 + rank * (int)left.size() + rank * (int)right.size();
}

inline MultiforkResult multifork(const FiniteLattice& L, const Layout& lay,
                                 const FourCell& cell, int rank) {
  require(rank >= 1, ErrorCode::RankNonPositive, "rank must be positive");
  require(cell_is_distributive(L, lay, cell), ErrorCode::CellNotDistributive,
          "multifork requires a distributive 4-cell");

  auto left_edges = detail::propagation_edges(L, lay, cell.bottom, cell.left);
  auto right_edges = detail::propagation_edges(L, lay, cell.bottom, cell.right);

  int n = L.n;
  std::set<CoverPair> cv(L.covers.begin(), L.covers.end());
  const int N = rank;

  // Interior fan: t(i,j) for 1 <= i <= j <= N stands for the meet of the new
  // tube feet m_i..m_j; t(i,i) are the feet themselves, t(1,N) is the foot of
  // the new lamp.
  std::vector<std::vector<Elem>> t(N + 1, std::vector<Elem>(N + 1, -1));
  for (int i = 1; i <= N; ++i)
    for (int j = i; j <= N; ++j) t[i][j] = n++;
  for (int i = 1; i <= N; ++i) cv.insert({t[i][i], cell.top});
  for (int i = 1; i <= N; ++i)
    for (int j = i + 1; j <= N; ++j) {
      cv.insert({t[i][j], t[i][j - 1]});
      cv.insert({t[i][j], t[i + 1][j]});
    }

  // Subdivide each propagation edge by a chain of N new points and connect
  // consecutive chains; the chain at the cell feeds the fan.
  auto subdivide = [&](const std::vector<CoverPair>& edges, bool is_left) {
    std::vector<std::vector<Elem>> chains(edges.size());
    for (size_t s = 0; s < edges.size(); ++s) {
      auto [lo, hi] = edges[s];
      cv.erase({lo, hi});
      std::vector<Elem>& ch = chains[s];
      ch.resize(N + 2);
      ch[0] = hi;        // position j=0 stands for the top end
      ch[N + 1] = lo;    // below position j=N sits the bottom end
      for (int j = 1; j <= N; ++j) ch[j] = n++;
      for (int j = 0; j <= N; ++j) cv.insert({ch[j + 1], ch[j]});
    }
    for (int j = 1; j <= N; ++j) {
      Elem target = is_left ? t[1][j] : t[N - j + 1][N];
      cv.insert({chains[0][j], target});
    }
    for (size_t s = 1; s < edges.size(); ++s)
      for (int j = 1; j <= N; ++j) cv.insert({chains[s][j], chains[s - 1][j]});
  };
  subdivide(left_edges, true);
  subdivide(right_edges, false);

  FiniteLattice raw = build_lattice(n, std::vector<CoverPair>(cv.begin(), cv.end()));
  Layout raw_lay = layout(raw);
  std::vector<Elem> perm = canonical_permutation(raw, raw_lay);

  MultiforkResult R;
  R.lattice = relabel(raw, perm);
  R.layout = layout(R.lattice);
  R.embed.resize(L.n);
  for (Elem x = 0; x < L.n; ++x) R.embed[x] = perm[x];

  // --- postconditions ---------------------------------------------------
  // (a) the old lattice embeds as a sublattice
  for (Elem x = 0; x < L.n; ++x)
    for (Elem y = 0; y < L.n; ++y) {
      require(R.embed[L.meet(x, y)] == R.lattice.meet(R.embed[x], R.embed[y]),
              ErrorCode::InternalError, "extension broke a meet");
      require(R.embed[L.join(x, y)] == R.lattice.join(R.embed[x], R.embed[y]),
              ErrorCode::InternalError, "extension broke a join");
    }
  // (b) full validation
  require(validate_slim_rectangular(R.lattice, R.layout).all_ok(), ErrorCode::InternalError,
          "extension is not a valid slim rectangular lattice");
  // (c) exactly one new lamp; it is internal, has `rank` tubes and peaks at
  // the replaced cell's top
  {
    std::vector<Lamp> old_lamps = lamps(L, lay);
    std::vector<Lamp> new_lamps = lamps(R.lattice, R.layout);
    std::set<std::pair<Elem, Elem>> old_keys;
    for (const Lamp& I : old_lamps) old_keys.insert({R.embed[I.foot], R.embed[I.peak]});
    std::vector<const Lamp*> fresh;
    for (const Lamp& I : new_lamps)
      if (!old_keys.count({I.foot, I.peak})) fresh.push_back(&I);
    require(fresh.size() == 1, ErrorCode::InternalError,
            "extension must create exactly one lamp");
    const Lamp& K = *fresh[0];
    require(K.internal(), ErrorCode::InternalError, "new lamp must be internal");
    require((int)K.tubes.size() == rank, ErrorCode::InternalError,
            "new lamp must have `rank` tubes");
    require(K.peak == R.embed[cell.top], ErrorCode::InternalError,
            "new lamp must peak at the replaced cell top");
    // (d) its circumscribed rectangle is the region of the replaced cell
    require(circ_bottom(R.lattice, R.layout, K) == R.embed[cell.bottom],
            ErrorCode::InternalError,
            "circumscribed rectangle must sit on the replaced cell");
    // (e) illumination of the surviving lamps is unchanged on old elements
    for (const Lamp& I : old_lamps) {
      LampShape so = shape(lay, I);
      const Lamp* J = nullptr;
      for (const Lamp& c : new_lamps)
        if (c.foot == R.embed[I.foot] && c.peak == R.embed[I.peak]) J = &c;
      require(J != nullptr, ErrorCode::InternalError, "a lamp disappeared");
      LampShape sn = shape(R.layout, *J);
      for (Elem x = 0; x < L.n; ++x) {
        bool before = lit_contains(so, lay.point(x), Fill::Closed);
        bool after = lit_contains(sn, R.layout.point(R.embed[x]), Fill::Closed);
        require(before == after, ErrorCode::InternalError,
                "extension changed an illuminated set");
      }
    }
    R.new_lamp = K;
  }
  return R;
}

// ---------------------------------------------------------------------------
// Recipe execution
// ---------------------------------------------------------------------------

inline std::optional<FourCell> find_cell(const FiniteLattice& L, const Layout& lay,
                                         const CellAddress& addr) {
  for (const FourCell& c : four_cells(L, lay))
    if (lay.l_index[c.bottom] == addr.l && lay.r_index[c.bottom] == addr.r) return c;
  return std::nullopt;
}

inline std::vector<BuildResult> replay(const Recipe& r) {
  std::vector<BuildResult> stages;
  stages.push_back(grid(r.grid_a, r.grid_b));
  for (const RecipeStep& st : r.steps) {
    const BuildResult& cur = stages.back();
    auto cell = find_cell(cur.lattice, cur.layout, st.cell);
    require(cell.has_value(), ErrorCode::BadCellAddress,
            "no 4-cell with bottom at (" + std::to_string(st.cell.l) + "," +
                std::to_string(st.cell.r) + ")");
    MultiforkResult m = multifork(cur.lattice, cur.layout, *cell, st.rank);
    stages.push_back(BuildResult{std::move(m.lattice), std::move(m.layout)});
  }
  return stages;
}

inline BuildResult build(const Recipe& r) {
  std::vector<BuildResult> stages = replay(r);
  return std::move(stages.back());
}

// ---------------------------------------------------------------------------
// Enumeration and random recipes
// ---------------------------------------------------------------------------

struct EnumBounds {
  int max_size = 40;
  int max_rank = 3;
  int max_steps = 3;
};

using EnumYield = std::function<void(const Recipe&, const BuildResult&)>;

namespace detail {

inline void enumerate_from(const Recipe& recipe, const BuildResult& cur,
                           const EnumBounds& b, const EnumYield& yield) {
  yield(recipe, cur);
  if ((int)recipe.steps.size() >= b.max_steps) return;
  for (const FourCell& cell : distributive_cells(cur.lattice, cur.layout)) {
    for (int rank = 1; rank <= b.max_rank; ++rank) {
      int grown = cur.lattice.n + multifork_growth(cur.lattice, cur.layout, cell, rank);
      if (grown > b.max_size) break;
      Recipe next = recipe;
      next.steps.push_back(RecipeStep{
          CellAddress{cur.layout.l_index[cell.bottom], cur.layout.r_index[cell.bottom]},
          rank});
      MultiforkResult m = multifork(cur.lattice, cur.layout, cell, rank);
      BuildResult br{std::move(m.lattice), std::move(m.layout)};
      enumerate_from(next, br, b, yield);
    }
  }
}

}  // namespace detail

// Canonical-order stream: grids by (a, b), then depth-first over fork steps
// in cell-address order and increasing rank.
inline void enumerate_recipes(const EnumBounds& b, const EnumYield& yield) {
  require(b.max_size >= 4 && b.max_rank >= 1 && b.max_steps >= 0, ErrorCode::BoundTooLarge,
          "bounds must be positive");
  for (int a = 2; a * 2 <= b.max_size; ++a)
    for (int bb = 2; a * bb <= b.max_size; ++bb) {
      Recipe r;
      r.grid_a = a;
      r.grid_b = bb;
      detail::enumerate_from(r, grid(a, bb), b, yield);
    }
}

inline Recipe random_recipe(uint64_t seed, const EnumBounds& b) {
  std::mt19937_64 rng(seed);
  auto pick = [&](int lo, int hi) {  // inclusive
    return lo + (int)(rng() % uint64_t(hi - lo + 1));
  };
  Recipe r;
  r.grid_a = pick(2, std::max(2, b.max_size / 2));
  r.grid_b = pick(2, std::max(2, b.max_size / r.grid_a));
  BuildResult cur = grid(r.grid_a, r.grid_b);
  int steps = pick(0, b.max_steps);
  for (int s = 0; s < steps; ++s) {
    std::vector<std::pair<FourCell, int>> options;
    for (const FourCell& cell : distributive_cells(cur.lattice, cur.layout))
      for (int rank = 1; rank <= b.max_rank; ++rank)
        if (cur.lattice.n + multifork_growth(cur.lattice, cur.layout, cell, rank) <=
            b.max_size)
          options.emplace_back(cell, rank);
    if (options.empty()) break;
    auto [cell, rank] = options[pick(0, (int)options.size() - 1)];
    r.steps.push_back(RecipeStep{
        CellAddress{cur.layout.l_index[cell.bottom], cur.layout.r_index[cell.bottom]},
        rank});
    MultiforkResult m = multifork(cur.lattice, cur.layout, cell, rank);
    cur = BuildResult{std::move(m.lattice), std::move(m.layout)};
  }
  return r;
}

}  // namespace lampkit
