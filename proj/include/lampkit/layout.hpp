#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "lampkit/error.hpp"
#include "lampkit/geometry.hpp"
#include "lampkit/lattice.hpp"

namespace lampkit {

// ---------------------------------------------------------------------------
// Diagram coordinates. Every element x of a slim rectangular lattice is the
// join of one element from each bottom boundary chain; the chain positions
// (l_index, r_index) of those two elements embed the lattice into a grid.
// Drawing coordinates are u = r - l (horizontal) and v = r + l (vertical), so
// edges that advance only one index run at 45 degrees ("normal slopes") and
// edges advancing both are steeper ("precipitous"). All geometric work is
// done directly in the (l, r) plane, where normal-slope lines are axis
// parallel and the full rectangle is the box [0,A-1] x [0,B-1].
// ---------------------------------------------------------------------------

enum class Slope { NormalLeft, NormalRight, Precipitous };

inline const char* slope_name(Slope s) {
  switch (s) {
    case Slope::NormalLeft: return "normal-left";
    case Slope::NormalRight: return "normal-right";
    case Slope::Precipitous: return "precipitous";
  }
  return "?";
}

struct Layout {
  std::vector<int> l_index;               // position of the largest lower-left chain element below x
  std::vector<int> r_index;
  Elem corner_left = -1;                  // doubly irreducible on the left
  Elem corner_right = -1;
  std::vector<Elem> lower_left;           // bottom .. corner_left
  std::vector<Elem> lower_right;
  std::vector<Elem> upper_left;           // corner_left .. top
  std::vector<Elem> upper_right;
  std::vector<bool> on_left_chain;        // lower_left or upper_left
  std::vector<bool> on_right_chain;
  bool beta_ok = false;                   // precipitous iff interior meet-irreducible foot

  int A() const { return (int)lower_left.size(); }   // l ranges over 0..A-1
  int B() const { return (int)lower_right.size(); }

  int u(Elem x) const { return r_index[x] - l_index[x]; }
  int v(Elem x) const { return r_index[x] + l_index[x]; }
  Pt point(Elem x) const { return pt(l_index[x], r_index[x]); }
  bool on_boundary(Elem x) const { return on_left_chain[x] || on_right_chain[x]; }
};

namespace detail {

inline std::optional<std::vector<Elem>> chain_of_ideal(const FiniteLattice& L, Elem top) {
  std::vector<Elem> c;
  for (Elem x = 0; x < L.n; ++x)
    if (L.le(x, top)) c.push_back(x);
  std::sort(c.begin(), c.end(), [&](Elem a, Elem b) { return L.lt(a, b); });
  for (size_t i = 0; i + 1 < c.size(); ++i)
    if (!L.lt(c[i], c[i + 1])) return std::nullopt;
  return c;
}

inline std::optional<std::vector<Elem>> chain_of_filter(const FiniteLattice& L, Elem bot) {
  std::vector<Elem> c;
  for (Elem x = 0; x < L.n; ++x)
    if (L.le(bot, x)) c.push_back(x);
  std::sort(c.begin(), c.end(), [&](Elem a, Elem b) { return L.lt(a, b); });
  for (size_t i = 0; i + 1 < c.size(); ++i)
    if (!L.lt(c[i], c[i + 1])) return std::nullopt;
  return c;
}

}  // namespace detail

struct LayoutAttempt {
  std::optional<Layout> layout;
  std::string reason;  // set when layout is absent or beta fails
};

// The left corner is the doubly irreducible element with the smaller
// principal ideal (ties by element id), so orientation is intrinsic.
inline LayoutAttempt try_layout(const FiniteLattice& L) {
  LayoutAttempt out;
  auto irr = irreducibles(L);
  if (irr.doubly.size() != 2) {
    out.reason = "expected exactly two doubly irreducible elements, found " +
                 std::to_string(irr.doubly.size());
    return out;
  }
  Elem c0 = irr.doubly[0], c1 = irr.doubly[1];
  if (L.join(c0, c1) != L.top || L.meet(c0, c1) != L.bottom) {
    out.reason = "doubly irreducible elements are not complementary";
    return out;
  }
  auto ideal_size = [&](Elem c) {
    int s = 0;
    for (Elem x = 0; x < L.n; ++x)
      if (L.le(x, c)) ++s;
    return s;
  };
  Elem cl = c0, cr = c1;
  if (ideal_size(c1) < ideal_size(c0)) std::swap(cl, cr);

  Layout lay;
  lay.corner_left = cl;
  lay.corner_right = cr;
  auto ll = detail::chain_of_ideal(L, cl);
  auto lr = detail::chain_of_ideal(L, cr);
  auto ul = detail::chain_of_filter(L, cl);
  auto ur = detail::chain_of_filter(L, cr);
  if (!ll || !lr || !ul || !ur) {
    out.reason = "a boundary ideal or filter is not a chain";
    return out;
  }
  lay.lower_left = *ll;
  lay.lower_right = *lr;
  lay.upper_left = *ul;
  lay.upper_right = *ur;

  lay.l_index.assign(L.n, 0);
  lay.r_index.assign(L.n, 0);
  for (Elem x = 0; x < L.n; ++x) {
    for (int i = 0; i < (int)lay.lower_left.size(); ++i)
      if (L.le(lay.lower_left[i], x)) lay.l_index[x] = i;
    for (int i = 0; i < (int)lay.lower_right.size(); ++i)
      if (L.le(lay.lower_right[i], x)) lay.r_index[x] = i;
  }

  // Every element must be the join of its two chain shadows, and
  // (l, r) must be injective.
  std::vector<std::pair<int, int>> seen;
  for (Elem x = 0; x < L.n; ++x) {
    if (L.join(lay.lower_left[lay.l_index[x]], lay.lower_right[lay.r_index[x]]) != x) {
      out.reason = "element is not the join of its chain shadows";
      return out;
    }
    seen.emplace_back(lay.l_index[x], lay.r_index[x]);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    out.reason = "coordinates are not injective";
    return out;
  }
  for (auto [p, q] : L.covers) {
    int dl = lay.l_index[q] - lay.l_index[p];
    int dr = lay.r_index[q] - lay.r_index[p];
    if (dl < 0 || dr < 0 || (dl == 0 && dr == 0)) {
      out.reason = "cover does not move up in the grid embedding";
      return out;
    }
  }

  lay.on_left_chain.assign(L.n, false);
  lay.on_right_chain.assign(L.n, false);
  for (Elem x : lay.lower_left) lay.on_left_chain[x] = true;
  for (Elem x : lay.upper_left) lay.on_left_chain[x] = true;
  for (Elem x : lay.lower_right) lay.on_right_chain[x] = true;
  for (Elem x : lay.upper_right) lay.on_right_chain[x] = true;

  // Beta property: an edge is precipitous exactly when its lower end is an
  // interior meet-irreducible element.
  auto irr2 = irreducibles(L);
  std::vector<bool> mir(L.n, false);
  for (Elem m : irr2.mir) mir[m] = true;
  lay.beta_ok = true;
  for (auto [p, q] : L.covers) {
    int dl = lay.l_index[q] - lay.l_index[p];
    int dr = lay.r_index[q] - lay.r_index[p];
    bool precipitous = dl > 0 && dr > 0;
    bool interior_mir = mir[p] && !lay.on_left_chain[p] && !lay.on_right_chain[p];
    if (precipitous != interior_mir) {
      lay.beta_ok = false;
      out.reason = "beta property fails at edge (" + std::to_string(p) + "," +
                   std::to_string(q) + ")";
      break;
    }
  }
  out.layout = std::move(lay);
  return out;
}

inline Layout layout(const FiniteLattice& L) {
  LayoutAttempt a = try_layout(L);
  require(a.layout.has_value(), ErrorCode::NotRectangular, a.reason);
  require(a.layout->beta_ok, ErrorCode::BetaViolation, a.reason);
  return *a.layout;
}

inline Slope classify_edge(const Layout& lay, const FiniteLattice& L, Elem p, Elem q) {
  require(L.covers_pair(p, q), ErrorCode::NotACover,
          "(" + std::to_string(p) + "," + std::to_string(q) + ")");
  int dl = lay.l_index[q] - lay.l_index[p];
  int dr = lay.r_index[q] - lay.r_index[p];
  if (dr == 0) return Slope::NormalLeft;
  if (dl == 0) return Slope::NormalRight;
  return Slope::Precipitous;
}

// Geometric planarity of the drawn diagram: edges only meet at shared
// endpoints and no element sits in the interior of an edge.
inline bool is_planar_drawing(const FiniteLattice& L, const Layout& lay) {
  std::vector<Segment> segs;
  segs.reserve(L.covers.size());
  for (auto [p, q] : L.covers) segs.push_back(Segment{lay.point(p), lay.point(q)});
  for (size_t i = 0; i < segs.size(); ++i)
    for (size_t j = i + 1; j < segs.size(); ++j)
      if (segments_conflict(segs[i], segs[j])) return false;
  for (Elem x = 0; x < L.n; ++x) {
    Pt px = lay.point(x);
    for (size_t i = 0; i < segs.size(); ++i) {
      auto [p, q] = L.covers[i];
      if (p == x || q == x) continue;
      if (on_segment(px, segs[i])) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Validation report
// ---------------------------------------------------------------------------

struct ValidationReport {
  bool semimodular = false;
  bool slim = false;
  bool rectangular = false;
  bool at_most_two_covers = false;
  bool has_layout = false;
  bool planar = false;
  bool beta = false;
  std::string note;

  bool all_ok() const {
    return semimodular && slim && rectangular && at_most_two_covers && has_layout &&
           planar && beta;
  }
};

inline ValidationReport validate_slim_rectangular(const FiniteLattice& L, const Layout& lay) {
  ValidationReport r;
  r.semimodular = is_semimodular(L);
  r.slim = is_slim(L);
  r.rectangular = is_rectangular(L);
  r.at_most_two_covers = has_at_most_two_upper_covers(L);
  r.has_layout = true;
  r.planar = is_planar_drawing(L, lay);
  r.beta = lay.beta_ok;
  return r;
}

inline ValidationReport validate_slim_rectangular(const FiniteLattice& L) {
  ValidationReport r;
  r.semimodular = is_semimodular(L);
  r.slim = is_slim(L);
  r.rectangular = is_rectangular(L);
  r.at_most_two_covers = has_at_most_two_upper_covers(L);
  LayoutAttempt a = try_layout(L);
  if (a.layout) {
    r.has_layout = true;
    r.planar = is_planar_drawing(L, *a.layout);
    r.beta = a.layout->beta_ok;
    r.note = a.reason;
  } else {
    r.note = a.reason;
  }
  return r;
}

// Ordered corners and the four boundary chains.
inline std::pair<Elem, Elem> corners(const FiniteLattice& L) {
  LayoutAttempt a = try_layout(L);
  require(a.layout.has_value(), ErrorCode::NotRectangular, a.reason);
  return {a.layout->corner_left, a.layout->corner_right};
}

struct BoundaryChains {
  std::vector<Elem> lower_left, lower_right, upper_left, upper_right;
};

inline BoundaryChains boundary_chains(const FiniteLattice& L, const Layout& lay) {
  BoundaryChains b{lay.lower_left, lay.lower_right, lay.upper_left, lay.upper_right};
  // The bottom boundary carries exactly the join-irreducibles plus bottom.
  auto irr = irreducibles(L);
  std::vector<Elem> lower = b.lower_left;
  lower.insert(lower.end(), b.lower_right.begin(), b.lower_right.end());
  std::sort(lower.begin(), lower.end());
  lower.erase(std::unique(lower.begin(), lower.end()), lower.end());
  std::vector<Elem> expect = irr.jir;
  expect.push_back(L.bottom);
  std::sort(expect.begin(), expect.end());
  require(lower == expect, ErrorCode::InternalError,
          "lower boundary must equal the join-irreducibles plus bottom");
  std::vector<bool> mir(L.n, false);
  for (Elem m : irr.mir) mir[m] = true;
  for (Elem x : b.upper_left)
    require(x == L.top || mir[x], ErrorCode::InternalError,
            "upper boundary must consist of meet-irreducibles");
  for (Elem x : b.upper_right)
    require(x == L.top || mir[x], ErrorCode::InternalError,
            "upper boundary must consist of meet-irreducibles");
  return b;
}

// Canonical element order of a diagram: by (v, u) lexicographically.
inline std::vector<Elem> canonical_permutation(const FiniteLattice& L, const Layout& lay) {
  std::vector<Elem> order(L.n);
  for (Elem x = 0; x < L.n; ++x) order[x] = x;
  std::sort(order.begin(), order.end(), [&](Elem a, Elem b) {
    if (lay.v(a) != lay.v(b)) return lay.v(a) < lay.v(b);
    return lay.u(a) < lay.u(b);
  });
  std::vector<Elem> new_of_old(L.n);
  for (int i = 0; i < L.n; ++i) new_of_old[order[i]] = i;
  return new_of_old;
}

}  // namespace lampkit
