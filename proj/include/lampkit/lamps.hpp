#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lampkit/error.hpp"
#include "lampkit/geometry.hpp"
#include "lampkit/lattice.hpp"
#include "lampkit/layout.hpp"
#include "lampkit/poset.hpp"

namespace lampkit {

// ---------------------------------------------------------------------------
// Lamps. A neon tube is an edge whose lower end is meet-irreducible; its top
// is that element's unique upper cover. Tubes with a boundary foot are lamps
// of their own; interior tubes sharing a top q form one internal lamp whose
// foot is the meet of the tube feet and whose peak is q.
// ---------------------------------------------------------------------------

enum class LampKind { BoundaryLeft, BoundaryRight, Internal };

struct Lamp {
  Elem peak = -1;
  Elem foot = -1;
  std::vector<Elem> tubes;  // tube feet, left to right (increasing u)
  LampKind kind = LampKind::Internal;

  bool internal() const { return kind == LampKind::Internal; }
};

inline std::vector<Lamp> lamps(const FiniteLattice& L, const Layout& lay) {
  auto irr = irreducibles(L);
  std::vector<Lamp> out;
  std::map<Elem, std::vector<Elem>> interior_by_top;
  for (Elem m : irr.mir) {
    Elem top = L.up[m][0];
    if (lay.on_boundary(m)) {
      Lamp b;
      b.peak = top;
      b.foot = m;
      b.tubes = {m};
      bool on_ul = std::find(lay.upper_left.begin(), lay.upper_left.end(), m) !=
                   lay.upper_left.end();
      bool on_ur = std::find(lay.upper_right.begin(), lay.upper_right.end(), m) !=
                   lay.upper_right.end();
      require(on_ul || on_ur, ErrorCode::InternalError,
              "boundary tube foot must sit on an upper boundary chain");
      b.kind = on_ul ? LampKind::BoundaryLeft : LampKind::BoundaryRight;
      out.push_back(b);
    } else {
      interior_by_top[top].push_back(m);
    }
  }
  for (auto& [q, feet] : interior_by_top) {
    Lamp I;
    I.peak = q;
    I.kind = LampKind::Internal;
    I.tubes = feet;
    std::sort(I.tubes.begin(), I.tubes.end(), [&](Elem a, Elem b) {
      if (lay.u(a) != lay.u(b)) return lay.u(a) < lay.u(b);
      return lay.v(a) < lay.v(b);
    });
    Elem f = I.tubes[0];
    for (Elem m : I.tubes) f = L.meet(f, m);
    I.foot = f;
    // The region formulas below rely on the feet marching strictly
    // down-right: l decreasing, r increasing, and the foot sitting at the
    // coordinatewise minimum.
    for (size_t i = 0; i + 1 < I.tubes.size(); ++i) {
      require(lay.l_index[I.tubes[i]] > lay.l_index[I.tubes[i + 1]] &&
                  lay.r_index[I.tubes[i]] < lay.r_index[I.tubes[i + 1]],
              ErrorCode::InternalError, "tube feet of one lamp not strictly ordered");
    }
    require(lay.l_index[I.foot] == lay.l_index[I.tubes.back()] &&
                lay.r_index[I.foot] == lay.r_index[I.tubes.front()],
            ErrorCode::InternalError, "internal lamp foot off the tube corner");
    out.push_back(I);
  }
  std::sort(out.begin(), out.end(), [](const Lamp& a, const Lamp& b) {
    return a.foot != b.foot ? a.foot < b.foot : a.peak < b.peak;
  });
  return out;
}

// ---------------------------------------------------------------------------
// cov and lift
// ---------------------------------------------------------------------------

// Join of all upper covers of u.
inline Elem cov(const FiniteLattice& L, Elem u) {
  require(u != L.top, ErrorCode::CovOfTop, "cov of the top element");
  Elem j = L.up[u][0];
  for (Elem y : L.up[u]) j = L.join(j, y);
  return j;
}

// Recover the peak of the lamp footed at x. A meet-irreducible foot carries a
// single tube, so its peak is its unique cover. A reducible foot is the meet
// of several interior tube feet; climbing the cov chain reaches the peak at
// the first element whose interior meet-irreducible lower covers above x meet
// back to x. Note the plain rule "stop when cov x covers some meet
// irreducible" overshoots once lamps nest: climbing out of an older fan
// passes the peak of a younger lamp planted inside it.
inline Elem lift(const FiniteLattice& L, Elem x) {
  if (x == L.top) return L.top;
  if (L.up[x].size() == 1) return L.up[x][0];
  auto irr = irreducibles(L);
  std::vector<bool> interior_mir(L.n, false);
  {
    auto [c0, c1] = corner_pair(L);
    for (Elem m : irr.mir)
      if (!L.le(c0, m) && !L.le(c1, m)) interior_mir[m] = true;
  }
  Elem c = x;
  while (c != L.top) {
    c = cov(L, c);
    Elem meet_of_feet = -1;
    for (Elem y : L.down[c]) {
      if (!interior_mir[y] || !L.le(x, y)) continue;
      meet_of_feet = meet_of_feet < 0 ? y : L.meet(meet_of_feet, y);
    }
    if (meet_of_feet == x) return c;
  }
  return L.top;
}

// ---------------------------------------------------------------------------
// Lamp geometry in the (l, r) plane.
//
//   full rectangle F  = [0, A-1] x [0, B-1]
//   LRoof             = { x = lq, 0 <= y <= rq }      (down-left from the peak)
//   RRoof             = { y = rq, 0 <= x <= lq }      (down-right)
//   LFloor / RFloor   = same from the foot
//   Lit               = { x <= lq, y <= rq } minus the open corner
//                       { x < lp, y < rp }, clipped to F
//   LeftLit           = vertical shadow of the rightmost tube (a trapezoid;
//                       a boundary-left lamp leaves only the tube segment)
//   RightLit          = horizontal shadow of the leftmost tube
//
// Membership tests are exact; Interior asks for the topological interior as
// a subset of the plane.
// ---------------------------------------------------------------------------

struct LampShape {
  int lq, rq;      // peak
  int lp, rp;      // foot
  int l1, r1;      // leftmost tube foot (largest l, smallest r)
  int ln, rn;      // rightmost tube foot
  int A, B;
  bool internal, bleft, bright;
};

inline LampShape shape(const Layout& lay, const Lamp& I) {
  LampShape s;
  s.lq = lay.l_index[I.peak];
  s.rq = lay.r_index[I.peak];
  s.lp = lay.l_index[I.foot];
  s.rp = lay.r_index[I.foot];
  s.l1 = lay.l_index[I.tubes.front()];
  s.r1 = lay.r_index[I.tubes.front()];
  s.ln = lay.l_index[I.tubes.back()];
  s.rn = lay.r_index[I.tubes.back()];
  s.A = lay.A();
  s.B = lay.B();
  s.internal = I.kind == LampKind::Internal;
  s.bleft = I.kind == LampKind::BoundaryLeft;
  s.bright = I.kind == LampKind::BoundaryRight;
  return s;
}

enum class Fill { Closed, Interior };

inline bool lit_contains(const LampShape& s, const Pt& p, Fill f) {
  Rat x = p.x, y = p.y;
  if (f == Fill::Closed) {
    if (!(x >= Rat(0) && x <= Rat(s.A - 1) && y >= Rat(0) && y <= Rat(s.B - 1))) return false;
    if (!(x <= Rat(s.lq) && y <= Rat(s.rq))) return false;
    return !(x < Rat(s.lp) && y < Rat(s.rp));
  }
  if (!(x > Rat(0) && x < Rat(s.A - 1) && y > Rat(0) && y < Rat(s.B - 1))) return false;
  if (!(x < Rat(s.lq) && y < Rat(s.rq))) return false;
  return x > Rat(s.lp) || y > Rat(s.rp);
}

// Side tests against the segment foot->peak of an extreme tube.
inline Rat tube_side(int lf, int rf, int lq, int rq, const Pt& p) {
  return cross(pt(lf, rf), pt(lq, rq), p);
}

inline bool leftlit_contains(const LampShape& s, const Pt& p, Fill f) {
  Rat x = p.x, y = p.y;
  if (s.bleft) {
    if (f == Fill::Interior) return false;  // zero area
    return x == Rat(s.lq) && y >= Rat(0) && y <= Rat(s.rq);
  }
  Rat side = tube_side(s.ln, s.rn, s.lq, s.rq, p);  // <= 0: on/below the tube
  if (f == Fill::Closed)
    return x >= Rat(s.ln) && x <= Rat(s.lq) && y >= Rat(0) && side <= Rat(0);
  return x > Rat(s.ln) && x < Rat(s.lq) && y > Rat(0) && side < Rat(0);
}

inline bool rightlit_contains(const LampShape& s, const Pt& p, Fill f) {
  Rat x = p.x, y = p.y;
  if (s.bright) {
    if (f == Fill::Interior) return false;
    return y == Rat(s.rq) && x >= Rat(0) && x <= Rat(s.lq);
  }
  Rat side = tube_side(s.l1, s.r1, s.lq, s.rq, p);  // >= 0: on/left of the tube
  if (f == Fill::Closed)
    return y >= Rat(s.r1) && y <= Rat(s.rq) && x >= Rat(0) && side >= Rat(0);
  return y > Rat(s.r1) && y < Rat(s.rq) && x > Rat(0) && side > Rat(0);
}

inline bool on_floor(const LampShape& s, const Pt& p) {
  bool lf = p.x == Rat(s.lp) && p.y >= Rat(0) && p.y <= Rat(s.rp);
  bool rf = p.y == Rat(s.rp) && p.x >= Rat(0) && p.x <= Rat(s.lp);
  return lf || rf;
}

inline bool on_roof(const LampShape& s, const Pt& p) {
  bool lr = p.x == Rat(s.lq) && p.y >= Rat(0) && p.y <= Rat(s.rq);
  bool rr = p.y == Rat(s.rq) && p.x >= Rat(0) && p.x <= Rat(s.lq);
  return lr || rr;
}

// ---------------------------------------------------------------------------
// Ray-based illumination: the independent oracle for the region membership
// functions above. A point is lit from the left when the up-left ray from it
// (+l at constant r) meets a tube of the lamp, and from the right when the
// up-right ray (+r) does.
// ---------------------------------------------------------------------------

enum class Illum { None, Left, Right, Both };

inline Illum illuminated(const FiniteLattice& L, const Layout& lay, const Lamp& I,
                         const Pt& p) {
  Rat reach_l = Rat(lay.A() + 1);
  Rat reach_r = Rat(lay.B() + 1);
  Segment up_left{p, Pt{reach_l, p.y}};
  Segment up_right{p, Pt{p.x, reach_r}};
  bool from_left = false, from_right = false;
  for (Elem m : I.tubes) {
    Segment tube{lay.point(m), lay.point(I.peak)};
    if (!from_left && segment_intersect(up_left, tube).kind != SegIntersection::None)
      from_left = true;
    if (!from_right && segment_intersect(up_right, tube).kind != SegIntersection::None)
      from_right = true;
  }
  (void)L;
  if (from_left && from_right) return Illum::Both;
  if (from_left) return Illum::Left;
  if (from_right) return Illum::Right;
  return Illum::None;
}

// ---------------------------------------------------------------------------
// Region polygons
// ---------------------------------------------------------------------------

struct LampRegions {
  RegionPolygon body;      // quadrilateral foot, m1, peak, mn (or a segment)
  RegionPolygon circ;      // internal lamps only
  Segment lroof, rroof, lfloor, rfloor;
  RegionPolygon lit;       // positive-area part; membership via lit_contains
  RegionPolygon leftlit;   // possibly degenerate (boundary-left: a segment)
  RegionPolygon rightlit;
};

// Boundary walk of the interval region [p, q]: up the side of extreme-u
// covers. Side: -1 leftmost (smallest u), +1 rightmost.
inline std::vector<Elem> interval_side_chain(const FiniteLattice& L, const Layout& lay,
                                             Elem p, Elem q, int side) {
  std::vector<Elem> chain = {p};
  Elem x = p;
  int guard = 0;
  while (x != q) {
    require(++guard <= L.n, ErrorCode::InternalError, "interval walk did not terminate");
    Elem best = -1;
    for (Elem y : L.up[x]) {
      if (!L.le(y, q)) continue;
      if (best < 0) { best = y; continue; }
      int du = lay.u(y) - lay.u(best);
      if ((side < 0 && du < 0) || (side > 0 && du > 0)) best = y;
    }
    require(best >= 0, ErrorCode::InternalError, "interval walk stuck");
    chain.push_back(best);
    x = best;
  }
  return chain;
}

inline RegionPolygon interval_region(const FiniteLattice& L, const Layout& lay, Elem p,
                                     Elem q) {
  std::vector<Elem> left = interval_side_chain(L, lay, p, q, -1);
  std::vector<Elem> right = interval_side_chain(L, lay, p, q, +1);
  RegionPolygon poly;
  for (Elem x : left) poly.vertices.push_back(lay.point(x));
  for (size_t i = right.size(); i-- > 1;)
    if (right[i] != q) poly.vertices.push_back(lay.point(right[i]));
  return simplify_polygon(poly);
}

// Meet of the lower covers of the peak; also checked against the meet of the
// extreme (leftmost and rightmost) lower covers.
inline Elem circ_bottom(const FiniteLattice& L, const Layout& lay, const Lamp& I) {
  require(I.internal(), ErrorCode::CircOfBoundaryLamp, "circumscribed rectangle");
  const auto& lows = L.down[I.peak];
  Elem m = lows[0];
  for (Elem y : lows) m = L.meet(m, y);
  Elem lm = lows[0], rm = lows[0];
  for (Elem y : lows) {
    if (lay.u(y) < lay.u(lm)) lm = y;
    if (lay.u(y) > lay.u(rm)) rm = y;
  }
  require(L.meet(lm, rm) == m, ErrorCode::InternalError,
          "extreme lower covers do not meet at the rectangle bottom");
  return m;
}

inline LampRegions regions(const FiniteLattice& L, const Layout& lay, const Lamp& I) {
  LampRegions R;
  LampShape s = shape(lay, I);

  {
    RegionPolygon body;
    body.vertices = {pt(s.lp, s.rp), pt(s.l1, s.r1), pt(s.lq, s.rq), pt(s.ln, s.rn)};
    R.body = simplify_polygon(body);
    if (I.internal() && I.tubes.size() >= 2) {
      RegionPolygon walked = interval_region(L, lay, I.foot, I.peak);
      require(polygon_area_twice(walked) == polygon_area_twice(R.body),
              ErrorCode::InternalError, "body region mismatch");
    }
  }
  if (I.internal()) {
    Elem b = circ_bottom(L, lay, I);
    int lb = lay.l_index[b], rb = lay.r_index[b];
    R.circ.vertices = {pt(lb, rb), pt(s.lq, rb), pt(s.lq, s.rq), pt(lb, s.rq)};
  }
  R.lroof = Segment{pt(s.lq, 0), pt(s.lq, s.rq)};
  R.rroof = Segment{pt(0, s.rq), pt(s.lq, s.rq)};
  R.lfloor = Segment{pt(s.lp, 0), pt(s.lp, s.rp)};
  R.rfloor = Segment{pt(0, s.rp), pt(s.lp, s.rp)};

  {
    RegionPolygon lit;
    lit.vertices = {pt(s.lq, 0), pt(s.lq, s.rq), pt(0, s.rq), pt(0, s.rp),
                    pt(s.lp, s.rp), pt(s.lp, 0)};
    // Boundary lamps: keep the positive-area band; the sliver of Lit running
    // along the boundary chain below the foot stays covered by lit_contains.
    if (s.lp == s.lq)
      lit.vertices = {pt(s.lq, s.rp), pt(s.lq, s.rq), pt(0, s.rq), pt(0, s.rp)};
    else if (s.rp == s.rq)
      lit.vertices = {pt(s.lq, 0), pt(s.lq, s.rq), pt(s.lp, s.rq), pt(s.lp, 0)};
    R.lit = simplify_polygon(lit);
  }
  {
    RegionPolygon ll;
    if (s.bleft)
      ll.vertices = {pt(s.lq, 0), pt(s.lq, s.rq)};
    else
      ll.vertices = {pt(s.ln, 0), pt(s.ln, s.rn), pt(s.lq, s.rq), pt(s.lq, 0)};
    R.leftlit = simplify_polygon(ll);
  }
  {
    RegionPolygon rl;
    if (s.bright)
      rl.vertices = {pt(0, s.rq), pt(s.lq, s.rq)};
    else
      rl.vertices = {pt(0, s.r1), pt(s.l1, s.r1), pt(s.lq, s.rq), pt(0, s.rq)};
    R.rightlit = simplify_polygon(rl);
  }
  return R;
}

// ---------------------------------------------------------------------------
// The eight lamp relations. The containment tests exploit that Lit is a
// corner region (vertex tests plus one corner probe at the contained set's
// coordinatewise-minimal vertex) and that LeftLit/RightLit are convex.
//
// The two relations that place a bare foot in a closed illuminated set are
// evaluated with the roof removed: when foot I coincides with (or sits on the
// roof through) Peak J, the closed set touches the foot even though no open
// neighborhood of it is lit, and the relations must not fire on that grazing
// contact. Feet of related lamps always lie in the interior, so this removes
// nothing else.
// ---------------------------------------------------------------------------

enum class LampRelation {
  RhoB,          // body inside Lit
  RhoC,          // circumscribed rectangle inside Lit
  RhoAlg,        // Peak I <= Peak J but foot I not<= foot J
  HalfRhoB,      // body inside LeftLit or RightLit
  HalfRhoC,      // rectangle inside LeftLit or RightLit
  RhoFoot,       // foot in Lit, I internal
  RhoIntFoot,    // foot in the interior of Lit
  RhoLitFloorFoot,  // foot in Lit minus its floor
};

inline const std::vector<LampRelation>& all_lamp_relations() {
  static const std::vector<LampRelation> k = {
      LampRelation::RhoB,     LampRelation::RhoC,       LampRelation::RhoAlg,
      LampRelation::HalfRhoB, LampRelation::HalfRhoC,   LampRelation::RhoFoot,
      LampRelation::RhoIntFoot, LampRelation::RhoLitFloorFoot};
  return k;
}

inline const char* relation_name(LampRelation k) {
  switch (k) {
    case LampRelation::RhoB: return "rho_B";
    case LampRelation::RhoC: return "rho_C";
    case LampRelation::RhoAlg: return "rho_alg";
    case LampRelation::HalfRhoB: return "half_rho_B";
    case LampRelation::HalfRhoC: return "half_rho_C";
    case LampRelation::RhoFoot: return "rho_foot";
    case LampRelation::RhoIntFoot: return "rho_int_foot";
    case LampRelation::RhoLitFloorFoot: return "rho_lit0_foot";
  }
  return "?";
}

namespace detail {

// Vertex list of a contained shape, with its coordinatewise-minimal vertex.
struct Shape {
  std::vector<Pt> verts;
  Pt vmin;
};

inline Shape body_shape(const Layout& lay, const Lamp& I) {
  LampShape s = shape(lay, I);
  Shape sh;
  sh.verts = {pt(s.lp, s.rp), pt(s.l1, s.r1), pt(s.lq, s.rq), pt(s.ln, s.rn)};
  sh.vmin = pt(s.lp, s.rp);
  return sh;
}

inline Shape circ_shape(const FiniteLattice& L, const Layout& lay, const Lamp& I) {
  LampShape s = shape(lay, I);
  Elem b = circ_bottom(L, lay, I);
  int lb = lay.l_index[b], rb = lay.r_index[b];
  Shape sh;
  sh.verts = {pt(lb, rb), pt(s.lq, rb), pt(s.lq, s.rq), pt(lb, s.rq)};
  sh.vmin = pt(lb, rb);
  return sh;
}

inline bool shape_in_lit(const Shape& sh, const LampShape& j) {
  for (const Pt& v : sh.verts)
    if (!(v.x <= Rat(j.lq) && v.y <= Rat(j.rq))) return false;
  return !(sh.vmin.x < Rat(j.lp) && sh.vmin.y < Rat(j.rp));
}

// LeftLit and RightLit are convex (a trapezoid, or a segment for boundary
// lamps), so vertex membership decides containment.
inline bool shape_in_leftlit(const Shape& sh, const LampShape& j) {
  for (const Pt& v : sh.verts)
    if (!leftlit_contains(j, v, Fill::Closed)) return false;
  return true;
}

inline bool shape_in_rightlit(const Shape& sh, const LampShape& j) {
  for (const Pt& v : sh.verts)
    if (!rightlit_contains(j, v, Fill::Closed)) return false;
  return true;
}

}  // namespace detail

inline bool relation(const FiniteLattice& L, const Layout& lay,
                     const std::vector<Lamp>& lam, int i, int j, LampRelation kind) {
  const Lamp& I = lam[i];
  const Lamp& J = lam[j];
  LampShape sj = shape(lay, J);
  Pt footI = lay.point(I.foot);
  switch (kind) {
    case LampRelation::RhoB:
      return i != j && I.internal() && detail::shape_in_lit(detail::body_shape(lay, I), sj);
    case LampRelation::RhoC:
      return i != j && I.internal() &&
             detail::shape_in_lit(detail::circ_shape(L, lay, I), sj);
    case LampRelation::RhoAlg:
      // The blanket stipulation that I is internal is load bearing here:
      // distinct boundary lamps can share a peak while their feet stay
      // incomparable, and they must not become related.
      return i != j && I.internal() && L.le(I.peak, J.peak) && !L.le(I.foot, J.foot);
    case LampRelation::HalfRhoB: {
      if (i == j || !I.internal()) return false;
      auto sh = detail::body_shape(lay, I);
      return detail::shape_in_leftlit(sh, sj) || detail::shape_in_rightlit(sh, sj);
    }
    case LampRelation::HalfRhoC: {
      if (i == j || !I.internal()) return false;
      auto sh = detail::circ_shape(L, lay, I);
      return detail::shape_in_leftlit(sh, sj) || detail::shape_in_rightlit(sh, sj);
    }
    case LampRelation::RhoFoot:
      return i != j && I.internal() && lit_contains(sj, footI, Fill::Closed) &&
             !on_roof(sj, footI);
    case LampRelation::RhoIntFoot:
      return i != j && lit_contains(sj, footI, Fill::Interior);
    case LampRelation::RhoLitFloorFoot:
      return lit_contains(sj, footI, Fill::Closed) && !on_floor(sj, footI) &&
             !on_roof(sj, footI);
  }
  return false;
}

// ---------------------------------------------------------------------------
// The lamp poset: reflexive-transitive closure of rho_alg.
// ---------------------------------------------------------------------------

struct LampPoset {
  std::vector<Lamp> lamps;
  Poset poset;  // over lamp indices
};

inline LampPoset lamp_poset(const FiniteLattice& L, const Layout& lay) {
  LampPoset lp;
  lp.lamps = lamps(L, lay);
  int k = (int)lp.lamps.size();
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j && relation(L, lay, lp.lamps, i, j, LampRelation::RhoAlg))
        rel.emplace_back(i, j);
  lp.poset = poset_from_relations(k, rel);  // throws NotAntisymmetric on failure
  return lp;
}

// ---------------------------------------------------------------------------
// Separatory and floor-aligned pairs, independence, sufficient disjointness,
// and the gap test along the opposite boundary.
// ---------------------------------------------------------------------------

// "S1 is to the left of S2": both of positive length, parallel,
// non-horizontal, and S1's line meets the u-axis strictly left of S2's.
// In (l, r) coordinates the u-axis intercept of the line through (x0, y0)
// with direction (dx, dy) is taken in drawing coordinates.
inline bool left_of(const Segment& s1, const Segment& s2) {
  if (s1.degenerate() || s2.degenerate()) return false;
  Rat d1x = s1.b.x - s1.a.x, d1y = s1.b.y - s1.a.y;
  Rat d2x = s2.b.x - s2.a.x, d2y = s2.b.y - s2.a.y;
  if (!(d1x * d2y == d1y * d2x)) return false;  // not parallel
  // Direction in drawing coordinates: (du, dv) = (dy - dx, dy + dx).
  Rat dv = d1y + d1x;
  if (dv.sign() == 0) return false;  // horizontal line
  // Intercept with v = 0 for the line through (x, y): u - v * du/dv.
  auto intercept = [&](const Pt& p, Rat du_, Rat dv_) {
    Rat u = p.y - p.x, v = p.y + p.x;
    return u - v * du_ / dv_;
  };
  Rat a1 = intercept(s1.a, d1y - d1x, d1y + d1x);
  Rat a2 = intercept(s2.a, d2y - d2x, d2y + d2x);
  return a1 < a2;
}

namespace detail {

inline Segment clip_floor_l(const LampShape& s) {
  return Segment{pt(s.lp, 0), pt(s.lp, s.rp)};
}
inline Segment clip_floor_r(const LampShape& s) {
  return Segment{pt(0, s.rp), pt(s.lp, s.rp)};
}
inline Segment clip_roof_l(const LampShape& s) {
  return Segment{pt(s.lq, 0), pt(s.lq, s.rq)};
}
inline Segment clip_roof_r(const LampShape& s) {
  return Segment{pt(0, s.rq), pt(s.lq, s.rq)};
}

}  // namespace detail

inline bool separatory(const Layout& lay, const Lamp& I, const Lamp& J) {
  LampShape a = shape(lay, I), b = shape(lay, J);
  auto chain4 = [](const Segment& r0, const Segment& r1, const Segment& f0,
                   const Segment& f1) {
    return left_of(r0, r1) && left_of(r1, f0) && left_of(f0, f1);
  };
  bool left = chain4(detail::clip_roof_l(a), detail::clip_roof_l(b),
                     detail::clip_floor_l(a), detail::clip_floor_l(b)) ||
              chain4(detail::clip_roof_l(b), detail::clip_roof_l(a),
                     detail::clip_floor_l(b), detail::clip_floor_l(a));
  bool right = chain4(detail::clip_roof_r(a), detail::clip_roof_r(b),
                      detail::clip_floor_r(a), detail::clip_floor_r(b)) ||
               chain4(detail::clip_roof_r(b), detail::clip_roof_r(a),
                      detail::clip_floor_r(b), detail::clip_floor_r(a));
  return left || right;
}

// Floors lying inside the frame of the full rectangle and on a shared line.
// Floors that run along the frame itself (boundary lamps) are the frame, not
// a light boundary, and do not count.
inline bool floor_aligned(const Layout& lay, const Lamp& I, const Lamp& J) {
  LampShape a = shape(lay, I), b = shape(lay, J);
  auto pos = [](const Segment& s) { return !s.degenerate(); };
  Segment la = detail::clip_floor_l(a), lb = detail::clip_floor_l(b);
  Segment ra = detail::clip_floor_r(a), rb = detail::clip_floor_r(b);
  bool left = pos(la) && pos(lb) && a.lp == b.lp && a.lp != 0 && a.lp != a.A - 1;
  bool right = pos(ra) && pos(rb) && a.rp == b.rp && a.rp != 0 && a.rp != a.B - 1;
  return left || right;
}

inline bool independent(const FiniteLattice& L, const Lamp& I, const Lamp& J) {
  return L.le(I.peak, J.foot) || L.le(J.peak, I.foot);
}

// No line segment of positive length and non-normal slope fits inside
// Lit I and Lit J at once; equivalently the intersection has zero area.
inline bool sufficiently_disjoint(const Layout& lay, const Lamp& I, const Lamp& J) {
  LampShape a = shape(lay, I), b = shape(lay, J);
  auto rect_area = [](int x0, int x1, int y0, int y1) -> int64_t {
    if (x1 <= x0 || y1 <= y0) return 0;
    return int64_t(x1 - x0) * int64_t(y1 - y0);
  };
  int X = std::min(a.lq, b.lq), Y = std::min(a.rq, b.rq);
  X = std::min(X, a.A - 1);
  Y = std::min(Y, a.B - 1);
  // area(box minus (Ca union Cb)) via inclusion-exclusion on the open corners
  int64_t box = rect_area(0, X, 0, Y);
  int64_t ca = rect_area(0, std::min(X, a.lp), 0, std::min(Y, a.rp));
  int64_t cb = rect_area(0, std::min(X, b.lp), 0, std::min(Y, b.rp));
  int64_t cab = rect_area(0, std::min({X, a.lp, b.lp}), 0, std::min({Y, a.rp, b.rp}));
  return box - ca - cb + cab == 0;
}

// Gap test for a boundary lamp Z: the part of E(Z) (the trace of Lit Z on the
// opposite bottom boundary chain) covered by Lit U over lamps U with
// (U, Z) in rho_C must be empty or a single segment reaching the upper end
// of E(Z).
inline bool no_gap(const FiniteLattice& L, const Layout& lay,
                   const std::vector<Lamp>& lam, int z_index) {
  const Lamp& Z = lam[z_index];
  require(!Z.internal(), ErrorCode::InternalError, "no_gap expects a boundary lamp");
  LampShape sz = shape(lay, Z);
  // Left lamps shine on the chain l = 0 with trace parameter r; right lamps
  // on r = 0 with parameter l.
  bool zleft = Z.kind == LampKind::BoundaryLeft;
  int lo_z = zleft ? sz.rp : sz.lp;
  int hi_z = zleft ? sz.rq : sz.lq;
  std::vector<std::pair<int, int>> pieces;
  for (int u = 0; u < (int)lam.size(); ++u) {
    if (u == z_index) continue;
    if (!relation(L, lay, lam, u, z_index, LampRelation::RhoC)) continue;
    LampShape su = shape(lay, lam[u]);
    // Lit U restricted to the chain: parameter range [foot, peak] on the
    // relevant coordinate, provided the open-corner exclusion lets the chain
    // through (it does: internal feet are interior).
    int lo = zleft ? su.rp : su.lp;
    int hi = zleft ? su.rq : su.lq;
    lo = std::max(lo, lo_z);
    hi = std::min(hi, hi_z);
    if (lo <= hi) pieces.emplace_back(lo, hi);
  }
  if (pieces.empty()) return true;
  std::sort(pieces.begin(), pieces.end());
  int cur_lo = pieces[0].first, cur_hi = pieces[0].second;
  for (auto [lo, hi] : pieces) {
    if (lo > cur_hi) return false;  // disconnected
    cur_hi = std::max(cur_hi, hi);
  }
  (void)cur_lo;
  return cur_hi == hi_z;
}

}  // namespace lampkit
