#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "lampkit/error.hpp"

namespace lampkit {

// ---------------------------------------------------------------------------
// Exact rationals over int64. Coordinates stay tiny (diagram units), so no
// overflow protection beyond normalization is needed.
// ---------------------------------------------------------------------------

struct Rat {
  int64_t num = 0;
  int64_t den = 1;

  Rat() = default;
  Rat(int64_t n) : num(n), den(1) {}
  Rat(int64_t n, int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 1) return;  // integer fast path; dominant in diagram work
    if (den < 0) { num = -num; den = -den; }
    int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
    if (num == 0) den = 1;
  }

  friend Rat operator+(Rat a, Rat b) { return Rat(a.num * b.den + b.num * a.den, a.den * b.den); }
  friend Rat operator-(Rat a, Rat b) { return Rat(a.num * b.den - b.num * a.den, a.den * b.den); }
  friend Rat operator*(Rat a, Rat b) { return Rat(a.num * b.num, a.den * b.den); }
  friend Rat operator/(Rat a, Rat b) { return Rat(a.num * b.den, a.den * b.num); }
  friend Rat operator-(Rat a) { return Rat(-a.num, a.den); }
  friend bool operator==(Rat a, Rat b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(Rat a, Rat b) { return !(a == b); }
  friend bool operator<(Rat a, Rat b) { return a.num * b.den < b.num * a.den; }
  friend bool operator<=(Rat a, Rat b) { return a.num * b.den <= b.num * a.den; }
  friend bool operator>(Rat a, Rat b) { return b < a; }
  friend bool operator>=(Rat a, Rat b) { return b <= a; }

  int sign() const { return num > 0 ? 1 : num < 0 ? -1 : 0; }
  std::string str() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

struct Pt {
  Rat x, y;
  friend bool operator==(const Pt& a, const Pt& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const Pt& a, const Pt& b) { return !(a == b); }
};

inline Pt pt(int64_t x, int64_t y) { return Pt{Rat(x), Rat(y)}; }

// cross(b-a, c-a): >0 left turn, <0 right turn, 0 collinear.
inline Rat cross(const Pt& a, const Pt& b, const Pt& c) {
  return (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
}

struct Segment {
  Pt a, b;
  bool degenerate() const { return a == b; }
};

inline bool on_segment(const Pt& p, const Segment& s) {
  if (cross(s.a, s.b, p).sign() != 0) return false;
  return std::min(s.a.x, s.b.x) <= p.x && p.x <= std::max(s.a.x, s.b.x) &&
         std::min(s.a.y, s.b.y) <= p.y && p.y <= std::max(s.a.y, s.b.y);
}

// ---------------------------------------------------------------------------
// Segment intersection with an exact description of the result.
// ---------------------------------------------------------------------------

struct SegIntersection {
  enum Kind { None, Point, Overlap } kind = None;
  Pt point;      // valid when kind == Point
  Segment part;  // valid when kind == Overlap
};

inline SegIntersection segment_intersect(const Segment& s, const Segment& t) {
  SegIntersection out;
  Rat d1 = cross(t.a, t.b, s.a), d2 = cross(t.a, t.b, s.b);
  Rat d3 = cross(s.a, s.b, t.a), d4 = cross(s.a, s.b, t.b);

  auto collect_collinear = [&]() {
    // All four points on one line: intersect parameter ranges.
    std::vector<Pt> pts;
    for (const Pt& p : {s.a, s.b})
      if (on_segment(p, t)) pts.push_back(p);
    for (const Pt& p : {t.a, t.b})
      if (on_segment(p, s)) pts.push_back(p);
    if (pts.empty()) return;
    auto less = [](const Pt& a, const Pt& b) {
      return a.x != b.x ? a.x < b.x : a.y < b.y;
    };
    Pt lo = pts[0], hi = pts[0];
    for (const Pt& p : pts) {
      if (less(p, lo)) lo = p;
      if (less(hi, p)) hi = p;
    }
    if (lo == hi) {
      out.kind = SegIntersection::Point;
      out.point = lo;
    } else {
      out.kind = SegIntersection::Overlap;
      out.part = Segment{lo, hi};
    }
  };

  if (d1.sign() == 0 && d2.sign() == 0 && d3.sign() == 0 && d4.sign() == 0) {
    collect_collinear();
    return out;
  }
  if (((d1.sign() > 0 && d2.sign() < 0) || (d1.sign() < 0 && d2.sign() > 0)) &&
      ((d3.sign() > 0 && d4.sign() < 0) || (d3.sign() < 0 && d4.sign() > 0))) {
    // Proper crossing: solve for the point on s.
    Rat tnum = d1, tden = d1 - d2;  // s.a + (d1/(d1-d2)) * (s.b - s.a)
    Rat lam = tnum / tden;
    out.kind = SegIntersection::Point;
    out.point = Pt{s.a.x + lam * (s.b.x - s.a.x), s.a.y + lam * (s.b.y - s.a.y)};
    return out;
  }
  // Touching cases: an endpoint on the other segment.
  for (const Pt& p : {s.a, s.b})
    if (on_segment(p, t)) {
      out.kind = SegIntersection::Point;
      out.point = p;
      return out;
    }
  for (const Pt& p : {t.a, t.b})
    if (on_segment(p, s)) {
      out.kind = SegIntersection::Point;
      out.point = p;
      return out;
    }
  return out;
}

// True if the segments share more than common endpoints (used for planarity).
inline bool segments_conflict(const Segment& s, const Segment& t) {
  SegIntersection it = segment_intersect(s, t);
  switch (it.kind) {
    case SegIntersection::None: return false;
    case SegIntersection::Overlap: return !it.part.degenerate() ||
        !((it.part.a == s.a || it.part.a == s.b) && (it.part.a == t.a || it.part.a == t.b));
    case SegIntersection::Point: {
      bool end_s = it.point == s.a || it.point == s.b;
      bool end_t = it.point == t.a || it.point == t.b;
      return !(end_s && end_t);
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Simple polygons. Vertices are listed once around the boundary; consecutive
// duplicates and collinear runs are tolerated on input and stripped.
// ---------------------------------------------------------------------------

struct RegionPolygon {
  std::vector<Pt> vertices;

  size_t size() const { return vertices.size(); }
  Segment edge(size_t i) const {
    return Segment{vertices[i], vertices[(i + 1) % vertices.size()]};
  }
};

inline RegionPolygon simplify_polygon(const RegionPolygon& poly) {
  RegionPolygon out;
  const auto& v = poly.vertices;
  size_t n = v.size();
  for (size_t i = 0; i < n; ++i)
    if (v[i] != v[(i + 1) % n]) out.vertices.push_back(v[i]);
  // Drop interior collinear vertices.
  bool changed = true;
  while (changed && out.vertices.size() >= 3) {
    changed = false;
    auto& w = out.vertices;
    for (size_t i = 0; i < w.size(); ++i) {
      const Pt& a = w[(i + w.size() - 1) % w.size()];
      const Pt& b = w[i];
      const Pt& c = w[(i + 1) % w.size()];
      if (cross(a, b, c).sign() == 0 && on_segment(b, Segment{a, c})) {
        w.erase(w.begin() + i);
        changed = true;
        break;
      }
    }
  }
  return out;
}

inline Rat polygon_area_twice(const RegionPolygon& poly) {
  Rat s(0);
  size_t n = poly.vertices.size();
  for (size_t i = 0; i < n; ++i) {
    const Pt& a = poly.vertices[i];
    const Pt& b = poly.vertices[(i + 1) % n];
    s = s + (a.x * b.y - b.x * a.y);
  }
  return s.sign() < 0 ? -s : s;
}

inline bool polygon_is_simple(const RegionPolygon& poly) {
  size_t n = poly.vertices.size();
  if (n < 3) return false;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      SegIntersection it = segment_intersect(poly.edge(i), poly.edge(j));
      if (adjacent) {
        if (it.kind == SegIntersection::Overlap) return false;
      } else if (it.kind != SegIntersection::None) {
        return false;
      }
    }
  return true;
}

inline void require_valid_polygon(const RegionPolygon& poly) {
  RegionPolygon s = simplify_polygon(poly);
  require(s.vertices.size() >= 3, ErrorCode::DegeneratePolygon, "fewer than 3 distinct vertices");
  require(polygon_area_twice(s).sign() > 0, ErrorCode::DegeneratePolygon, "zero area");
  require(polygon_is_simple(s), ErrorCode::DegeneratePolygon, "self-intersecting boundary");
}

enum class PointLocation { Interior, Boundary, Outside };

inline PointLocation point_in_polygon(const Pt& p, const RegionPolygon& poly_in) {
  RegionPolygon poly = simplify_polygon(poly_in);
  require(poly.vertices.size() >= 3, ErrorCode::DegeneratePolygon, "degenerate polygon");
  size_t n = poly.vertices.size();
  for (size_t i = 0; i < n; ++i)
    if (on_segment(p, poly.edge(i))) return PointLocation::Boundary;
  // Crossing parity along the ray to +x; count edges whose y-span straddles p.y.
  bool inside = false;
  for (size_t i = 0; i < n; ++i) {
    Pt a = poly.vertices[i], b = poly.vertices[(i + 1) % n];
    if ((a.y <= p.y) != (b.y <= p.y)) {
      // x coordinate of the edge at height p.y
      Rat xh = a.x + (b.x - a.x) * (p.y - a.y) / (b.y - a.y);
      if (xh > p.x) inside = !inside;
    }
  }
  return inside ? PointLocation::Interior : PointLocation::Outside;
}

// P subset of Q as closed regions. P may be degenerate (a segment chain);
// Q must be a genuine simple polygon.
inline bool polygon_subset(const RegionPolygon& P_in, const RegionPolygon& Q) {
  require_valid_polygon(Q);
  RegionPolygon P = P_in;  // keep raw vertices; duplicates are harmless here
  size_t n = P.vertices.size();
  require(n >= 1, ErrorCode::DegeneratePolygon, "empty polygon");
  for (const Pt& v : P.vertices)
    if (point_in_polygon(v, Q) == PointLocation::Outside) return false;
  if (n == 1) return true;
  // Each edge of P must stay inside Q: split at boundary crossings and probe
  // the midpoint of every resulting piece.
  for (size_t i = 0; i < n; ++i) {
    Segment e = P.edge(i);
    if (e.degenerate()) continue;
    std::vector<Rat> cuts = {Rat(0), Rat(1)};
    RegionPolygon Qs = simplify_polygon(Q);
    for (size_t j = 0; j < Qs.vertices.size(); ++j) {
      SegIntersection it = segment_intersect(e, Qs.edge(j));
      auto param_of = [&](const Pt& p) {
        Rat dx = e.b.x - e.a.x, dy = e.b.y - e.a.y;
        return dx.sign() != 0 ? (p.x - e.a.x) / dx : (p.y - e.a.y) / dy;
      };
      if (it.kind == SegIntersection::Point) cuts.push_back(param_of(it.point));
      if (it.kind == SegIntersection::Overlap) {
        cuts.push_back(param_of(it.part.a));
        cuts.push_back(param_of(it.part.b));
      }
    }
    std::sort(cuts.begin(), cuts.end());
    for (size_t k = 0; k + 1 < cuts.size(); ++k) {
      if (!(cuts[k] < cuts[k + 1])) continue;
      Rat mid = (cuts[k] + cuts[k + 1]) / Rat(2);
      Pt m{e.a.x + mid * (e.b.x - e.a.x), e.a.y + mid * (e.b.y - e.a.y)};
      if (point_in_polygon(m, Q) == PointLocation::Outside) return false;
    }
  }
  return true;
}

}  // namespace lampkit
