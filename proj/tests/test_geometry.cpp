#include <catch2/catch_amalgamated.hpp>

#include "lampkit/geometry.hpp"

using namespace lampkit;

TEST_CASE("rational arithmetic normalizes") {
  REQUIRE(Rat(2, 4) == Rat(1, 2));
  REQUIRE(Rat(1, -2) == Rat(-1, 2));
  REQUIRE(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
  REQUIRE(Rat(3, 2) * Rat(2, 3) == Rat(1));
  REQUIRE(Rat(1, 3) < Rat(1, 2));
}

TEST_CASE("crossing diagonals meet in one interior point") {
  Segment d1{pt(0, 0), pt(2, 2)};
  Segment d2{pt(0, 2), pt(2, 0)};
  SegIntersection it = segment_intersect(d1, d2);
  REQUIRE(it.kind == SegIntersection::Point);
  REQUIRE(it.point == pt(1, 1));
}

TEST_CASE("collinear overlap is reported as a segment") {
  Segment s{pt(0, 0), pt(4, 0)};
  Segment t{pt(2, 0), pt(6, 0)};
  SegIntersection it = segment_intersect(s, t);
  REQUIRE(it.kind == SegIntersection::Overlap);
  REQUIRE(it.part.a == pt(2, 0));
  REQUIRE(it.part.b == pt(4, 0));
}

TEST_CASE("disjoint segments do not intersect") {
  REQUIRE(segment_intersect(Segment{pt(0, 0), pt(1, 0)}, Segment{pt(0, 1), pt(1, 1)}).kind ==
          SegIntersection::None);
}

TEST_CASE("shared endpoints are not planarity conflicts") {
  REQUIRE_FALSE(segments_conflict(Segment{pt(0, 0), pt(1, 1)}, Segment{pt(1, 1), pt(2, 0)}));
  REQUIRE(segments_conflict(Segment{pt(0, 0), pt(2, 2)}, Segment{pt(0, 2), pt(2, 0)}));
  // touching in the middle of one segment
  REQUIRE(segments_conflict(Segment{pt(0, 0), pt(2, 0)}, Segment{pt(1, 0), pt(1, 1)}));
}

TEST_CASE("point in polygon classification") {
  RegionPolygon square;
  square.vertices = {pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)};
  REQUIRE(point_in_polygon(pt(1, 1), square) == PointLocation::Interior);
  REQUIRE(point_in_polygon(pt(0, 1), square) == PointLocation::Boundary);
  REQUIRE(point_in_polygon(pt(2, 2), square) == PointLocation::Boundary);
  REQUIRE(point_in_polygon(pt(3, 1), square) == PointLocation::Outside);
  REQUIRE(point_in_polygon(Pt{Rat(1, 2), Rat(1, 2)}, square) == PointLocation::Interior);
}

TEST_CASE("unit square is a subset of itself") {
  RegionPolygon square;
  square.vertices = {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)};
  REQUIRE(polygon_subset(square, square));
}

TEST_CASE("polygon subset detects protrusions and degenerate containers") {
  RegionPolygon outer;
  outer.vertices = {pt(0, 0), pt(4, 0), pt(4, 4), pt(0, 4)};
  RegionPolygon inner;
  inner.vertices = {pt(1, 1), pt(3, 1), pt(3, 3), pt(1, 3)};
  REQUIRE(polygon_subset(inner, outer));
  REQUIRE_FALSE(polygon_subset(outer, inner));
  // an L-shaped container and a probe crossing its notch between two
  // boundary contacts
  RegionPolygon ell;
  ell.vertices = {pt(0, 0), pt(4, 0), pt(4, 2), pt(2, 2), pt(2, 4), pt(0, 4)};
  RegionPolygon probe;
  probe.vertices = {pt(1, 3), pt(3, 3), pt(3, 1), pt(1, 1)};
  REQUIRE_FALSE(polygon_subset(probe, ell));
  RegionPolygon degenerate;
  degenerate.vertices = {pt(0, 0), pt(1, 1)};
  REQUIRE_THROWS_AS(polygon_subset(inner, degenerate), Error);
  // but a degenerate contained "polygon" (a segment) is fine
  REQUIRE(polygon_subset(degenerate, outer));
}

TEST_CASE("polygon simplification strips collinear runs") {
  RegionPolygon p;
  p.vertices = {pt(0, 0), pt(1, 0), pt(2, 0), pt(2, 2), pt(0, 2)};
  REQUIRE(simplify_polygon(p).vertices.size() == 4);
}
