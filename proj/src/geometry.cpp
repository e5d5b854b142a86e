#include "hforge/geometry.hpp"

#include <algorithm>

namespace hforge {

int orientation(const Point& a, const Point& b, const Point& c) {
  Rational cr = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
  return cr.sign();
}

bool point_on_segment(const Point& p, const Point& a, const Point& b) {
  if (orientation(a, b, p) != 0) return false;
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

namespace {

// 1D overlap of collinear segments projected on the dominant axis.
SegmentIntersection collinear_case(const Point& a1, const Point& a2,
                                   const Point& b1, const Point& b2) {
  bool use_x = (a1.x != a2.x) || (b1.x != b2.x);
  auto key = [use_x](const Point& p) { return use_x ? p.x : p.y; };

  const Point* alo = &a1; const Point* ahi = &a2;
  if (key(*ahi) < key(*alo)) std::swap(alo, ahi);
  const Point* blo = &b1; const Point* bhi = &b2;
  if (key(*bhi) < key(*blo)) std::swap(blo, bhi);

  const Point* lo = (key(*alo) < key(*blo)) ? blo : alo;  // max of the lows
  const Point* hi = (key(*ahi) < key(*bhi)) ? ahi : bhi;  // min of the highs

  SegmentIntersection out;
  if (key(*lo) > key(*hi)) return out;  // disjoint
  if (key(*lo) == key(*hi)) {
    out.kind = SegmentIntersection::Kind::AtPoint;
    out.point = *lo;
    return out;
  }
  out.kind = SegmentIntersection::Kind::Overlap;
  return out;
}

}  // namespace

SegmentIntersection intersect_segments(const Point& a1, const Point& a2,
                                       const Point& b1, const Point& b2) {
  int d1 = orientation(b1, b2, a1);
  int d2 = orientation(b1, b2, a2);
  int d3 = orientation(a1, a2, b1);
  int d4 = orientation(a1, a2, b2);

  SegmentIntersection out;

  if (d1 == 0 && d2 == 0 && d3 == 0 && d4 == 0) {
    return collinear_case(a1, a2, b1, b2);
  }

  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    // proper crossing; solve a1 + t (a2 - a1) on the line through b1, b2
    Rational denom = (a2.x - a1.x) * (b2.y - b1.y) - (a2.y - a1.y) * (b2.x - b1.x);
    Rational tnum = (b1.x - a1.x) * (b2.y - b1.y) - (b1.y - a1.y) * (b2.x - b1.x);
    Rational t = tnum / denom;
    out.kind = SegmentIntersection::Kind::AtPoint;
    out.point = {a1.x + t * (a2.x - a1.x), a1.y + t * (a2.y - a1.y)};
    return out;
  }

  // endpoint touching the other segment
  if (d1 == 0 && point_on_segment(a1, b1, b2)) { out.kind = SegmentIntersection::Kind::AtPoint; out.point = a1; return out; }
  if (d2 == 0 && point_on_segment(a2, b1, b2)) { out.kind = SegmentIntersection::Kind::AtPoint; out.point = a2; return out; }
  if (d3 == 0 && point_on_segment(b1, a1, a2)) { out.kind = SegmentIntersection::Kind::AtPoint; out.point = b1; return out; }
  if (d4 == 0 && point_on_segment(b2, a1, a2)) { out.kind = SegmentIntersection::Kind::AtPoint; out.point = b2; return out; }
  return out;
}

ClosedPolyline ClosedPolyline::reversed() const {
  ClosedPolyline out;
  out.points.assign(points.rbegin(), points.rend());
  return out;
}

void ClosedPolyline::validate() const {
  if (points.size() < 3) {
    throw Error(ErrorCode::InvalidParams, "closed polyline needs at least 3 points");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    const Point& a = points[i];
    const Point& b = points[(i + 1) % points.size()];
    if (a == b) throw Error(ErrorCode::InvalidParams, "zero-length polyline segment");
  }
}

}  // namespace hforge
