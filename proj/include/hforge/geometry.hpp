#pragma once

#include <vector>

#include "hforge/rational.hpp"

namespace hforge {

struct Point {
  Rational x;
  Rational y;

  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator!=(const Point& o) const { return !(*this == o); }
};

// Sign of the cross product (b - a) x (c - a): +1 left turn, -1 right turn.
int orientation(const Point& a, const Point& b, const Point& c);

// Inclusive of both endpoints.
bool point_on_segment(const Point& p, const Point& a, const Point& b);

struct SegmentIntersection {
  enum class Kind { None, AtPoint, Overlap };
  Kind kind = Kind::None;
  Point point;  // valid when kind == AtPoint
};

SegmentIntersection intersect_segments(const Point& a1, const Point& a2,
                                       const Point& b1, const Point& b2);

// Cyclic point list; segment i runs points[i] -> points[(i+1) % size].
// Valid closed polylines have >= 3 points and no zero-length segment.
struct ClosedPolyline {
  std::vector<Point> points;

  std::size_t size() const { return points.size(); }
  ClosedPolyline reversed() const;
  void validate() const;  // InvalidParams
};

}  // namespace hforge
