#include "hforge/winding.hpp"

#include <algorithm>

namespace hforge {

namespace {

Rational cross2(const Rational& ax, const Rational& ay, const Rational& bx, const Rational& by) {
  return ax * by - ay * bx;
}

}  // namespace

int winding_number(const ClosedPolyline& curve, const Point& p) {
  curve.validate();
  const auto& pts = curve.points;
  const std::size_t m = pts.size();
  for (std::size_t i = 0; i < m; ++i) {
    if (point_on_segment(p, pts[i], pts[(i + 1) % m])) {
      throw Error(ErrorCode::PointOnCurve, "winding number undefined on the curve");
    }
  }

  // Pick a ray direction (1, q) whose positive half-line misses every
  // polyline vertex; only finitely many directions can fail.
  for (long q = 0;; ++q) {
    Rational dx(1), dy(q);
    bool clean = true;
    for (const Point& v : pts) {
      Rational vx = v.x - p.x, vy = v.y - p.y;
      if (cross2(dx, dy, vx, vy) == 0 && dx * vx + dy * vy > 0) { clean = false; break; }
    }
    if (!clean) continue;

    long w = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const Point& a = pts[i];
      const Point& b = pts[(i + 1) % m];
      Rational sa = cross2(dx, dy, a.x - p.x, a.y - p.y);
      Rational sb = cross2(dx, dy, b.x - p.x, b.y - p.y);
      // A zero sign means that endpoint sits on the ray's line strictly
      // behind p (ahead is excluded by the direction choice): skip.
      if (sa == 0 || sb == 0) continue;
      if (sa.sign() == sb.sign()) continue;
      Rational t = sa / (sa - sb);
      Rational qx = a.x + t * (b.x - a.x) - p.x;
      Rational qy = a.y + t * (b.y - a.y) - p.y;
      if (dx * qx + dy * qy > 0) w += (sa < 0) ? 1 : -1;
    }
    return static_cast<int>(w);
  }
}

std::vector<int> winding_vector(const ClosedPolyline& curve, std::span<const Point> punctures) {
  std::vector<int> out;
  out.reserve(punctures.size());
  for (const Point& p : punctures) out.push_back(winding_number(curve, p));
  return out;
}

long self_intersections(const ClosedPolyline& curve) {
  curve.validate();
  const auto& pts = curve.points;
  const std::size_t m = pts.size();

  // Adjacent segments may only meet at their shared joint; a collinear
  // fold-back would overlap.
  for (std::size_t i = 0; i < m; ++i) {
    const Point& a = pts[i];
    const Point& b = pts[(i + 1) % m];
    const Point& c = pts[(i + 2) % m];
    if (orientation(a, b, c) == 0) {
      Rational dot = (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y);
      if (dot < 0) throw Error(ErrorCode::DegenerateGeometry, "polyline folds back on itself");
    }
  }

  std::vector<Point> hits;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == m - 1);
      if (adjacent) continue;
      auto inter = intersect_segments(pts[i], pts[(i + 1) % m], pts[j], pts[(j + 1) % m]);
      if (inter.kind == SegmentIntersection::Kind::None) continue;
      if (inter.kind == SegmentIntersection::Kind::Overlap) {
        throw Error(ErrorCode::DegenerateGeometry, "overlapping polyline segments");
      }
      const Point& p = inter.point;
      if (p == pts[i] || p == pts[(i + 1) % m] || p == pts[j] || p == pts[(j + 1) % m]) {
        throw Error(ErrorCode::DegenerateGeometry, "self-intersection at a segment endpoint");
      }
      hits.push_back(p);
    }
  }
  for (std::size_t i = 0; i < hits.size(); ++i) {
    for (std::size_t j = i + 1; j < hits.size(); ++j) {
      if (hits[i] == hits[j]) {
        throw Error(ErrorCode::DegenerateGeometry, "three segments through one point");
      }
    }
  }
  return static_cast<long>(hits.size());
}

const char* verdict_name(HomotopyVerdict v) {
  switch (v) {
    case HomotopyVerdict::Homotopic:    return "Homotopic";
    case HomotopyVerdict::NonHomotopic: return "NonHomotopic";
    case HomotopyVerdict::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

HomotopyVerdict loop_homotopy_check(const ClosedPolyline& a, const ClosedPolyline& b,
                                    std::span<const Point> punctures) {
  if (punctures.empty()) return HomotopyVerdict::Homotopic;
  std::vector<int> wa = winding_vector(a, punctures);
  std::vector<int> wb = winding_vector(b, punctures);
  if (punctures.size() == 1) {
    return (wa[0] == wb[0]) ? HomotopyVerdict::Homotopic : HomotopyVerdict::NonHomotopic;
  }
  return (wa == wb) ? HomotopyVerdict::Inconclusive : HomotopyVerdict::NonHomotopic;
}

}  // namespace hforge
