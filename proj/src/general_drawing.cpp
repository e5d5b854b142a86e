#include "hforge/general_drawing.hpp"

#include <algorithm>

namespace hforge {

GeneralDrawing::GeneralDrawing(std::vector<Point> vertices, std::vector<GeneralEdge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
  validate();
}

void GeneralDrawing::validate() const {
  const int n = vertex_count();
  if (n < 1) throw Error(ErrorCode::InvalidParams, "drawing needs at least one vertex");
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (vertices_[static_cast<std::size_t>(i)] == vertices_[static_cast<std::size_t>(j)]) {
        throw Error(ErrorCode::InvalidParams, "coincident vertices");
      }
    }
  }
  for (const GeneralEdge& e : edges_) {
    if (e.tail < 1 || e.head < 1 || e.tail > n || e.head > n) {
      throw Error(ErrorCode::InvalidParams, "edge endpoint out of range: " + e.label);
    }
    const Point& ptail = vertices_[static_cast<std::size_t>(e.tail) - 1];
    const Point& phead = vertices_[static_cast<std::size_t>(e.head) - 1];
    if (e.kind == GeneralEdgeKind::Polyline) {
      if (e.points.size() < 2) {
        throw Error(ErrorCode::InvalidParams, "polyline edge needs at least 2 points: " + e.label);
      }
      if (e.is_loop() && e.points.size() < 4) {
        throw Error(ErrorCode::InvalidParams, "loop edge needs at least 4 points: " + e.label);
      }
      if (e.points.front() != ptail || e.points.back() != phead) {
        throw Error(ErrorCode::InvalidParams, "polyline must start and end on its vertices: " + e.label);
      }
      for (std::size_t i = 0; i + 1 < e.points.size(); ++i) {
        if (e.points[i] == e.points[i + 1]) {
          throw Error(ErrorCode::InvalidParams, "zero-length polyline segment: " + e.label);
        }
      }
      // The path may touch vertices only at its own two ends.
      for (int v = 1; v <= n; ++v) {
        const Point& w = vertices_[static_cast<std::size_t>(v) - 1];
        for (std::size_t i = 0; i + 1 < e.points.size(); ++i) {
          if (!point_on_segment(w, e.points[i], e.points[i + 1])) continue;
          bool at_tail = (i == 0 && w == e.points.front() && v == e.tail);
          bool at_head = (i + 2 == e.points.size() && w == e.points.back() && v == e.head);
          if (!at_tail && !at_head) {
            throw Error(ErrorCode::InvalidParams,
                        "edge passes through vertex " + std::to_string(v) + ": " + e.label);
          }
        }
      }
    } else {
      if (e.is_loop()) throw Error(ErrorCode::InvalidParams, "polynomial loop edge: " + e.label);
      if (!(ptail.x < phead.x)) {
        throw Error(ErrorCode::InvalidParams, "polynomial edge needs increasing abscissae: " + e.label);
      }
      if (e.domain_lo != ptail.x || e.domain_hi != phead.x) {
        throw Error(ErrorCode::InvalidParams, "polynomial edge domain mismatch: " + e.label);
      }
      if (e.curve.eval(ptail.x) != ptail.y || e.curve.eval(phead.x) != phead.y) {
        throw Error(ErrorCode::InvalidParams, "polynomial edge misses its vertices: " + e.label);
      }
      for (int v = 1; v <= n; ++v) {
        if (v == e.tail || v == e.head) continue;
        const Point& w = vertices_[static_cast<std::size_t>(v) - 1];
        if (e.domain_lo < w.x && w.x < e.domain_hi && e.curve.eval(w.x) == w.y) {
          throw Error(ErrorCode::InvalidParams,
                      "edge passes through vertex " + std::to_string(v) + ": " + e.label);
        }
      }
    }
  }
}

bool edges_incident(const GeneralEdge& e, const GeneralEdge& f) {
  return e.tail == f.tail || e.tail == f.head || e.head == f.tail || e.head == f.head;
}

bool edges_parallel(const GeneralEdge& e, const GeneralEdge& f) {
  int elo = std::min(e.tail, e.head), ehi = std::max(e.tail, e.head);
  int flo = std::min(f.tail, f.head), fhi = std::max(f.tail, f.head);
  return elo == flo && ehi == fhi;
}

namespace {

// Crossings of two polyline paths. Each meeting point is attributed to the
// segment pair where it is not a terminal endpoint, so a point passed a and
// b times contributes a*b. Points in `excluded` (the endpoint vertex
// positions) never count.
long polyline_pair_crossings(const std::vector<Point>& A, const std::vector<Point>& B,
                             const std::vector<Point>& excluded, const std::string& who) {
  long hits = 0;
  for (std::size_t i = 0; i + 1 < A.size(); ++i) {
    for (std::size_t j = 0; j + 1 < B.size(); ++j) {
      auto inter = intersect_segments(A[i], A[i + 1], B[j], B[j + 1]);
      if (inter.kind == SegmentIntersection::Kind::None) continue;
      if (inter.kind == SegmentIntersection::Kind::Overlap) {
        throw Error(ErrorCode::DegenerateGeometry, "overlapping edge segments: " + who);
      }
      const Point& p = inter.point;
      if (std::find(excluded.begin(), excluded.end(), p) != excluded.end()) continue;
      if (p == A[i + 1] || p == B[j + 1]) continue;  // counted at the follow-on segment
      ++hits;
    }
  }
  return hits;
}

long polynomial_pair_crossings(const GeneralEdge& e, const GeneralEdge& f) {
  Rational lo = std::max(e.domain_lo, f.domain_lo);
  Rational hi = std::min(e.domain_hi, f.domain_hi);
  if (!(lo < hi)) return 0;
  Polynomial diff = e.curve - f.curve;
  if (diff.is_zero()) {
    throw Error(ErrorCode::IdenticalCurves,
                "curves coincide on a shared span: " + e.label + " / " + f.label);
  }
  return count_roots_open(diff, lo, hi);
}

long open_polyline_self_intersections(const std::vector<Point>& pts, const std::string& who) {
  if (pts.size() < 3) return 0;
  const std::size_t segs = pts.size() - 1;
  for (std::size_t i = 0; i + 2 < pts.size(); ++i) {
    if (orientation(pts[i], pts[i + 1], pts[i + 2]) == 0) {
      Rational dot = (pts[i + 1].x - pts[i].x) * (pts[i + 2].x - pts[i + 1].x) +
                     (pts[i + 1].y - pts[i].y) * (pts[i + 2].y - pts[i + 1].y);
      if (dot < 0) throw Error(ErrorCode::DegenerateGeometry, "edge folds back on itself: " + who);
    }
  }
  std::vector<Point> found;
  for (std::size_t i = 0; i < segs; ++i) {
    for (std::size_t j = i + 2; j < segs; ++j) {
      auto inter = intersect_segments(pts[i], pts[i + 1], pts[j], pts[j + 1]);
      if (inter.kind == SegmentIntersection::Kind::None) continue;
      if (inter.kind == SegmentIntersection::Kind::Overlap) {
        throw Error(ErrorCode::DegenerateGeometry, "overlapping edge segments: " + who);
      }
      const Point& p = inter.point;
      if (p == pts[i] || p == pts[i + 1] || p == pts[j] || p == pts[j + 1]) {
        throw Error(ErrorCode::DegenerateGeometry, "self-touch at a segment endpoint: " + who);
      }
      found.push_back(p);
    }
  }
  for (std::size_t i = 0; i < found.size(); ++i) {
    for (std::size_t j = i + 1; j < found.size(); ++j) {
      if (found[i] == found[j]) {
        throw Error(ErrorCode::DegenerateGeometry, "three segments through one point: " + who);
      }
    }
  }
  return static_cast<long>(found.size());
}

}  // namespace

long GeneralCrossingReport::count(std::size_t i, std::size_t j) const {
  if (i == j || i >= edge_count || j >= edge_count) {
    throw Error(ErrorCode::InvalidParams, "bad pair index");
  }
  if (i > j) std::swap(i, j);
  return pair_counts[i * edge_count - i * (i + 1) / 2 + (j - i - 1)];
}

GeneralCrossingReport crossing_report(const GeneralDrawing& d) {
  const auto& edges = d.edges();
  const auto& verts = d.vertices();
  const std::size_t m = edges.size();
  GeneralCrossingReport rep;
  rep.edge_count = m;
  rep.self_counts.assign(m, 0);

  for (std::size_t i = 0; i < m; ++i) {
    const GeneralEdge& e = edges[i];
    if (e.kind == GeneralEdgeKind::Polynomial) {
      rep.self_counts[i] = 0;  // function graphs cannot revisit a point
    } else if (e.is_loop()) {
      rep.self_counts[i] = self_intersections(loop_polyline(e));
    } else {
      rep.self_counts[i] = open_polyline_self_intersections(e.points, e.label);
    }
    rep.total_self += static_cast<unsigned long long>(rep.self_counts[i]);
  }

  if (m >= 2) rep.pair_counts.reserve(m * (m - 1) / 2);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const GeneralEdge& e = edges[i];
      const GeneralEdge& f = edges[j];
      long c = 0;
      if (e.kind == GeneralEdgeKind::Polynomial && f.kind == GeneralEdgeKind::Polynomial) {
        c = polynomial_pair_crossings(e, f);
      } else if (e.kind == GeneralEdgeKind::Polyline && f.kind == GeneralEdgeKind::Polyline) {
        std::vector<Point> excluded = {
            verts[static_cast<std::size_t>(e.tail) - 1], verts[static_cast<std::size_t>(e.head) - 1],
            verts[static_cast<std::size_t>(f.tail) - 1], verts[static_cast<std::size_t>(f.head) - 1]};
        c = polyline_pair_crossings(e.points, f.points, excluded, e.label + " / " + f.label);
      } else {
        throw Error(ErrorCode::InvalidParams,
                    "mixed polyline/polynomial pair unsupported: " + e.label + " / " + f.label);
      }
      rep.pair_counts.push_back(c);
      rep.total += static_cast<unsigned long long>(c);
      ++rep.pairs_all;
      if (!rep.max_all || c > *rep.max_all) rep.max_all = c;
      if (edges_incident(e, f)) {
        ++rep.pairs_incident;
        if (!rep.max_incident || c > *rep.max_incident) rep.max_incident = c;
        if (edges_parallel(e, f)) {
          ++rep.pairs_parallel;
          if (!rep.max_parallel || c > *rep.max_parallel) rep.max_parallel = c;
        }
      }
    }
  }
  return rep;
}

ClosedPolyline loop_polyline(const GeneralEdge& e) {
  if (!e.is_loop() || e.kind != GeneralEdgeKind::Polyline) {
    throw Error(ErrorCode::InvalidParams, "not a polyline loop: " + e.label);
  }
  ClosedPolyline c;
  c.points.assign(e.points.begin(), e.points.end() - 1);  // final point repeats the base
  c.validate();
  return c;
}

ClosedPolyline edge_pair_loop(const GeneralDrawing& d, std::size_t i, std::size_t j) {
  const GeneralEdge& e = d.edges().at(i);
  const GeneralEdge& f = d.edges().at(j);
  if (e.kind != GeneralEdgeKind::Polyline || f.kind != GeneralEdgeKind::Polyline) {
    throw Error(ErrorCode::InvalidParams, "pair loop needs polyline edges");
  }
  if (!edges_parallel(e, f)) {
    throw Error(ErrorCode::InvalidParams, "pair loop needs parallel edges");
  }
  std::vector<Point> fpts = f.points;
  if (!e.is_loop() && f.tail != e.tail) std::reverse(fpts.begin(), fpts.end());

  ClosedPolyline c;
  if (e.is_loop()) {
    c.points.assign(e.points.begin(), e.points.end() - 1);
    std::vector<Point> rev(fpts.rbegin(), fpts.rend());
    c.points.insert(c.points.end(), rev.begin(), rev.end() - 1);
  } else {
    // forward along e, back along f; drop the repeated endpoint vertices
    c.points = e.points;
    std::vector<Point> rev(fpts.rbegin(), fpts.rend());
    if (rev.size() > 2) c.points.insert(c.points.end(), rev.begin() + 1, rev.end() - 1);
  }
  c.validate();
  return c;
}

GeneralNonHomotopyReport verify_nonhomotopic(const GeneralDrawing& d) {
  GeneralNonHomotopyReport rep;
  const auto& edges = d.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (!edges_parallel(edges[i], edges[j])) continue;
      ClosedPolyline loop = edge_pair_loop(d, i, j);
      GeneralNonHomotopyReport::PairCertificate cert;
      cert.e1 = i;
      cert.e2 = j;
      for (int v = 1; v <= d.vertex_count(); ++v) {
        if (v == edges[i].tail || v == edges[i].head) continue;
        int w = winding_number(loop, d.vertices()[static_cast<std::size_t>(v) - 1]);
        cert.windings.push_back(w);
        if (w != 0) cert.certified = true;
      }
      if (!cert.certified) rep.violations.push_back({i, j});
      rep.pairs.push_back(std::move(cert));
    }
  }
  return rep;
}

}  // namespace hforge
