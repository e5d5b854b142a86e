#include "hforge/construct.hpp"

#include <array>

namespace hforge {

namespace {

std::string tuple_label(const std::vector<int>& a) {
  std::string s = "e";
  for (int v : a) s += "_" + std::to_string(v);
  return s;
}

MonotoneEdge tuple_edge(const std::vector<int>& a, int k) {
  const int l = static_cast<int>(a.size()) - 1;
  Polynomial p = Polynomial::constant(Rational(1));
  for (int i = 0; i < k - l; ++i) p = p * Polynomial::linear_root(Rational(0));
  p = p * Polynomial::linear_root(Rational(a.front()));
  for (int i = 1; i < l; ++i) {
    p = p * Polynomial::linear_root(Rational(2 * a[static_cast<std::size_t>(i)] + 1) / 2);
  }
  p = p * Polynomial::linear_root(Rational(a.back()));

  MonotoneEdge e;
  e.tail = a.front();
  e.head = a.back();
  e.curve = std::move(p);
  e.domain_lo = Rational(a.front());
  e.domain_hi = Rational(a.back());
  e.label = tuple_label(a);
  return e;
}

// All increasing (l+1)-tuples in [1, n] with span <= t, lexicographically.
void emit_tuples(int n, int l, int t, std::vector<int>& acc, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(acc.size()) == l + 1) {
    out.push_back(acc);
    return;
  }
  int lo = acc.empty() ? 1 : acc.back() + 1;
  for (int v = lo; v <= n; ++v) {
    if (!acc.empty() && v - acc.front() > t) break;
    acc.push_back(v);
    emit_tuples(n, l, t, acc, out);
    acc.pop_back();
  }
}

MultigraphDrawing build_family(int n, int k, int t) {
  std::vector<Rational> xs;
  xs.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) xs.emplace_back(i);

  std::vector<MonotoneEdge> edges;
  for (int l = 1; l <= k; ++l) {
    std::vector<std::vector<int>> tuples;
    std::vector<int> acc;
    emit_tuples(n, l, t, acc, tuples);
    for (const auto& a : tuples) edges.push_back(tuple_edge(a, k));
  }
  return MultigraphDrawing(std::move(xs), std::move(edges));
}

Point lerp2(const Point& a, const Point& b, const Point& c,
            const Rational& wb, const Rational& wc) {
  return {a.x + wb * (b.x - a.x) + wc * (c.x - a.x),
          a.y + wb * (b.y - a.y) + wc * (c.y - a.y)};
}

// Small loop hugging corner a of the triangle (a, b, c), strictly inside it.
GeneralEdge corner_loop(int vertex, const Point& a, const Point& b, const Point& c,
                        const std::string& label) {
  GeneralEdge e;
  e.tail = e.head = vertex;
  e.kind = GeneralEdgeKind::Polyline;
  Rational big(6, 64), small(1, 64);
  e.points = {a, lerp2(a, b, c, big, small), lerp2(a, b, c, small, big), a};
  e.label = label;
  return e;
}

GeneralEdge straight_edge(int tail, int head, const Point& p, const Point& q,
                          const std::string& label) {
  GeneralEdge e;
  e.tail = tail;
  e.head = head;
  e.kind = GeneralEdgeKind::Polyline;
  e.points = {p, q};
  e.label = label;
  return e;
}

}  // namespace

MultigraphDrawing build_gnk(int n, int k) {
  if (k < 1 || n <= k) throw Error(ErrorCode::InvalidParams, "need 1 <= k < n");
  return build_family(n, k, n);
}

MultigraphDrawing build_gnkt(int n, int k, int t) {
  if (k < 1 || n <= k) throw Error(ErrorCode::InvalidParams, "need 1 <= k < n");
  if (t < 2 * k || t > n) throw Error(ErrorCode::InvalidParams, "need 2k <= t <= n");
  return build_family(n, k, t);
}

GeneralDrawing build_planar_tight(int n) {
  if (n < 2) throw Error(ErrorCode::InvalidParams, "need n >= 2");

  std::vector<Point> verts;
  std::vector<GeneralEdge> edges;

  if (n == 2) {
    Point u{Rational(0), Rational(0)}, v{Rational(4), Rational(0)};
    verts = {u, v};
    edges.push_back(straight_edge(1, 2, u, v, "t_1_2"));
    // big loop at v1 around everything
    GeneralEdge big;
    big.tail = big.head = 1;
    big.points = {u, {Rational(-2), Rational(-1)}, {Rational(6), Rational(-1)},
                  {Rational(6), Rational(2)}, {Rational(-2), Rational(2)}, u};
    big.label = "L_1";
    edges.push_back(std::move(big));
    GeneralEdge lu;
    lu.tail = lu.head = 1;
    lu.points = {u, {Rational(-1, 8), Rational(1, 2)}, {Rational(1, 8), Rational(1, 2)}, u};
    lu.label = "l_1";
    edges.push_back(std::move(lu));
    GeneralEdge lv;
    lv.tail = lv.head = 2;
    lv.points = {v, {Rational(31, 8), Rational(1, 2)}, {Rational(33, 8), Rational(1, 2)}, v};
    lv.label = "l_2";
    edges.push_back(std::move(lv));
    return GeneralDrawing(std::move(verts), std::move(edges));
  }

  // Vertices: outer triangle plus stacked centroids g_i = (2, 3^(1-i)).
  verts.push_back({Rational(0), Rational(0)});  // v1 = u
  verts.push_back({Rational(4), Rational(0)});  // v2 = v
  verts.push_back({Rational(2), Rational(3)});  // v3 = w
  Rational y(1);
  for (int m = 4; m <= n; ++m) {
    verts.push_back({Rational(2), y});
    y /= 3;
  }
  auto pos = [&](int v) -> const Point& { return verts[static_cast<std::size_t>(v) - 1]; };

  auto add_straight = [&](int a, int b) {
    edges.push_back(straight_edge(a, b, pos(a), pos(b),
                                  "t_" + std::to_string(a) + "_" + std::to_string(b)));
  };
  add_straight(1, 2);
  add_straight(1, 3);
  add_straight(2, 3);
  std::vector<std::array<int, 3>> faces;
  std::array<int, 3> current = {1, 2, 3};
  for (int m = 4; m <= n; ++m) {
    int c = current[2];
    add_straight(1, m);
    add_straight(2, m);
    add_straight(std::min(c, m), std::max(c, m));
    faces.push_back({1, m, c});
    faces.push_back({m, 2, c});
    current = {1, 2, m};
  }
  faces.push_back(current);

  // doubled outer edge: arc over the top from v1 to v2
  GeneralEdge arc;
  arc.tail = 1;
  arc.head = 2;
  arc.points = {pos(1), {Rational(-1), Rational(4)}, {Rational(5), Rational(4)}, pos(2)};
  arc.label = "p_1_2";
  edges.push_back(std::move(arc));

  // big loop at v1 around the whole triangulation and the arc
  GeneralEdge big;
  big.tail = big.head = 1;
  big.points = {pos(1), {Rational(-2), Rational(-1)}, {Rational(6), Rational(-1)},
                {Rational(6), Rational(5)}, {Rational(-2), Rational(5)}, pos(1)};
  big.label = "L_1";
  edges.push_back(std::move(big));

  // one loop per vertex, in the first listed face meeting it
  for (int v = 1; v <= n; ++v) {
    for (const auto& f : faces) {
      int idx = -1;
      for (int s = 0; s < 3; ++s) {
        if (f[static_cast<std::size_t>(s)] == v) idx = s;
      }
      if (idx < 0) continue;
      const Point& a = pos(f[static_cast<std::size_t>(idx)]);
      const Point& b = pos(f[static_cast<std::size_t>((idx + 1) % 3)]);
      const Point& c = pos(f[static_cast<std::size_t>((idx + 2) % 3)]);
      edges.push_back(corner_loop(v, a, b, c, "l_" + std::to_string(v)));
      break;
    }
  }

  return GeneralDrawing(std::move(verts), std::move(edges));
}

namespace {

std::vector<Point> spiral_path(int w, int w_max, const Point& center) {
  // ring radii i + d with a per-loop offset d; distinct offsets keep the
  // loops in general position with each other
  Rational d(w, w_max + 1);
  auto at = [&](const Rational& x, const Rational& y) -> Point {
    return {center.x + x, center.y + y};
  };
  auto rho = [&](int i) { return Rational(i) + d; };

  std::vector<Point> pts;
  pts.push_back(at(Rational(1), Rational(0)));     // base
  pts.push_back(at(rho(w), -rho(w)));              // entry leg; crosses rings 1..w-1
  for (int i = w; i >= 1; --i) {
    pts.push_back(at(rho(i), rho(i)));             // up the right side
    pts.push_back(at(-rho(i), rho(i)));            // across the top
    pts.push_back(at(-rho(i), -rho(i)));           // down the left side
    pts.push_back(at(rho(i - 1), -rho(i)));        // along the bottom, stop short
  }
  pts.push_back(at(Rational(1), Rational(0)));     // closing leg, crosses nothing
  return pts;
}

}  // namespace

std::vector<ClosedPolyline> build_spiral_loops(int w_max, const Point& center,
                                               std::span<const Point> punctures) {
  if (w_max < 1 || w_max > 64) throw Error(ErrorCode::InvalidParams, "need 1 <= w_max <= 64");
  std::vector<ClosedPolyline> loops;
  loops.reserve(static_cast<std::size_t>(w_max));
  for (int w = 1; w <= w_max; ++w) {
    std::vector<Point> path = spiral_path(w, w_max, center);
    ClosedPolyline c;
    c.points.assign(path.begin(), path.end() - 1);
    c.validate();
    loops.push_back(std::move(c));
  }
  for (const Point& p : punctures) {
    for (const ClosedPolyline& c : loops) {
      for (std::size_t i = 0; i < c.points.size(); ++i) {
        if (point_on_segment(p, c.points[i], c.points[(i + 1) % c.points.size()])) {
          throw Error(ErrorCode::GeometryConflict, "puncture lies on a loop");
        }
      }
    }
  }
  return loops;
}

GeneralDrawing build_spiral_drawing(int w_max) {
  if (w_max < 1 || w_max > 64) throw Error(ErrorCode::InvalidParams, "need 1 <= w_max <= 64");
  Point center{Rational(0), Rational(0)};
  std::vector<Point> verts = {center, {Rational(1), Rational(0)}};
  std::vector<GeneralEdge> edges;
  for (int w = 1; w <= w_max; ++w) {
    GeneralEdge e;
    e.tail = e.head = 2;
    e.kind = GeneralEdgeKind::Polyline;
    e.points = spiral_path(w, w_max, center);
    e.label = "spiral_" + std::to_string(w);
    edges.push_back(std::move(e));
  }
  return GeneralDrawing(std::move(verts), std::move(edges));
}

}  // namespace hforge
