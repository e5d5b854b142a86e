#pragma once

#include <span>

#include "hforge/drawing.hpp"
#include "hforge/general_drawing.hpp"

namespace hforge {

// Axis drawing on n vertices with one edge per tuple 1 <= a_0 < ... < a_l <= n,
// 1 <= l <= k: the monic curve x^(k-l) (x-a_0) (x-a_1-1/2) ... (x-a_{l-1}-1/2)
// (x-a_l) over [a_0, a_l]. Pre: 1 <= k < n.
MultigraphDrawing build_gnk(int n, int k);

// The sub-drawing of build_gnk(n, k) keeping edges of span a_l - a_0 <= t.
// Pre: 1 <= k < n and 2k <= t <= n.
MultigraphDrawing build_gnkt(int n, int k, int t);

// Plane drawing with 4n-4 pairwise non-homotopic edges and no crossings:
// a stacked triangulation with outer triangle (v1, v2, v3), one doubled
// outer edge, one loop per vertex inside an incident face, and one large
// loop at v1 around everything. Pre: n >= 2.
GeneralDrawing build_planar_tight(int n);

// Loops L_1 .. L_wmax with a common base point at center + (1, 0); L_w winds
// w times around the center and self-crosses exactly w-1 times. Throws
// GeometryConflict if a supplied puncture lies on one of the loops.
std::vector<ClosedPolyline> build_spiral_loops(int w_max, const Point& center,
                                               std::span<const Point> punctures);

// The same loops packaged as a drawing: vertex 1 the center, vertex 2 the
// base, one loop edge per winding count.
GeneralDrawing build_spiral_drawing(int w_max);

}  // namespace hforge
