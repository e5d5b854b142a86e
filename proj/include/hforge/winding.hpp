#pragma once

#include <span>
#include <vector>

#include "hforge/geometry.hpp"

namespace hforge {

// Signed winding number of the cyclic curve around p (counterclockwise
// positive), by exact ray casting. Throws PointOnCurve when p lies on the
// curve.
int winding_number(const ClosedPolyline& curve, const Point& p);

std::vector<int> winding_vector(const ClosedPolyline& curve, std::span<const Point> punctures);

// Transverse self-crossings of the curve. Inputs must be in general
// position: no overlapping collinear segments, no crossing located at a
// segment endpoint, no point traversed three times. Anything else throws
// DegenerateGeometry; such inputs are rejected rather than resolved.
long self_intersections(const ClosedPolyline& curve);

enum class HomotopyVerdict { Homotopic, NonHomotopic, Inconclusive };

const char* verdict_name(HomotopyVerdict v);

// Compares loops in the plane punctured at the given points, by winding
// numbers. With one puncture equal winding decides both ways; with more
// punctures differing vectors certify NonHomotopic while equality stays
// Inconclusive (winding vectors do not separate all loop classes). With no
// punctures every loop contracts.
HomotopyVerdict loop_homotopy_check(const ClosedPolyline& a, const ClosedPolyline& b,
                                    std::span<const Point> punctures);

}  // namespace hforge
