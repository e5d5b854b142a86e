#pragma once

#include <string>

#include "hforge/interchange.hpp"

namespace hforge {

// Deterministic SVG: curves sampled at exact rational parameters and
// printed with fixed-precision decimals, so the same drawing always
// renders to the same bytes. `samples` is the per-curve-segment sample
// count for polynomial edges, min 16.
std::string render_svg(const MultigraphDrawing& d, int samples = 64);
std::string render_svg(const GeneralDrawing& d, int samples = 64);
std::string render_svg(const DrawingVariant& d, int samples = 64);

}  // namespace hforge
