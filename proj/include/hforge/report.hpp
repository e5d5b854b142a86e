#pragma once

#include <string>

#include "hforge/bounds.hpp"
#include "hforge/interchange.hpp"

namespace hforge {

// Full check of a drawing: crossing counts, non-homotopy evidence, and
// edge-count bounds at the observed crossing level. The report is
// tab-separated key/value rows; the last row is always
// "summary<TAB>pass<TAB>true|false". Geometry defects in the input
// (identical curves, an edge through a vertex, degenerate contact) land in
// the report as failures instead of propagating.
struct VerificationResult {
  std::string report;
  bool pass = false;
};

VerificationResult run_verification(const DrawingVariant& d);

// Edge count and per-class crossing maxima, for construction runs.
std::string construct_summary(const DrawingVariant& d);

// Bound values at (n, k) as a TSV table with a header row. With `m`
// present the crossing-scale terms are included.
std::string bounds_table(int n, int k, const Integer* m);

// One-row TSV table for a family search outcome.
std::string maxfamily_summary(const FamilyResult& r);

}  // namespace hforge
