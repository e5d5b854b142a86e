#pragma once

#include <string>
#include <vector>

#include "hforge/drawing.hpp"
#include "hforge/rational.hpp"

namespace hforge {

enum class BoundKind {
  Thm1,             // 6^(13 n (k+1))
  Thm2a,            // 2 C(2n, k+1)
  Thm2b,            // n C(2n, k+1)
  Thm2c,            // n (n-1) C(2n, k+1)
  Prop24,           // 4n - 4
  CrossLB_all,      // (m^(2k+1) / n^(k+1))^(1/k)
  CrossLB_incident, // same with k+1 in place of k
  CrossLB_parallel, // same with k+2 in place of k
};

const char* bound_kind_name(BoundKind kind);

// Exact value of an edge-count bound. k is ignored for Prop24.
Integer edge_bound(BoundKind kind, int n, int k);  // InvalidParams

// Crossing-count scale term m^(2+1/r)/n^(1+1/r) where r is k, k+1 or k+2
// depending on the kind. Exact when the underlying ratio is a perfect r-th
// power; otherwise evaluated to 50 significant digits (scientific text,
// digits recorded).
struct ScaleValue {
  bool exact = false;
  Rational value;      // meaningful when exact
  std::string text;    // canonical rational when exact, else the decimal
  int significant_digits = 0;  // 0 when exact
};

ScaleValue crossing_lb_scale(BoundKind kind, const Integer& m, int n, int k);  // InvalidParams

// Verifies m^(2k+1) == n^(k+1) (n t^(2k+1))^k at m = n t^k with exact
// integers: the scale term at that m collapses to n t^(2k+1).
bool scale_identity_holds(int n, int t, int k);

struct BoundCheckRow {
  BoundKind kind = BoundKind::Thm2a;
  int n = 0;
  int k = 0;  // the k the bound was evaluated at
  Integer bound;
  Integer observed;
  bool ok = false;
};

struct ConstructionBoundReport {
  std::vector<BoundCheckRow> rows;
  bool all_ok = true;
  // total crossings / CrossLB_all scale at m = |E|, when m >= 4n and
  // k >= 1 so the scale term applies; recorded for trend tables.
  std::string crossing_ratio_text;
};

ConstructionBoundReport check_construction_against_bounds(const MultigraphDrawing& d, int k,
                                                          const CrossingReport& crossings);

}  // namespace hforge
