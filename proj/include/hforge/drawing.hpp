#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hforge/polynomial.hpp"
#include "hforge/sequences.hpp"

namespace hforge {

// x-monotone edge: the graph of `curve` over [domain_lo, domain_hi], whose
// ends sit on the axis at the tail and head vertices.
struct MonotoneEdge {
  int tail = 0;  // 1-based vertex indices, tail < head
  int head = 0;
  Polynomial curve;
  Rational domain_lo;
  Rational domain_hi;
  std::string label;
};

// Vertices on the x-axis at strictly increasing abscissae; each edge spans
// the axis interval between its endpoints.
class MultigraphDrawing {
 public:
  MultigraphDrawing() = default;
  MultigraphDrawing(std::vector<Rational> vertex_x, std::vector<MonotoneEdge> edges);

  const std::vector<Rational>& vertex_xs() const { return vertex_x_; }
  const std::vector<MonotoneEdge>& edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(vertex_x_.size()); }
  std::size_t edge_count() const { return edges_.size(); }

 private:
  void validate() const;

  std::vector<Rational> vertex_x_;
  std::vector<MonotoneEdge> edges_;
};

// Crossings of two distinct monotone edges: distinct meeting points of the
// curves strictly inside the shared domain (shared endpoints never count).
// Throws IdenticalCurves when the curves agree on a nondegenerate shared
// domain.
long edge_cross_count(const MonotoneEdge& e, const MonotoneEdge& f);

// Sign pattern of an edge across all vertex abscissae: '*' outside the
// span, '0' at the two endpoints, '+'/'-' by the side of the axis at the
// interior vertices. Always a valid two-zero sequence. Throws
// EdgeThroughVertex when a curve meets the axis at an interior vertex.
Sequence encode_edge(const MultigraphDrawing& d, std::size_t edge_index);
std::vector<Sequence> encode(const MultigraphDrawing& d);

struct NonHomotopyReport {
  // Parallel edge pairs (by edge index) whose encodings coincide.
  std::vector<std::pair<std::size_t, std::size_t>> violations;
  bool ok() const { return violations.empty(); }
};

NonHomotopyReport verify_nonhomotopic(const MultigraphDrawing& d);

bool edges_incident(const MonotoneEdge& e, const MonotoneEdge& f);  // share >= 1 endpoint
bool edges_parallel(const MonotoneEdge& e, const MonotoneEdge& f);  // same endpoint pair

// Pairwise crossing counts with totals and per-class maxima. The incident
// class contains the parallel class. A maximum is absent when its class
// has no pairs.
struct CrossingReport {
  std::size_t edge_count = 0;
  std::vector<long> pair_counts;  // flattened upper triangle
  unsigned long long total = 0;
  std::size_t pairs_all = 0;
  std::size_t pairs_incident = 0;
  std::size_t pairs_parallel = 0;
  std::optional<long> max_all;
  std::optional<long> max_incident;
  std::optional<long> max_parallel;

  static std::size_t pair_index(std::size_t i, std::size_t j, std::size_t m);
  long count(std::size_t i, std::size_t j) const;
};

CrossingReport crossing_report(const MultigraphDrawing& d);

}  // namespace hforge
