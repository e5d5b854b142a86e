#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hforge/drawing.hpp"
#include "hforge/geometry.hpp"
#include "hforge/winding.hpp"

namespace hforge {

enum class GeneralEdgeKind { Polyline, Polynomial };

// Edge of a drawing with vertices anywhere in the plane. Polyline edges
// carry their full path, including both endpoint vertex positions; loops
// (tail == head) must be polylines. Polynomial edges are x-monotone curve
// graphs like the axis drawings, with endpoint heights matching the
// vertices.
struct GeneralEdge {
  int tail = 0;  // 1-based
  int head = 0;
  GeneralEdgeKind kind = GeneralEdgeKind::Polyline;
  std::vector<Point> points;  // polyline kind
  Polynomial curve;           // polynomial kind
  Rational domain_lo;
  Rational domain_hi;
  std::string label;

  bool is_loop() const { return tail == head; }
};

class GeneralDrawing {
 public:
  GeneralDrawing() = default;
  GeneralDrawing(std::vector<Point> vertices, std::vector<GeneralEdge> edges);

  const std::vector<Point>& vertices() const { return vertices_; }
  const std::vector<GeneralEdge>& edges() const { return edges_; }
  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  std::size_t edge_count() const { return edges_.size(); }

 private:
  void validate() const;

  std::vector<Point> vertices_;
  std::vector<GeneralEdge> edges_;
};

bool edges_incident(const GeneralEdge& e, const GeneralEdge& f);
bool edges_parallel(const GeneralEdge& e, const GeneralEdge& f);  // equal endpoint pairs, unordered

// Pairwise crossings (meeting points away from shared endpoint vertices,
// counted with traversal multiplicity) plus per-edge self-intersections.
// Inputs must be in general position; overlapping or joint-touching
// configurations throw DegenerateGeometry. Mixed polyline/polynomial pairs
// are not supported (the constructions never produce them) and throw
// InvalidParams.
struct GeneralCrossingReport {
  std::size_t edge_count = 0;
  std::vector<long> pair_counts;  // flattened upper triangle
  std::vector<long> self_counts;  // per edge
  unsigned long long total = 0;
  unsigned long long total_self = 0;
  std::size_t pairs_all = 0;
  std::size_t pairs_incident = 0;
  std::size_t pairs_parallel = 0;
  std::optional<long> max_all;
  std::optional<long> max_incident;
  std::optional<long> max_parallel;

  long count(std::size_t i, std::size_t j) const;
};

GeneralCrossingReport crossing_report(const GeneralDrawing& d);

// The closed curve of a loop edge.
ClosedPolyline loop_polyline(const GeneralEdge& e);

// Closed curve formed by edge i followed by edge j reversed; pre: the
// edges are parallel polylines.
ClosedPolyline edge_pair_loop(const GeneralDrawing& d, std::size_t i, std::size_t j);

// Homotopy evidence for the parallel edge pairs: winding numbers of the
// pair's closed curve around every vertex other than the shared endpoints.
// A nonzero entry certifies the pair as non-homotopic; pairs with an
// all-zero vector are reported as violations.
struct GeneralNonHomotopyReport {
  struct PairCertificate {
    std::size_t e1 = 0;
    std::size_t e2 = 0;
    std::vector<int> windings;  // per non-endpoint vertex, in vertex order
    bool certified = false;
  };
  std::vector<PairCertificate> pairs;
  std::vector<std::pair<std::size_t, std::size_t>> violations;
  bool ok() const { return violations.empty(); }
};

GeneralNonHomotopyReport verify_nonhomotopic(const GeneralDrawing& d);

}  // namespace hforge
