#include "hforge/drawing.hpp"

#include <algorithm>

#include "hforge/parallel.hpp"

namespace hforge {

MultigraphDrawing::MultigraphDrawing(std::vector<Rational> vertex_x,
                                     std::vector<MonotoneEdge> edges)
    : vertex_x_(std::move(vertex_x)), edges_(std::move(edges)) {
  validate();
}

void MultigraphDrawing::validate() const {
  const int n = vertex_count();
  if (n < 1) throw Error(ErrorCode::InvalidParams, "drawing needs at least one vertex");
  for (int i = 1; i < n; ++i) {
    if (!(vertex_x_[i - 1] < vertex_x_[i])) {
      throw Error(ErrorCode::InvalidParams, "vertex abscissae must increase strictly");
    }
  }
  for (const MonotoneEdge& e : edges_) {
    if (e.tail < 1 || e.head < 1 || e.tail > n || e.head > n || e.tail >= e.head) {
      throw Error(ErrorCode::InvalidParams, "edge endpoints out of order: " + e.label);
    }
    const Rational& lo = vertex_x_[static_cast<std::size_t>(e.tail) - 1];
    const Rational& hi = vertex_x_[static_cast<std::size_t>(e.head) - 1];
    if (e.domain_lo != lo || e.domain_hi != hi) {
      throw Error(ErrorCode::InvalidParams, "edge domain disagrees with endpoints: " + e.label);
    }
    if (e.curve.eval(lo) != 0 || e.curve.eval(hi) != 0) {
      throw Error(ErrorCode::InvalidParams, "edge curve must meet the axis at both endpoints: " + e.label);
    }
  }
}

long edge_cross_count(const MonotoneEdge& e, const MonotoneEdge& f) {
  Rational lo = std::max(e.domain_lo, f.domain_lo);
  Rational hi = std::min(e.domain_hi, f.domain_hi);
  if (!(lo < hi)) return 0;  // disjoint or touching spans cannot cross
  Polynomial diff = e.curve - f.curve;
  if (diff.is_zero()) {
    throw Error(ErrorCode::IdenticalCurves,
                "curves coincide on a shared span: " + e.label + " / " + f.label);
  }
  return count_roots_open(diff, lo, hi);
}

Sequence encode_edge(const MultigraphDrawing& d, std::size_t edge_index) {
  const MonotoneEdge& e = d.edges().at(edge_index);
  const auto& xs = d.vertex_xs();
  Sequence s(xs.size(), Symbol::Star);
  for (int v = 1; v <= d.vertex_count(); ++v) {
    if (v < e.tail || v > e.head) continue;
    if (v == e.tail || v == e.head) {
      s[static_cast<std::size_t>(v) - 1] = Symbol::Zero;
      continue;
    }
    int sg = e.curve.eval(xs[static_cast<std::size_t>(v) - 1]).sign();
    if (sg == 0) {
      throw Error(ErrorCode::EdgeThroughVertex,
                  "curve passes through vertex " + std::to_string(v) + ": " + e.label);
    }
    s[static_cast<std::size_t>(v) - 1] = (sg > 0) ? Symbol::Plus : Symbol::Minus;
  }
  return s;
}

std::vector<Sequence> encode(const MultigraphDrawing& d) {
  std::vector<Sequence> out;
  out.reserve(d.edge_count());
  for (std::size_t i = 0; i < d.edge_count(); ++i) out.push_back(encode_edge(d, i));
  return out;
}

NonHomotopyReport verify_nonhomotopic(const MultigraphDrawing& d) {
  std::vector<Sequence> codes = encode(d);
  NonHomotopyReport rep;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    for (std::size_t j = i + 1; j < codes.size(); ++j) {
      if (!edges_parallel(d.edges()[i], d.edges()[j])) continue;
      if (codes[i] == codes[j]) rep.violations.push_back({i, j});
    }
  }
  return rep;
}

bool edges_incident(const MonotoneEdge& e, const MonotoneEdge& f) {
  return e.tail == f.tail || e.tail == f.head || e.head == f.tail || e.head == f.head;
}

bool edges_parallel(const MonotoneEdge& e, const MonotoneEdge& f) {
  return e.tail == f.tail && e.head == f.head;
}

std::size_t CrossingReport::pair_index(std::size_t i, std::size_t j, std::size_t m) {
  // upper triangle (i < j) in row-major order
  return i * m - i * (i + 1) / 2 + (j - i - 1);
}

long CrossingReport::count(std::size_t i, std::size_t j) const {
  if (i == j || i >= edge_count || j >= edge_count) {
    throw Error(ErrorCode::InvalidParams, "bad pair index");
  }
  if (i > j) std::swap(i, j);
  return pair_counts[pair_index(i, j, edge_count)];
}

CrossingReport crossing_report(const MultigraphDrawing& d) {
  const auto& edges = d.edges();
  const std::size_t m = edges.size();
  CrossingReport rep;
  rep.edge_count = m;
  if (m < 2) return rep;

  // Serial prepass: identical-curve pairs surface here, deterministically at
  // the first offending pair, so the parallel loop below cannot throw.
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      Rational lo = std::max(edges[i].domain_lo, edges[j].domain_lo);
      Rational hi = std::min(edges[i].domain_hi, edges[j].domain_hi);
      if (lo < hi && (edges[i].curve - edges[j].curve).is_zero()) {
        throw Error(ErrorCode::IdenticalCurves,
                    "curves coincide on a shared span: " + edges[i].label + " / " + edges[j].label);
      }
    }
  }

  const std::size_t pairs = m * (m - 1) / 2;
  rep.pair_counts.assign(pairs, 0);
  std::vector<std::pair<std::uint32_t, std::uint32_t>> index(pairs);
  {
    std::size_t p = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = i + 1; j < m; ++j) {
        index[p++] = {static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
      }
    }
  }
  parallel_for(pairs, [&](std::size_t p) {
    rep.pair_counts[p] = edge_cross_count(edges[index[p].first], edges[index[p].second]);
  });

  for (std::size_t p = 0; p < pairs; ++p) {
    const MonotoneEdge& e = edges[index[p].first];
    const MonotoneEdge& f = edges[index[p].second];
    long c = rep.pair_counts[p];
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
  return rep;
}

}  // namespace hforge
