#include <doctest.h>

#include "hforge/construct.hpp"
#include "hforge/drawing.hpp"
#include "hforge/general_drawing.hpp"
#include "hforge/rational.hpp"

using namespace hforge;

namespace {

Integer expected_edge_count(int n, int k) {
  Integer total = 0;
  for (int l = 1; l <= k; ++l) total += binomial(n, l + 1);
  return total;
}

}  // namespace

TEST_CASE("axis drawing edge counts match the closed form") {
  CHECK(build_gnk(6, 2).edge_count() == 35);
  for (int n = 3; n <= 8; ++n)
    for (int k = 1; k < n && k <= 3; ++k) {
      CAPTURE(n);
      CAPTURE(k);
      CHECK(Integer(build_gnk(n, k).edge_count()) == expected_edge_count(n, k));
    }
  CHECK_THROWS_AS(build_gnk(3, 3), Error);
  CHECK_THROWS_AS(build_gnk(3, 0), Error);
}

TEST_CASE("edge labels enumerate the defining tuples") {
  MultigraphDrawing d = build_gnk(4, 2);
  std::vector<std::string> labels;
  for (const auto& e : d.edges()) labels.push_back(e.label);
  // l = 1 pairs first, then l = 2 triples, lexicographic within each block
  std::vector<std::string> expected = {"e_1_2", "e_1_3", "e_1_4", "e_2_3",   "e_2_4",
                                       "e_3_4", "e_1_2_3", "e_1_2_4", "e_1_3_4", "e_2_3_4"};
  CHECK(labels == expected);
}

TEST_CASE("span-capped drawings") {
  // t = n keeps everything
  MultigraphDrawing full = build_gnkt(6, 2, 6);
  CHECK(full.edge_count() == build_gnk(6, 2).edge_count());

  MultigraphDrawing d = build_gnkt(20, 1, 6);
  CHECK(d.edge_count() == 99);  // sum over spans 1..6 of (20 - span)
  for (const auto& e : d.edges()) CHECK(e.head - e.tail <= 6);

  // with n >= 2t every vertex keeps at least sum_l C(t, l) incident edges
  auto degree_check = [](const MultigraphDrawing& g, int n, int k, int t) {
    Integer floor_degree = 0;
    for (int l = 1; l <= k; ++l) floor_degree += binomial(t, l);
    std::vector<long> deg(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& e : g.edges()) {
      ++deg[static_cast<std::size_t>(e.tail)];
      ++deg[static_cast<std::size_t>(e.head)];
    }
    for (int v = 1; v <= n; ++v) {
      CAPTURE(v);
      CHECK(Integer(deg[static_cast<std::size_t>(v)]) >= floor_degree);
    }
  };
  degree_check(d, 20, 1, 6);
  degree_check(build_gnkt(9, 2, 4), 9, 2, 4);

  CHECK_THROWS_AS(build_gnkt(6, 2, 3), Error);  // t below 2k
  CHECK_THROWS_AS(build_gnkt(6, 2, 7), Error);  // t above n
}

TEST_CASE("span-capped drawings keep the crossing-class guarantees") {
  MultigraphDrawing d = build_gnkt(12, 2, 5);
  CrossingReport r = crossing_report(d);
  CHECK(*r.max_all <= 2);
  CHECK(*r.max_incident <= 1);
  CHECK(*r.max_parallel <= 0);
  CHECK(verify_nonhomotopic(d).ok());
}

TEST_CASE("crossing-free drawings with 4n-4 edges") {
  for (int n = 2; n <= 8; ++n) {
    CAPTURE(n);
    GeneralDrawing d = build_planar_tight(n);
    CHECK(d.vertex_count() == n);
    CHECK(Integer(d.edge_count()) == Integer(4 * n - 4));
    GeneralCrossingReport r = crossing_report(d);
    CHECK(r.total == 0);
    CHECK(r.total_self == 0);
    GeneralNonHomotopyReport nh = verify_nonhomotopic(d);
    CHECK(nh.ok());
    // every parallel pair carries a nonzero winding witness
    for (const auto& cert : nh.pairs) {
      CAPTURE(cert.e1);
      CAPTURE(cert.e2);
      CHECK(cert.certified);
    }
  }
  CHECK_THROWS_AS(build_planar_tight(1), Error);
}

TEST_CASE("spiral loop drawing") {
  GeneralDrawing d = build_spiral_drawing(6);
  CHECK(d.vertex_count() == 2);
  CHECK(d.edge_count() == 6);
  GeneralCrossingReport r = crossing_report(d);  // must be in general position
  // self-crossings per loop are exactly winding - 1
  for (int w = 1; w <= 6; ++w) CHECK(r.self_counts[static_cast<std::size_t>(w - 1)] == w - 1);
  // all loops share both endpoints, so all pairs are parallel
  CHECK(r.pairs_parallel == r.pairs_all);
  GeneralNonHomotopyReport nh = verify_nonhomotopic(d);
  CHECK(nh.ok());
  CHECK(nh.pairs.size() == 15);
  CHECK_THROWS_AS(build_spiral_drawing(0), Error);
  CHECK_THROWS_AS(build_spiral_drawing(65), Error);
}
