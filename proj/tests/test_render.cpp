#include <doctest.h>

#include "hforge/construct.hpp"
#include "hforge/render.hpp"

using namespace hforge;

namespace {

std::size_t count_of(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t at = text.find(needle); at != std::string::npos;
       at = text.find(needle, at + needle.size()))
    ++n;
  return n;
}

}  // namespace

TEST_CASE("SVG structure follows the drawing") {
  MultigraphDrawing g62 = build_gnk(6, 2);
  std::string svg = render_svg(g62);
  CHECK(count_of(svg, "<path ") == 35);
  CHECK(count_of(svg, "<circle ") == 6);
  CHECK(count_of(svg, "<text ") == 6);
  CHECK(svg.rfind("<svg ", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);

  // one edge, two dots
  MultigraphDrawing tiny = build_gnk(2, 1);
  std::string small = render_svg(tiny);
  CHECK(count_of(small, "<path ") == 1);
  CHECK(count_of(small, "<circle ") == 2);

  std::string plane = render_svg(GeneralDrawing(build_planar_tight(4)));
  CHECK(count_of(plane, "<path ") == 12);
  CHECK(count_of(plane, "<circle ") == 4);
}

TEST_CASE("rendering is deterministic and sampling is bounded below") {
  MultigraphDrawing d = build_gnk(5, 2);
  CHECK(render_svg(d) == render_svg(d));
  CHECK(render_svg(d, 16) == render_svg(d, 16));
  CHECK(render_svg(d, 16) != render_svg(d, 64));
  CHECK_THROWS_AS(render_svg(d, 15), Error);

  GeneralDrawing s = build_spiral_drawing(3);
  CHECK(render_svg(s) == render_svg(s));
}
