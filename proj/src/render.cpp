#include "hforge/render.hpp"

#include <algorithm>
#include <sstream>

#include "hforge/errors.hpp"

namespace hforge {

namespace {

constexpr int kDecimals = 6;

struct Scene {
  std::vector<std::vector<Point>> paths;  // one per edge, drawing order
  std::vector<Point> dots;                // vertices
};

std::vector<Point> sample_curve(const Polynomial& p, const Rational& lo, const Rational& hi,
                               int samples) {
  std::vector<Point> pts;
  pts.reserve(static_cast<std::size_t>(samples) + 1);
  Rational width = hi - lo;
  for (int i = 0; i <= samples; ++i) {
    Rational x = lo + width * Rational(i, samples);
    pts.push_back(Point{x, p.eval(x)});
  }
  return pts;
}

Scene monotone_scene(const MultigraphDrawing& d, int samples) {
  Scene s;
  for (const MonotoneEdge& e : d.edges())
    s.paths.push_back(sample_curve(e.curve, e.domain_lo, e.domain_hi, samples));
  for (const Rational& x : d.vertex_xs()) s.dots.push_back(Point{x, Rational(0)});
  return s;
}

Scene general_scene(const GeneralDrawing& d, int samples) {
  Scene s;
  for (const GeneralEdge& e : d.edges()) {
    if (e.kind == GeneralEdgeKind::Polyline)
      s.paths.push_back(e.points);
    else
      s.paths.push_back(sample_curve(e.curve, e.domain_lo, e.domain_hi, samples));
  }
  s.dots = d.vertices();
  return s;
}

std::string render(const Scene& s) {
  Rational xmin, xmax, ymin, ymax;
  bool first = true;
  auto grow = [&](const Point& p) {
    if (first) {
      xmin = xmax = p.x;
      ymin = ymax = p.y;
      first = false;
      return;
    }
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  };
  for (const auto& path : s.paths)
    for (const Point& p : path) grow(p);
  for (const Point& p : s.dots) grow(p);
  if (first) throw Error(ErrorCode::InvalidParams, "render: empty drawing");

  Rational span_x = xmax - xmin;
  Rational span_y = ymax - ymin;
  Rational longest = std::max(span_x, span_y);
  if (longest.is_zero()) longest = 1;
  Rational pad = longest / 20;
  xmin -= pad;
  xmax += pad;
  ymin -= pad;
  ymax += pad;

  // SVG's y axis points down; reflect within the padded box.
  auto fx = [&](const Rational& x) { return decimal_string(x, kDecimals); };
  auto fy = [&](const Rational& y) { return decimal_string(ymax + ymin - y, kDecimals); };

  Rational stroke = longest / 200;
  Rational dot = longest / 100;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << fx(xmin) << " " << fy(ymax)
      << " " << decimal_string(xmax - xmin, kDecimals) << " "
      << decimal_string(ymax - ymin, kDecimals) << "\">\n";
  for (std::size_t i = 0; i < s.paths.size(); ++i) {
    const auto& path = s.paths[i];
    out << "  <path fill=\"none\" stroke=\"#2266aa\" stroke-width=\""
        << decimal_string(stroke, kDecimals) << "\" d=\"";
    for (std::size_t j = 0; j < path.size(); ++j)
      out << (j == 0 ? "M " : " L ") << fx(path[j].x) << " " << fy(path[j].y);
    out << "\"/>\n";
  }
  Rational font = longest / 25;
  for (std::size_t i = 0; i < s.dots.size(); ++i) {
    out << "  <circle cx=\"" << fx(s.dots[i].x) << "\" cy=\"" << fy(s.dots[i].y) << "\" r=\""
        << decimal_string(dot, kDecimals) << "\" fill=\"#222222\"/>\n";
    out << "  <text x=\"" << fx(s.dots[i].x + dot) << "\" y=\"" << fy(s.dots[i].y + dot)
        << "\" font-size=\"" << decimal_string(font, kDecimals) << "\" fill=\"#222222\">" << (i + 1)
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace

std::string render_svg(const MultigraphDrawing& d, int samples) {
  if (samples < 16) throw Error(ErrorCode::InvalidParams, "render: need samples >= 16");
  return render(monotone_scene(d, samples));
}

std::string render_svg(const GeneralDrawing& d, int samples) {
  if (samples < 16) throw Error(ErrorCode::InvalidParams, "render: need samples >= 16");
  return render(general_scene(d, samples));
}

std::string render_svg(const DrawingVariant& d, int samples) {
  return std::visit([&](const auto& x) { return render_svg(x, samples); }, d);
}

}  // namespace hforge
