#include "hforge/interchange.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hforge/errors.hpp"

namespace hforge {

namespace {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r) { return rational_string(r); }

Json point_json(const Point& p) { return Json::array({rational_string(p.x), rational_string(p.y)}); }

Json coeffs_json(const Polynomial& p) {
  Json arr = Json::array();
  for (const Rational& c : p.coefficients()) arr.push_back(rational_string(c));
  return arr;
}

Rational rational_field(const Json& j, const char* what) {
  if (!j.is_string()) throw Error(ErrorCode::ParseError, std::string(what) + ": expected a rational string");
  return parse_rational(j.get<std::string>());
}

Point point_field(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2)
    throw Error(ErrorCode::ParseError, std::string(what) + ": expected [\"x\", \"y\"]");
  return Point{rational_field(j[0], what), rational_field(j[1], what)};
}

Polynomial coeffs_field(const Json& j, const char* what) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + ": expected a coefficient array");
  std::vector<Rational> cs;
  cs.reserve(j.size());
  for (const auto& c : j) cs.push_back(rational_field(c, what));
  return Polynomial(std::move(cs));
}

int int_field(const Json& j, const char* what) {
  if (!j.is_number_integer())
    throw Error(ErrorCode::ParseError, std::string(what) + ": expected an integer");
  return j.get<int>();
}

const Json& member(const Json& j, const char* key) {
  auto it = j.find(key);
  if (it == j.end()) throw Error(ErrorCode::ParseError, std::string("missing field \"") + key + "\"");
  return *it;
}

std::string label_field(const Json& j) {
  auto it = j.find("label");
  if (it == j.end()) return {};
  if (!it->is_string()) throw Error(ErrorCode::ParseError, "label: expected a string");
  return it->get<std::string>();
}

MultigraphDrawing monotone_from_json(const Json& j) {
  const Json& jv = member(j, "vertices");
  if (!jv.is_array()) throw Error(ErrorCode::ParseError, "vertices: expected an array");
  std::vector<Rational> xs;
  xs.reserve(jv.size());
  for (const auto& x : jv) xs.push_back(rational_field(x, "vertices"));

  const Json& je = member(j, "edges");
  if (!je.is_array()) throw Error(ErrorCode::ParseError, "edges: expected an array");
  std::vector<MonotoneEdge> edges;
  edges.reserve(je.size());
  for (const auto& e : je) {
    if (!e.is_object()) throw Error(ErrorCode::ParseError, "edge: expected an object");
    MonotoneEdge me;
    me.tail = int_field(member(e, "tail"), "tail");
    me.head = int_field(member(e, "head"), "head");
    me.curve = coeffs_field(member(e, "coeffs"), "coeffs");
    me.label = label_field(e);
    if (me.tail < 1 || me.tail > static_cast<int>(xs.size()) || me.head < 1 ||
        me.head > static_cast<int>(xs.size()))
      throw Error(ErrorCode::ParseError, "edge: vertex index out of range");
    me.domain_lo = xs[me.tail - 1];
    me.domain_hi = xs[me.head - 1];
    edges.push_back(std::move(me));
  }
  return MultigraphDrawing(std::move(xs), std::move(edges));
}

GeneralDrawing general_from_json(const Json& j) {
  const Json& jv = member(j, "vertices");
  if (!jv.is_array()) throw Error(ErrorCode::ParseError, "vertices: expected an array");
  std::vector<Point> vs;
  vs.reserve(jv.size());
  for (const auto& p : jv) vs.push_back(point_field(p, "vertices"));

  const Json& je = member(j, "edges");
  if (!je.is_array()) throw Error(ErrorCode::ParseError, "edges: expected an array");
  std::vector<GeneralEdge> edges;
  edges.reserve(je.size());
  for (const auto& e : je) {
    if (!e.is_object()) throw Error(ErrorCode::ParseError, "edge: expected an object");
    GeneralEdge ge;
    ge.tail = int_field(member(e, "tail"), "tail");
    ge.head = int_field(member(e, "head"), "head");
    const Json& kind = member(e, "kind");
    if (!kind.is_string()) throw Error(ErrorCode::ParseError, "kind: expected a string");
    std::string ks = kind.get<std::string>();
    if (ks == "polyline") {
      ge.kind = GeneralEdgeKind::Polyline;
      const Json& jp = member(e, "points");
      if (!jp.is_array()) throw Error(ErrorCode::ParseError, "points: expected an array");
      for (const auto& p : jp) ge.points.push_back(point_field(p, "points"));
    } else if (ks == "polynomial") {
      ge.kind = GeneralEdgeKind::Polynomial;
      ge.curve = coeffs_field(member(e, "coeffs"), "coeffs");
      if (ge.tail >= 1 && ge.tail <= static_cast<int>(vs.size()) && ge.head >= 1 &&
          ge.head <= static_cast<int>(vs.size())) {
        ge.domain_lo = vs[ge.tail - 1].x;
        ge.domain_hi = vs[ge.head - 1].x;
      }
    } else {
      throw Error(ErrorCode::ParseError, "kind: expected \"polyline\" or \"polynomial\"");
    }
    ge.label = label_field(e);
    edges.push_back(std::move(ge));
  }
  return GeneralDrawing(std::move(vs), std::move(edges));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string drawing_json(const MultigraphDrawing& d) {
  Json j;
  j["format"] = "monotone";
  Json jv = Json::array();
  for (const Rational& x : d.vertex_xs()) jv.push_back(rational_json(x));
  j["vertices"] = std::move(jv);
  Json je = Json::array();
  for (const MonotoneEdge& e : d.edges()) {
    Json o;
    o["tail"] = e.tail;
    o["head"] = e.head;
    o["coeffs"] = coeffs_json(e.curve);
    if (!e.label.empty()) o["label"] = e.label;
    je.push_back(std::move(o));
  }
  j["edges"] = std::move(je);
  return dump(j);
}

std::string drawing_json(const GeneralDrawing& d) {
  Json j;
  j["format"] = "general";
  Json jv = Json::array();
  for (const Point& p : d.vertices()) jv.push_back(point_json(p));
  j["vertices"] = std::move(jv);
  Json je = Json::array();
  for (const GeneralEdge& e : d.edges()) {
    Json o;
    o["tail"] = e.tail;
    o["head"] = e.head;
    if (e.kind == GeneralEdgeKind::Polyline) {
      o["kind"] = "polyline";
      Json pts = Json::array();
      for (const Point& p : e.points) pts.push_back(point_json(p));
      o["points"] = std::move(pts);
    } else {
      o["kind"] = "polynomial";
      o["coeffs"] = coeffs_json(e.curve);
    }
    if (!e.label.empty()) o["label"] = e.label;
    je.push_back(std::move(o));
  }
  j["edges"] = std::move(je);
  return dump(j);
}

std::string drawing_json(const DrawingVariant& d) {
  return std::visit([](const auto& x) { return drawing_json(x); }, d);
}

DrawingVariant parse_drawing(const std::string& text) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded()) throw Error(ErrorCode::ParseError, "not valid JSON");
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "expected a JSON object");
  const Json& fmt = member(j, "format");
  if (!fmt.is_string()) throw Error(ErrorCode::ParseError, "format: expected a string");
  std::string f = fmt.get<std::string>();
  if (f == "monotone") return monotone_from_json(j);
  if (f == "general") return general_from_json(j);
  throw Error(ErrorCode::ParseError, "format: expected \"monotone\" or \"general\"");
}

DrawingVariant load_drawing(const std::string& path) { return parse_drawing(load_text(path)); }

void save_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoFailure, "cannot open for writing: " + path);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error(ErrorCode::IoFailure, "write failed: " + path);
}

std::string load_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoFailure, "cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::IoFailure, "read failed: " + path);
  return ss.str();
}

std::string sequences_text(const std::vector<Sequence>& seqs) {
  std::string out;
  for (const Sequence& s : seqs) {
    out += sequence_string(s);
    out += '\n';
  }
  return out;
}

std::vector<Sequence> parse_sequences(const std::string& text) {
  std::vector<Sequence> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    out.push_back(sequence_from_string(line));
  }
  return out;
}

}  // namespace hforge
