#include <doctest.h>

#include "hforge/construct.hpp"
#include "hforge/interchange.hpp"
#include "hforge/report.hpp"

using namespace hforge;

TEST_CASE("axis drawing JSON round trip is byte exact") {
  MultigraphDrawing d = build_gnk(5, 2);
  std::string text = drawing_json(d);
  DrawingVariant back = parse_drawing(text);
  REQUIRE(std::holds_alternative<MultigraphDrawing>(back));
  CHECK(drawing_json(back) == text);
  const auto& md = std::get<MultigraphDrawing>(back);
  CHECK(md.edge_count() == d.edge_count());
  CHECK(md.vertex_xs() == d.vertex_xs());
  for (std::size_t i = 0; i < d.edge_count(); ++i) {
    CHECK(md.edges()[i].curve == d.edges()[i].curve);
    CHECK(md.edges()[i].label == d.edges()[i].label);
  }
}

TEST_CASE("plane drawing JSON round trip is byte exact") {
  for (int n : {2, 5}) {
    GeneralDrawing d = build_planar_tight(n);
    std::string text = drawing_json(d);
    DrawingVariant back = parse_drawing(text);
    REQUIRE(std::holds_alternative<GeneralDrawing>(back));
    CHECK(drawing_json(back) == text);
  }
  GeneralDrawing s = build_spiral_drawing(4);
  std::string text = drawing_json(s);
  CHECK(drawing_json(parse_drawing(text)) == text);
}

TEST_CASE("parser rejects malformed input") {
  CHECK_THROWS_AS(parse_drawing("not json"), Error);
  CHECK_THROWS_AS(parse_drawing("[1,2]"), Error);
  CHECK_THROWS_AS(parse_drawing("{}"), Error);
  CHECK_THROWS_AS(parse_drawing(R"({"format":"nope","vertices":[],"edges":[]})"), Error);
  // bad rational literal
  CHECK_THROWS_AS(parse_drawing(R"({"format":"monotone","vertices":["1","2.5"],"edges":[]})"),
                  Error);
  // vertex index out of range
  CHECK_THROWS_AS(parse_drawing(
                      R"({"format":"monotone","vertices":["1","2"],
                          "edges":[{"tail":1,"head":3,"coeffs":["0"]}]})"),
                  Error);
  // decoded drawings still go through full validation: curve not zero at ends
  CHECK_THROWS_AS(parse_drawing(
                      R"({"format":"monotone","vertices":["1","2"],
                          "edges":[{"tail":1,"head":2,"coeffs":["1"]}]})"),
                  Error);
  try {
    parse_drawing("{}");
    FAIL("expected a throw");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("sequence text round trip") {
  std::vector<Sequence> seqs = enumerate_sequences(3);
  std::string text = sequences_text(seqs);
  CHECK(parse_sequences(text) == seqs);
  CHECK(text.find("-0*") != std::string::npos);
  CHECK_THROWS_AS(parse_sequences("+0\nzz\n"), Error);
}

TEST_CASE("file round trip") {
  MultigraphDrawing d = build_gnk(4, 1);
  std::string text = drawing_json(d);
  std::string path = "interchange_roundtrip.json";
  save_text(path, text);
  CHECK(load_text(path) == text);
  DrawingVariant back = load_drawing(path);
  CHECK(drawing_json(back) == text);
  CHECK_THROWS_AS(load_text("does/not/exist.json"), Error);
  CHECK_THROWS_AS(save_text("no/such/dir/file.json", "x"), Error);
}

TEST_CASE("verification reports") {
  VerificationResult good = run_verification(DrawingVariant(build_gnk(6, 2)));
  CHECK(good.pass);
  CHECK(good.report.find("summary\tpass\ttrue") != std::string::npos);
  CHECK(good.report.find("meta\tedges\t35") != std::string::npos);
  CHECK(good.report.find("bound\tThm2a") != std::string::npos);
  CHECK(good.report.find("VIOLATED") == std::string::npos);

  VerificationResult planar = run_verification(DrawingVariant(build_planar_tight(8)));
  CHECK(planar.pass);
  CHECK(planar.report.find("meta\tedges\t28") != std::string::npos);
  CHECK(planar.report.find("bound\tProp24") != std::string::npos);
  CHECK(planar.report.find("certificate\t") != std::string::npos);

  // duplicated edge: report fails and names the defect instead of throwing
  MultigraphDrawing d = build_gnk(4, 1);
  auto edges = d.edges();
  edges.push_back(edges.front());
  edges.back().label = "dup";
  VerificationResult bad =
      run_verification(DrawingVariant(MultigraphDrawing(d.vertex_xs(), std::move(edges))));
  CHECK(!bad.pass);
  CHECK(bad.report.find("IdenticalCurves") != std::string::npos);
  CHECK(bad.report.find("summary\tpass\tfalse") != std::string::npos);
}

TEST_CASE("summary and table text") {
  std::string s = construct_summary(DrawingVariant(build_gnk(6, 2)));
  CHECK(s.find("edges\t35") != std::string::npos);
  CHECK(s.find("max_all\t") != std::string::npos);

  std::string table = bounds_table(6, 2, nullptr);
  CHECK(table.rfind("kind\tn\tk\tm\tvalue\texact\n", 0) == 0);
  CHECK(table.find("Thm2a\t6\t2\t-\t440\tyes") != std::string::npos);
  CHECK(table.find("Prop24\t6\t2\t-\t20\tyes") != std::string::npos);
  CHECK(table.find("CrossLB") == std::string::npos);

  Integer m(35);
  std::string with_scale = bounds_table(6, 2, &m);
  CHECK(with_scale.find("CrossLB_all\t6\t2\t35\t") != std::string::npos);

  FamilyResult fam = max_family(2, 0);
  std::string row = maxfamily_summary(fam);
  CHECK(row.rfind("n\tk\t", 0) == 0);
  CHECK(row.find("2\t0\t0\t4\ttrue") != std::string::npos);
}
