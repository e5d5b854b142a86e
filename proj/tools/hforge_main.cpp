#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <hforge/hforge.h>

namespace {

// 0 success, 1 failed verification / defective drawing, 2 usage or input
// problem, 3 exhausted search budget.
int exit_for(int rc) {
  switch (rc) {
    case HF_OK: return 0;
    case HF_ERR_GEOMETRY: return 1;
    case HF_ERR_LIMIT: return 3;
    default: return 2;
  }
}

int report_error(int rc) {
  std::cerr << "error: " << hf_last_error() << "\n";
  return exit_for(rc);
}

struct StringOut {
  char* p = nullptr;
  ~StringOut() { hf_string_free(p); }
};

struct DrawingOut {
  hf_drawing* p = nullptr;
  ~DrawingOut() { hf_drawing_free(p); }
};

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) return false;
  out = ss.str();
  return true;
}

bool write_file(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

int load_drawing_file(const std::string& path, DrawingOut& d) {
  std::string text;
  if (!read_file(path, text)) {
    std::cerr << "error: cannot read " << path << "\n";
    return 2;
  }
  int rc = hf_drawing_parse(text.c_str(), &d.p);
  if (rc != HF_OK) return report_error(rc);
  return 0;
}

// With an output path the JSON goes to the file and the crossing summary
// to stdout; without one the JSON itself is the stdout payload and the
// summary moves to stderr.
int emit_constructed(hf_drawing* d, const std::string& out_path) {
  StringOut json;
  int rc = hf_drawing_json(d, &json.p);
  if (rc != HF_OK) return report_error(rc);
  StringOut summary;
  rc = hf_drawing_summary(d, &summary.p);
  if (rc != HF_OK) return report_error(rc);
  if (out_path.empty()) {
    std::cout << json.p;
    std::cerr << summary.p;
    return 0;
  }
  if (!write_file(out_path, json.p)) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return 2;
  }
  std::cout << summary.p;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact constructions and checks for crossing-bounded multigraph drawings"};
  app.require_subcommand(1);

  long long n = 0, k = 0, t = 0;
  unsigned long long budget = 0;
  int samples = 64;
  std::string out_path, input_path, m_text;

  auto* construct = app.add_subcommand("construct", "build a drawing");
  construct->require_subcommand(1);
  auto* gnk = construct->add_subcommand("gnk", "axis drawing, edges of every span");
  gnk->add_option("--n", n, "vertex count")->required();
  gnk->add_option("--k", k, "crossing level")->required();
  gnk->add_option("-o,--out", out_path, "output JSON path");
  auto* gnkt = construct->add_subcommand("gnkt", "axis drawing, spans at most t");
  gnkt->add_option("--n", n, "vertex count")->required();
  gnkt->add_option("--k", k, "crossing level")->required();
  gnkt->add_option("--t", t, "span cap")->required();
  gnkt->add_option("-o,--out", out_path, "output JSON path");
  auto* planar = construct->add_subcommand("planar-tight", "crossing-free drawing with 4n-4 edges");
  planar->add_option("--n", n, "vertex count")->required();
  planar->add_option("-o,--out", out_path, "output JSON path");
  auto* spirals = construct->add_subcommand("spirals", "nested spiral loops, windings 1..n");
  spirals->add_option("--n", n, "largest winding")->required();
  spirals->add_option("-o,--out", out_path, "output JSON path");

  auto* verify = app.add_subcommand("verify", "check a drawing file");
  verify->add_option("input", input_path, "drawing JSON path")->required();

  auto* encode = app.add_subcommand("encode", "sequence encoding of an axis drawing");
  encode->add_option("input", input_path, "drawing JSON path")->required();
  encode->add_option("-o,--out", out_path, "output text path");

  auto* maxfamily = app.add_subcommand("maxfamily", "largest compatible sequence family");
  maxfamily->add_option("--n", n, "sequence length")->required();
  maxfamily->add_option("--k", k, "pairwise crossing cap")->required();
  maxfamily->add_option("--budget", budget, "search node budget (0 = default)");
  maxfamily->add_option("-o,--out", out_path, "witness output path");

  auto* bounds = app.add_subcommand("bounds", "edge-count bounds and crossing scales");
  bounds->add_option("--n", n, "vertex count")->required();
  bounds->add_option("--k", k, "crossing level")->required();
  bounds->add_option("--m", m_text, "edge count for the crossing scale terms");

  auto* render = app.add_subcommand("render", "deterministic SVG of a drawing file");
  render->add_option("input", input_path, "drawing JSON path")->required();
  render->add_option("-o,--out", out_path, "output SVG path");
  render->add_option("--samples", samples, "samples per curve (min 16)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (gnk->parsed()) {
    DrawingOut d;
    int rc = hf_build_gnk(static_cast<int>(n), static_cast<int>(k), &d.p);
    if (rc != HF_OK) return report_error(rc);
    return emit_constructed(d.p, out_path);
  }
  if (gnkt->parsed()) {
    DrawingOut d;
    int rc = hf_build_gnkt(static_cast<int>(n), static_cast<int>(k), static_cast<int>(t), &d.p);
    if (rc != HF_OK) return report_error(rc);
    return emit_constructed(d.p, out_path);
  }
  if (planar->parsed()) {
    DrawingOut d;
    int rc = hf_build_planar_tight(static_cast<int>(n), &d.p);
    if (rc != HF_OK) return report_error(rc);
    return emit_constructed(d.p, out_path);
  }
  if (spirals->parsed()) {
    DrawingOut d;
    int rc = hf_build_spirals(static_cast<int>(n), &d.p);
    if (rc != HF_OK) return report_error(rc);
    return emit_constructed(d.p, out_path);
  }

  if (verify->parsed()) {
    DrawingOut d;
    int rc = load_drawing_file(input_path, d);
    if (rc != 0) return rc;
    StringOut report;
    int passed = 0;
    rc = hf_drawing_verify(d.p, &report.p, &passed);
    if (rc != HF_OK) return report_error(rc);
    std::cout << report.p;
    return passed ? 0 : 1;
  }

  if (encode->parsed()) {
    DrawingOut d;
    int rc = load_drawing_file(input_path, d);
    if (rc != 0) return rc;
    StringOut text;
    rc = hf_drawing_encode(d.p, &text.p);
    if (rc != HF_OK) return report_error(rc);
    if (out_path.empty()) {
      std::cout << text.p;
    } else if (!write_file(out_path, text.p)) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    return 0;
  }

  if (maxfamily->parsed()) {
    StringOut summary, witness;
    int exact = 0;
    int rc = hf_max_family(static_cast<int>(n), static_cast<int>(k), budget, &summary.p,
                           &witness.p, &exact);
    if (rc != HF_OK) return report_error(rc);
    std::cout << summary.p;
    if (out_path.empty()) {
      std::cout << witness.p;
    } else if (!write_file(out_path, witness.p)) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    if (!exact) {
      std::cerr << "warning: node budget exhausted; family size is a lower bound\n";
      return 3;
    }
    return 0;
  }

  if (bounds->parsed()) {
    StringOut table;
    int rc = hf_bounds_table(static_cast<int>(n), static_cast<int>(k),
                             m_text.empty() ? nullptr : m_text.c_str(), &table.p);
    if (rc != HF_OK) return report_error(rc);
    std::cout << table.p;
    return 0;
  }

  if (render->parsed()) {
    DrawingOut d;
    int rc = load_drawing_file(input_path, d);
    if (rc != 0) return rc;
    StringOut svg;
    rc = hf_drawing_render_svg(d.p, samples, &svg.p);
    if (rc != HF_OK) return report_error(rc);
    if (out_path.empty()) {
      std::cout << svg.p;
    } else if (!write_file(out_path, svg.p)) {
      std::cerr << "error: cannot write " << out_path << "\n";
      return 2;
    }
    return 0;
  }

  return 2;
}
