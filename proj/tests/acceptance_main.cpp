// End-to-end acceptance suite. Each numbered check prints exactly one
// PASS/FAIL line; the process exits 0 only if every check passed. The
// final check exercises the installed CLI binary (--cli <path>) for
// byte-level determinism.

#include <sys/wait.h>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "hforge/bounds.hpp"
#include "hforge/construct.hpp"
#include "hforge/drawing.hpp"
#include "hforge/general_drawing.hpp"
#include "hforge/interchange.hpp"
#include "hforge/sequences.hpp"
#include "hforge/winding.hpp"
#include "oracles.hpp"

using namespace hforge;
namespace fs = std::filesystem;

namespace {

struct Failure {
  std::string why;
};

void expect(bool ok, const std::string& why) {
  if (!ok) throw Failure{why};
}

// Drawings, crossing reports and encodings for the standard (n, k) sweep,
// built once and shared by the checks.
struct Sweep {
  std::map<std::pair<int, int>, MultigraphDrawing> drawings;
  std::map<std::pair<int, int>, CrossingReport> reports;
  std::map<std::pair<int, int>, std::vector<Sequence>> codes;

  static std::vector<std::pair<int, int>> range() {
    std::vector<std::pair<int, int>> out;
    for (int n = 3; n <= 10; ++n)
      for (int k = 1; k <= std::min(3, n - 1); ++k) out.emplace_back(n, k);
    return out;
  }

  const MultigraphDrawing& drawing(int n, int k) {
    auto key = std::make_pair(n, k);
    auto it = drawings.find(key);
    if (it == drawings.end()) it = drawings.emplace(key, build_gnk(n, k)).first;
    return it->second;
  }

  const CrossingReport& report(int n, int k) {
    auto key = std::make_pair(n, k);
    auto it = reports.find(key);
    if (it == reports.end()) it = reports.emplace(key, crossing_report(drawing(n, k))).first;
    return it->second;
  }

  const std::vector<Sequence>& code(int n, int k) {
    auto key = std::make_pair(n, k);
    auto it = codes.find(key);
    if (it == codes.end()) it = codes.emplace(key, encode(drawing(n, k))).first;
    return it->second;
  }
};

Sweep g_sweep;

// --- the ten checks ---

void check_edge_counts(std::string& note) {
  auto start = std::chrono::steady_clock::now();
  for (auto [n, k] : Sweep::range()) {
    Integer expected = 0;
    for (int l = 1; l <= k; ++l) expected += binomial(n, l + 1);
    expect(Integer(g_sweep.drawing(n, k).edge_count()) == expected,
           "edge count off at n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  note = "all counts exact, " + std::to_string(secs) + "s";
  expect(secs < 5.0, "construction sweep too slow: " + std::to_string(secs) + "s");
}

void check_crossing_classes(std::string& note) {
  double worst = 0;
  for (auto [n, k] : Sweep::range()) {
    auto start = std::chrono::steady_clock::now();
    const CrossingReport& r = g_sweep.report(n, k);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (n == 10 && k == 3) worst = secs;
    std::string at = " at n=" + std::to_string(n) + " k=" + std::to_string(k);
    // an empty class imposes nothing
    expect(!r.max_all || *r.max_all <= k, "pairwise crossings exceed k" + at);
    expect(!r.max_incident || *r.max_incident <= k - 1, "incident crossings exceed k-1" + at);
    expect(!r.max_parallel || *r.max_parallel <= k - 2, "parallel crossings exceed k-2" + at);
  }
  note = "class maxima within k / k-1 / k-2; n=10 k=3 took " + std::to_string(worst) + "s";
  expect(worst < 60.0, "n=10 k=3 report too slow: " + std::to_string(worst) + "s");
}

void check_nonhomotopy(std::string&) {
  for (auto [n, k] : Sweep::range()) {
    NonHomotopyReport nh = verify_nonhomotopic(g_sweep.drawing(n, k));
    expect(nh.ok(), "homotopic parallel pair at n=" + std::to_string(n) + " k=" + std::to_string(k));
  }
}

void check_edge_bound_and_encodings(std::string&) {
  for (auto [n, k] : Sweep::range()) {
    const MultigraphDrawing& d = g_sweep.drawing(n, k);
    Integer cap = 2 * binomial(2 * n, k + 1);
    std::string at = " at n=" + std::to_string(n) + " k=" + std::to_string(k);
    expect(Integer(d.edge_count()) <= cap, "edge count above pairwise bound" + at);

    const std::vector<Sequence>& codes = g_sweep.code(n, k);
    expect(codes.size() == d.edge_count(), "missing encodings" + at);
    std::set<Sequence> uniq(codes.begin(), codes.end());
    expect(uniq.size() == codes.size(), "encodings not distinct" + at);
    for (const Sequence& s : codes) expect(is_valid_sequence(s), "invalid encoding" + at);
    for (std::size_t i = 0; i < codes.size(); ++i)
      for (std::size_t j = i + 1; j < codes.size(); ++j)
        expect(cross_count(codes[i], codes[j]) <= k, "encoding pair crosses above k" + at);
  }
}

void check_fidelity(std::string&) {
  for (auto [n, k] : Sweep::range()) {
    const CrossingReport& r = g_sweep.report(n, k);
    const std::vector<Sequence>& codes = g_sweep.code(n, k);
    std::string at = " at n=" + std::to_string(n) + " k=" + std::to_string(k);
    for (std::size_t i = 0; i < codes.size(); ++i)
      for (std::size_t j = i + 1; j < codes.size(); ++j)
        expect(cross_count(codes[i], codes[j]) <= r.count(i, j),
               "sequence crossings exceed the geometric count" + at);
  }
}

void check_family_sizes(std::string& note) {
  auto start = std::chrono::steady_clock::now();
  for (int k = 0; k <= 2; ++k) {
    expect(max_family(1, k).size == 1, "size at n=1 must be 1");
    expect(max_family(2, k).size == 4, "size at n=2 must be 4");
  }
  // against the independent clique search
  for (int n = 1; n <= 4; ++n)
    for (int k = 0; k <= 2; ++k) {
      std::vector<Sequence> all = enumerate_sequences(n);
      std::vector<std::vector<bool>> adj(all.size(), std::vector<bool>(all.size(), false));
      for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j)
          adj[i][j] = adj[j][i] = cross_count(all[i], all[j]) <= k;
      auto [best, witness] = oracle::max_clique_bitmask(adj);
      FamilyResult r = max_family(n, k);
      expect(r.exact, "search must finish within budget at small n");
      expect(r.size == std::max<std::size_t>(best, 1),
             "oracle mismatch at n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
  // full table with the growth bound and the step recurrence
  std::map<std::pair<int, int>, std::size_t> table;
  for (int n = 1; n <= 6; ++n)
    for (int k = 0; k <= 2; ++k) {
      FamilyResult r = max_family(n, k);
      expect(r.exact, "table entry hit the budget");
      table[{n, k}] = r.size;
      if (k <= n - 1) {
        expect(Integer(r.size) <= 2 * binomial(2 * n, k + 1),
               "table entry above the pairwise bound");
      } else {
        expect(r.size == max_family(n, n - 1).size, "capped k must match k = n-1");
      }
    }
  expect(check_recurrence(table).empty(), "recurrence violated");
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  note = "table done in " + std::to_string(secs) + "s";
  expect(secs < 600.0, "family table too slow: " + std::to_string(secs) + "s");
}

void check_planar_tight(std::string&) {
  for (int n = 2; n <= 8; ++n) {
    std::string at = " at n=" + std::to_string(n);
    GeneralDrawing d = build_planar_tight(n);
    expect(Integer(d.edge_count()) == Integer(4 * n - 4), "edge count not 4n-4" + at);
    GeneralCrossingReport r = crossing_report(d);
    expect(r.total == 0, "crossings present" + at);
    expect(r.total_self == 0, "self-crossings present" + at);
    GeneralNonHomotopyReport nh = verify_nonhomotopic(d);
    expect(nh.ok(), "uncertified parallel pair" + at);
    for (const auto& cert : nh.pairs)
      expect(cert.certified, "missing winding witness" + at);
  }
}

void check_winding_suite(std::string&) {
  Point center{Rational(0), Rational(0)};
  Point outside{Rational(1000), Rational(1000)};
  std::vector<ClosedPolyline> loops = build_spiral_loops(6, center, {});
  std::vector<Point> one = {center};
  for (int w = 1; w <= 6; ++w) {
    const ClosedPolyline& loop = loops[static_cast<std::size_t>(w - 1)];
    std::string at = " at w=" + std::to_string(w);
    expect(winding_number(loop, center) == w, "winding about the center" + at);
    expect(winding_number(loop, outside) == 0, "winding about an exterior point" + at);
    expect(self_intersections(loop) >= w - 1, "too few self-crossings" + at);
  }
  for (int i = 1; i <= 6; ++i)
    for (int j = 1; j <= 6; ++j) {
      HomotopyVerdict v = loop_homotopy_check(loops[static_cast<std::size_t>(i - 1)],
                                              loops[static_cast<std::size_t>(j - 1)], one);
      HomotopyVerdict want = i == j ? HomotopyVerdict::Homotopic : HomotopyVerdict::NonHomotopic;
      expect(v == want, "verdict with one puncture must follow winding equality");
    }
}

void check_scale_window(std::string& note) {
  auto start = std::chrono::steady_clock::now();
  const int n = 40, k = 1;
  Rational rmin, rmax;
  bool first = true;
  for (int t : {4, 6, 8, 10}) {
    expect(scale_identity_holds(n, t, k), "scale identity failed at t=" + std::to_string(t));
    Integer m = Integer(n) * ipow(Integer(t), static_cast<unsigned long>(k));
    ScaleValue sv = crossing_lb_scale(BoundKind::CrossLB_all, m, n, k);
    expect(sv.exact && sv.value == Rational(Integer(n) * ipow(Integer(t), 2 * k + 1)),
           "scale at m = n t^k must equal n t^(2k+1)");

    MultigraphDrawing d = build_gnkt(n, k, t);
    CrossingReport r = crossing_report(d);
    Rational ratio = Rational(Integer(r.total), Integer(n) * ipow(Integer(t), 3));
    if (first || ratio < rmin) rmin = ratio;
    if (first || ratio > rmax) rmax = ratio;
    first = false;
  }
  expect(rmin > 0, "no crossings at all");
  Rational spread = rmax / rmin;
  note = "ratio window " + rational_string(rmin) + " .. " + rational_string(rmax) +
         ", spread " + decimal_string(spread, 3);
  expect(spread <= 8, "ratio window wider than 8: " + decimal_string(spread, 3));
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  expect(secs < 120.0, "scale sweep too slow: " + std::to_string(secs) + "s");
}

// --- CLI determinism ---

struct RunResult {
  int exit_code = -1;
  std::string out;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& cli, const std::string& args, const fs::path& dir,
                  const std::string& tag) {
  fs::path out = dir / (tag + ".out");
  std::string cmd = "\"" + cli + "\" " + args + " > \"" + out.string() + "\" 2> \"" +
                    (dir / (tag + ".err")).string() + "\"";
  int rc = std::system(cmd.c_str());
  RunResult r;
  if (rc != -1 && WIFEXITED(rc)) r.exit_code = WEXITSTATUS(rc);
  r.out = slurp(out);
  return r;
}

void check_cli_determinism(const std::string& cli, std::string& note) {
  expect(!cli.empty(), "no --cli path given");
  fs::path dir = fs::path("acceptance_cli_tmp");
  fs::remove_all(dir);
  fs::create_directories(dir);

  struct Step {
    std::string name;
    std::string args;        // @DIR@ and @RUN@ substituted
    int want_exit;
    std::vector<std::string> files;  // produced files, compared by bytes
  };
  std::vector<Step> steps = {
      {"construct-gnk", "construct gnk --n 6 --k 2 -o @DIR@/gnk@RUN@.json", 0, {"gnk@RUN@.json"}},
      {"construct-gnkt", "construct gnkt --n 8 --k 2 --t 5 -o @DIR@/gnkt@RUN@.json", 0,
       {"gnkt@RUN@.json"}},
      {"construct-planar", "construct planar-tight --n 5 -o @DIR@/pt@RUN@.json", 0,
       {"pt@RUN@.json"}},
      {"construct-spirals", "construct spirals --n 4 -o @DIR@/sp@RUN@.json", 0, {"sp@RUN@.json"}},
      {"verify", "verify @DIR@/gnk1.json", 0, {}},
      {"verify-planar", "verify @DIR@/pt1.json", 0, {}},
      {"encode", "encode @DIR@/gnk1.json -o @DIR@/codes@RUN@.txt", 0, {"codes@RUN@.txt"}},
      {"maxfamily", "maxfamily --n 5 --k 1 -o @DIR@/fam@RUN@.txt", 0, {"fam@RUN@.txt"}},
      {"bounds", "bounds --n 6 --k 2 --m 35", 0, {}},
      {"render", "render @DIR@/gnk1.json --samples 32 -o @DIR@/gnk@RUN@.svg", 0,
       {"gnk@RUN@.svg"}},
  };

  auto fill = [&](std::string text, int run) {
    auto sub = [&](const std::string& what, const std::string& with) {
      for (std::size_t at = text.find(what); at != std::string::npos; at = text.find(what))
        text.replace(at, what.size(), with);
    };
    sub("@DIR@", dir.string());
    sub("@RUN@", std::to_string(run));
    return text;
  };

  for (const Step& step : steps) {
    RunResult first = run_cli(cli, fill(step.args, 1), dir, step.name + "-1");
    RunResult second = run_cli(cli, fill(step.args, 2), dir, step.name + "-2");
    expect(first.exit_code == step.want_exit,
           step.name + ": exit " + std::to_string(first.exit_code));
    expect(second.exit_code == step.want_exit, step.name + ": rerun exit differs");
    expect(first.out == second.out, step.name + ": stdout differs between runs");
    for (const std::string& f : step.files) {
      std::string a = slurp(dir / fill(f, 1));
      std::string b = slurp(dir / fill(f, 2));
      expect(!a.empty(), step.name + ": empty output file");
      expect(a == b, step.name + ": file bytes differ between runs");
    }
  }

  // negative path: a drawing with a duplicated edge must fail verification
  {
    MultigraphDrawing g62 = build_gnk(6, 2);
    auto edges = g62.edges();
    edges.push_back(edges.front());
    edges.back().label = "dup";
    MultigraphDrawing dup(g62.vertex_xs(), std::move(edges));
    std::ofstream(dir / "dup.json", std::ios::binary) << drawing_json(dup);
    RunResult dup_run = run_cli(cli, "verify " + (dir / "dup.json").string(), dir, "verify-dup");
    expect(dup_run.exit_code == 1, "duplicated edge must exit 1");
  }

  note = "10 subcommands, byte-identical reruns";
}

struct Criterion {
  std::string name;
  void (*fn)(std::string&);
};

}  // namespace

int main(int argc, char** argv) {
  std::string cli;
  for (int i = 1; i + 1 < argc; ++i)
    if (std::string(argv[i]) == "--cli") cli = argv[i + 1];

  std::vector<Criterion> checks = {
      {"01-edge-counts", check_edge_counts},
      {"02-crossing-classes", check_crossing_classes},
      {"03-nonhomotopy", check_nonhomotopy},
      {"04-pairwise-bound-and-encodings", check_edge_bound_and_encodings},
      {"05-sequence-fidelity", check_fidelity},
      {"06-family-sizes", check_family_sizes},
      {"07-planar-tight", check_planar_tight},
      {"08-winding-suite", check_winding_suite},
      {"09-scale-window", check_scale_window},
  };

  bool all_ok = true;
  auto report = [&](const std::string& name, bool ok, const std::string& note) {
    std::cout << (ok ? "PASS" : "FAIL") << " " << name;
    if (!note.empty()) std::cout << " (" << note << ")";
    std::cout << "\n" << std::flush;
    all_ok = all_ok && ok;
  };

  for (const Criterion& c : checks) {
    std::string note;
    try {
      c.fn(note);
      report(c.name, true, note);
    } catch (const Failure& f) {
      report(c.name, false, f.why);
    } catch (const std::exception& e) {
      report(c.name, false, std::string("unexpected error: ") + e.what());
    }
  }

  {
    std::string note;
    try {
      check_cli_determinism(cli, note);
      report("10-cli-determinism", true, note);
    } catch (const Failure& f) {
      report("10-cli-determinism", false, f.why);
    } catch (const std::exception& e) {
      report("10-cli-determinism", false, std::string("unexpected error: ") + e.what());
    }
  }

  return all_ok ? 0 : 1;
}
