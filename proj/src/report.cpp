#include "hforge/report.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include "hforge/errors.hpp"

namespace hforge {

namespace {

std::string opt_text(const std::optional<long>& v) { return v ? std::to_string(*v) : "-"; }

bool geometry_defect(ErrorCode c) {
  return c == ErrorCode::IdenticalCurves || c == ErrorCode::EdgeThroughVertex ||
         c == ErrorCode::DegenerateGeometry || c == ErrorCode::GeometryConflict;
}

void bound_rows(std::ostringstream& out, const ConstructionBoundReport& bounds) {
  for (const BoundCheckRow& row : bounds.rows) {
    out << "bound\t" << bound_kind_name(row.kind) << "\tn=" << row.n << "\tk=" << row.k << "\t"
        << row.bound.str() << "\t" << row.observed.str() << "\t"
        << (row.ok ? "ok" : "VIOLATED") << "\n";
  }
  if (!bounds.crossing_ratio_text.empty())
    out << "ratio\tcrossings_over_scale\t" << bounds.crossing_ratio_text << "\n";
}

std::string finish(std::ostringstream& out, bool pass) {
  out << "summary\tpass\t" << (pass ? "true" : "false") << "\n";
  return out.str();
}

VerificationResult verify_monotone(const MultigraphDrawing& d) {
  std::ostringstream out;
  out << "meta\tformat\tmonotone\n";
  out << "meta\tvertices\t" << d.vertex_count() << "\n";
  out << "meta\tedges\t" << d.edge_count() << "\n";
  VerificationResult res;
  try {
    CrossingReport cr = crossing_report(d);
    out << "crossings\ttotal\t" << cr.total << "\n";
    out << "crossings\tpairs_all\t" << cr.pairs_all << "\n";
    out << "crossings\tmax_all\t" << opt_text(cr.max_all) << "\n";
    out << "crossings\tpairs_incident\t" << cr.pairs_incident << "\n";
    out << "crossings\tmax_incident\t" << opt_text(cr.max_incident) << "\n";
    out << "crossings\tpairs_parallel\t" << cr.pairs_parallel << "\n";
    out << "crossings\tmax_parallel\t" << opt_text(cr.max_parallel) << "\n";

    NonHomotopyReport nh = verify_nonhomotopic(d);
    out << "nonhomotopy\tparallel_pairs\t" << cr.pairs_parallel << "\n";
    out << "nonhomotopy\tviolations\t" << nh.violations.size() << "\n";
    for (const auto& [i, j] : nh.violations)
      out << "violation\thomotopic_pair\t" << d.edges()[i].label << "\t" << d.edges()[j].label
          << "\n";

    int k_obs = static_cast<int>(cr.max_all.value_or(0));
    ConstructionBoundReport bounds = check_construction_against_bounds(d, k_obs, cr);
    bound_rows(out, bounds);

    res.pass = nh.ok() && bounds.all_ok;
  } catch (const Error& e) {
    if (!geometry_defect(e.code())) throw;
    out << "error\t" << error_code_name(e.code()) << "\t" << e.what() << "\n";
    res.pass = false;
  }
  res.report = finish(out, res.pass);
  return res;
}

VerificationResult verify_general(const GeneralDrawing& d) {
  std::ostringstream out;
  out << "meta\tformat\tgeneral\n";
  out << "meta\tvertices\t" << d.vertex_count() << "\n";
  out << "meta\tedges\t" << d.edge_count() << "\n";
  VerificationResult res;
  try {
    GeneralCrossingReport cr = crossing_report(d);
    out << "crossings\ttotal\t" << cr.total << "\n";
    out << "crossings\ttotal_self\t" << cr.total_self << "\n";
    out << "crossings\tpairs_all\t" << cr.pairs_all << "\n";
    out << "crossings\tmax_all\t" << opt_text(cr.max_all) << "\n";
    out << "crossings\tpairs_incident\t" << cr.pairs_incident << "\n";
    out << "crossings\tmax_incident\t" << opt_text(cr.max_incident) << "\n";
    out << "crossings\tpairs_parallel\t" << cr.pairs_parallel << "\n";
    out << "crossings\tmax_parallel\t" << opt_text(cr.max_parallel) << "\n";

    GeneralNonHomotopyReport nh = verify_nonhomotopic(d);
    out << "nonhomotopy\tparallel_pairs\t" << nh.pairs.size() << "\n";
    out << "nonhomotopy\tviolations\t" << nh.violations.size() << "\n";
    for (const auto& cert : nh.pairs) {
      out << "certificate\t" << d.edges()[cert.e1].label << "\t" << d.edges()[cert.e2].label
          << "\t";
      if (cert.windings.empty()) {
        out << "-";
      } else {
        for (std::size_t i = 0; i < cert.windings.size(); ++i)
          out << (i ? "," : "") << cert.windings[i];
      }
      out << "\t" << (cert.certified ? "certified" : "VIOLATION") << "\n";
    }

    long self_max = 0;
    for (long c : cr.self_counts) self_max = std::max(self_max, c);
    int k_obs = static_cast<int>(std::max<long>(cr.max_all.value_or(0), self_max));
    int n = d.vertex_count();

    ConstructionBoundReport bounds;
    Integer m(d.edge_count());
    auto push = [&](BoundKind kind, int bk) {
      BoundCheckRow row;
      row.kind = kind;
      row.n = n;
      row.k = bk;
      row.bound = edge_bound(kind, n, bk);
      row.observed = m;
      row.ok = row.observed <= row.bound;
      if (!row.ok) bounds.all_ok = false;
      bounds.rows.push_back(std::move(row));
    };
    if (k_obs >= 1 && n >= 1) push(BoundKind::Thm1, k_obs);
    if (k_obs < n) push(BoundKind::Thm2a, k_obs);
    if (n >= 2 && cr.total == 0 && cr.total_self == 0) push(BoundKind::Prop24, 0);
    bound_rows(out, bounds);

    res.pass = nh.ok() && bounds.all_ok;
  } catch (const Error& e) {
    if (!geometry_defect(e.code())) throw;
    out << "error\t" << error_code_name(e.code()) << "\t" << e.what() << "\n";
    res.pass = false;
  }
  res.report = finish(out, res.pass);
  return res;
}

}  // namespace

VerificationResult run_verification(const DrawingVariant& d) {
  if (const auto* md = std::get_if<MultigraphDrawing>(&d)) return verify_monotone(*md);
  return verify_general(std::get<GeneralDrawing>(d));
}

std::string construct_summary(const DrawingVariant& d) {
  std::ostringstream out;
  if (const auto* md = std::get_if<MultigraphDrawing>(&d)) {
    CrossingReport cr = crossing_report(*md);
    out << "vertices\t" << md->vertex_count() << "\n";
    out << "edges\t" << md->edge_count() << "\n";
    out << "crossings_total\t" << cr.total << "\n";
    out << "max_all\t" << opt_text(cr.max_all) << "\n";
    out << "max_incident\t" << opt_text(cr.max_incident) << "\n";
    out << "max_parallel\t" << opt_text(cr.max_parallel) << "\n";
  } else {
    const auto& gd = std::get<GeneralDrawing>(d);
    GeneralCrossingReport cr = crossing_report(gd);
    out << "vertices\t" << gd.vertex_count() << "\n";
    out << "edges\t" << gd.edge_count() << "\n";
    out << "crossings_total\t" << cr.total << "\n";
    out << "self_total\t" << cr.total_self << "\n";
    out << "max_all\t" << opt_text(cr.max_all) << "\n";
    out << "max_incident\t" << opt_text(cr.max_incident) << "\n";
    out << "max_parallel\t" << opt_text(cr.max_parallel) << "\n";
  }
  return out.str();
}

std::string bounds_table(int n, int k, const Integer* m) {
  if (n < 1 || k < -1) throw Error(ErrorCode::InvalidParams, "bounds table: need n >= 1, k >= -1");
  std::ostringstream out;
  out << "kind\tn\tk\tm\tvalue\texact\n";
  auto edge_row = [&](BoundKind kind) {
    out << bound_kind_name(kind) << "\t" << n << "\t" << k << "\t-\t"
        << edge_bound(kind, n, k).str() << "\tyes\n";
  };
  if (k >= 1) edge_row(BoundKind::Thm1);
  if (k < n) {
    edge_row(BoundKind::Thm2a);
    edge_row(BoundKind::Thm2b);
    edge_row(BoundKind::Thm2c);
  }
  if (n >= 2) edge_row(BoundKind::Prop24);
  if (m) {
    for (BoundKind kind :
         {BoundKind::CrossLB_all, BoundKind::CrossLB_incident, BoundKind::CrossLB_parallel}) {
      int shift = kind == BoundKind::CrossLB_all ? 0 : kind == BoundKind::CrossLB_incident ? 1 : 2;
      if (k + shift < 1) continue;
      if (*m < 4 * Integer(n)) continue;
      ScaleValue sv = crossing_lb_scale(kind, *m, n, k);
      out << bound_kind_name(kind) << "\t" << n << "\t" << k << "\t" << m->str() << "\t" << sv.text
          << "\t" << (sv.exact ? "yes" : "50sd") << "\n";
    }
  }
  return out.str();
}

std::string maxfamily_summary(const FamilyResult& r) {
  std::ostringstream out;
  out << "n\tk\tk_effective\tg\texact\tnodes\tbudget\n";
  out << r.n << "\t" << r.k << "\t" << r.k_effective << "\t" << r.size << "\t"
      << (r.exact ? "true" : "false") << "\t" << r.nodes << "\t" << r.budget << "\n";
  return out.str();
}

}  // namespace hforge
