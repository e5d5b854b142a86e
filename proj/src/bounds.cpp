#include "hforge/bounds.hpp"

#include <boost/multiprecision/cpp_dec_float.hpp>

#include "hforge/errors.hpp"

namespace hforge {

namespace {

using Dec = boost::multiprecision::number<boost::multiprecision::cpp_dec_float<100>>;

Dec to_dec(const Integer& v) { return Dec(v.str()); }

// r as in the exponent 2 + 1/r: k, k+1 or k+2 by crossing class.
int scale_shift(BoundKind kind) {
  switch (kind) {
    case BoundKind::CrossLB_all: return 0;
    case BoundKind::CrossLB_incident: return 1;
    case BoundKind::CrossLB_parallel: return 2;
    default: throw Error(ErrorCode::InvalidParams, "not a crossing scale kind");
  }
}

}  // namespace

const char* bound_kind_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::Thm1: return "Thm1";
    case BoundKind::Thm2a: return "Thm2a";
    case BoundKind::Thm2b: return "Thm2b";
    case BoundKind::Thm2c: return "Thm2c";
    case BoundKind::Prop24: return "Prop24";
    case BoundKind::CrossLB_all: return "CrossLB_all";
    case BoundKind::CrossLB_incident: return "CrossLB_incident";
    case BoundKind::CrossLB_parallel: return "CrossLB_parallel";
  }
  return "?";
}

Integer edge_bound(BoundKind kind, int n, int k) {
  switch (kind) {
    case BoundKind::Thm1: {
      if (n < 1 || k < 1) throw Error(ErrorCode::InvalidParams, "edge_bound: need n >= 1, k >= 1");
      unsigned long e = 13UL * static_cast<unsigned long>(n) * static_cast<unsigned long>(k + 1);
      return ipow(Integer(6), e);
    }
    case BoundKind::Thm2a:
    case BoundKind::Thm2b:
    case BoundKind::Thm2c: {
      if (n < 1 || k < -1 || k >= n)
        throw Error(ErrorCode::InvalidParams, "edge_bound: need n >= 1, -1 <= k < n");
      Integer base = binomial(2 * n, k + 1);
      if (kind == BoundKind::Thm2a) return 2 * base;
      if (kind == BoundKind::Thm2b) return Integer(n) * base;
      return Integer(n) * Integer(n - 1) * base;
    }
    case BoundKind::Prop24: {
      if (n < 2) throw Error(ErrorCode::InvalidParams, "edge_bound: need n >= 2");
      return Integer(4 * n - 4);
    }
    default:
      throw Error(ErrorCode::InvalidParams, "edge_bound: kind has no edge-count bound");
  }
}

ScaleValue crossing_lb_scale(BoundKind kind, const Integer& m, int n, int k) {
  int r = k + scale_shift(kind);
  if (n < 1 || r < 1) throw Error(ErrorCode::InvalidParams, "crossing_lb_scale: need n >= 1 and a positive root index");
  if (m < 4 * Integer(n)) throw Error(ErrorCode::InvalidParams, "crossing_lb_scale: need m >= 4n");

  // (m^(2r+1) / n^(r+1))^(1/r)
  Integer num = ipow(m, static_cast<unsigned long>(2 * r + 1));
  Integer den = ipow(Integer(n), static_cast<unsigned long>(r + 1));
  Rational ratio(num, den);

  ScaleValue out;
  Integer p = numerator(ratio);
  Integer q = denominator(ratio);
  bool p_exact = false, q_exact = false;
  Integer pr = kth_root_floor(p, static_cast<unsigned long>(r), &p_exact);
  Integer qr = kth_root_floor(q, static_cast<unsigned long>(r), &q_exact);
  if (p_exact && q_exact) {
    out.exact = true;
    out.value = Rational(pr, qr);
    out.text = rational_string(out.value);
    out.significant_digits = 0;
    return out;
  }
  Dec v = boost::multiprecision::pow(to_dec(p) / to_dec(q), Dec(1) / r);
  out.exact = false;
  out.significant_digits = 50;
  out.text = v.str(50, std::ios_base::scientific);
  return out;
}

bool scale_identity_holds(int n, int t, int k) {
  if (n < 1 || t < 1 || k < 1) throw Error(ErrorCode::InvalidParams, "scale_identity: need n, t, k >= 1");
  Integer m = Integer(n) * ipow(Integer(t), static_cast<unsigned long>(k));
  Integer lhs = ipow(m, static_cast<unsigned long>(2 * k + 1));
  Integer inner = Integer(n) * ipow(Integer(t), static_cast<unsigned long>(2 * k + 1));
  Integer rhs = ipow(Integer(n), static_cast<unsigned long>(k + 1)) *
                ipow(inner, static_cast<unsigned long>(k));
  return lhs == rhs;
}

ConstructionBoundReport check_construction_against_bounds(const MultigraphDrawing& d, int k,
                                                          const CrossingReport& crossings) {
  int n = d.vertex_count();
  Integer m(d.edge_count());
  ConstructionBoundReport out;

  auto push = [&](BoundKind kind, int bk) {
    BoundCheckRow row;
    row.kind = kind;
    row.n = n;
    row.k = bk;
    row.bound = edge_bound(kind, n, bk);
    row.observed = m;
    row.ok = row.observed <= row.bound;
    if (!row.ok) out.all_ok = false;
    out.rows.push_back(std::move(row));
  };

  if (k >= 1) push(BoundKind::Thm1, k);
  if (k < n) push(BoundKind::Thm2a, k);
  // The incident / parallel bounds hold at the observed class maxima.
  if (crossings.max_incident && *crossings.max_incident < n)
    push(BoundKind::Thm2b, static_cast<int>(*crossings.max_incident));
  if (crossings.max_parallel && *crossings.max_parallel < n)
    push(BoundKind::Thm2c, static_cast<int>(*crossings.max_parallel));
  if (n >= 2 && crossings.total == 0) push(BoundKind::Prop24, 0);

  if (k >= 1 && m >= 4 * Integer(n)) {
    ScaleValue s = crossing_lb_scale(BoundKind::CrossLB_all, m, n, k);
    if (s.exact && !s.value.is_zero()) {
      Rational ratio = Rational(crossings.total) / s.value;
      out.crossing_ratio_text = rational_string(ratio);
    } else {
      Dec sv(s.text);
      Dec ratio = Dec(Integer(crossings.total).str()) / sv;
      out.crossing_ratio_text = ratio.str(50, std::ios_base::scientific);
    }
  }
  return out;
}

}  // namespace hforge
