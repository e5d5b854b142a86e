#include "hforge/hforge.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "hforge/construct.hpp"
#include "hforge/errors.hpp"
#include "hforge/interchange.hpp"
#include "hforge/render.hpp"
#include "hforge/report.hpp"

using namespace hforge;

struct hf_drawing {
  DrawingVariant value;
};

namespace {

thread_local std::string g_last_error;

int map_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidParams: return HF_ERR_INVALID;
    case ErrorCode::ParseError: return HF_ERR_PARSE;
    case ErrorCode::IoFailure: return HF_ERR_IO;
    case ErrorCode::ResourceLimit: return HF_ERR_LIMIT;
    case ErrorCode::Internal: return HF_ERR_INTERNAL;
    default: return HF_ERR_GEOMETRY;
  }
}

template <typename F>
int guarded(F&& f) {
  try {
    f();
    g_last_error.clear();
    return HF_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return HF_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return HF_ERR_INTERNAL;
  }
}

char* copy_out(const std::string& s) {
  char* mem = static_cast<char*>(std::malloc(s.size() + 1));
  if (!mem) throw std::bad_alloc();
  std::memcpy(mem, s.c_str(), s.size() + 1);
  return mem;
}

int make_drawing(DrawingVariant v, hf_drawing** out) {
  *out = new hf_drawing{std::move(v)};
  return HF_OK;
}

}  // namespace

extern "C" {

const char* hf_last_error(void) { return g_last_error.c_str(); }

void hf_string_free(char* s) { std::free(s); }

void hf_drawing_free(hf_drawing* d) { delete d; }

int hf_build_gnk(int n, int k, hf_drawing** out) {
  return guarded([&] { make_drawing(build_gnk(n, k), out); });
}

int hf_build_gnkt(int n, int k, int t, hf_drawing** out) {
  return guarded([&] { make_drawing(build_gnkt(n, k, t), out); });
}

int hf_build_planar_tight(int n, hf_drawing** out) {
  return guarded([&] { make_drawing(build_planar_tight(n), out); });
}

int hf_build_spirals(int w_max, hf_drawing** out) {
  return guarded([&] { make_drawing(build_spiral_drawing(w_max), out); });
}

int hf_drawing_parse(const char* json_text, hf_drawing** out) {
  return guarded([&] {
    if (!json_text) throw Error(ErrorCode::InvalidParams, "null input text");
    make_drawing(parse_drawing(json_text), out);
  });
}

int hf_drawing_json(const hf_drawing* d, char** out) {
  return guarded([&] { *out = copy_out(drawing_json(d->value)); });
}

int hf_drawing_summary(const hf_drawing* d, char** out) {
  return guarded([&] { *out = copy_out(construct_summary(d->value)); });
}

int hf_drawing_verify(const hf_drawing* d, char** report, int* passed) {
  return guarded([&] {
    VerificationResult r = run_verification(d->value);
    *report = copy_out(r.report);
    *passed = r.pass ? 1 : 0;
  });
}

int hf_drawing_encode(const hf_drawing* d, char** out) {
  return guarded([&] {
    const auto* md = std::get_if<MultigraphDrawing>(&d->value);
    if (!md) throw Error(ErrorCode::InvalidParams, "encoding needs an axis drawing");
    *out = copy_out(sequences_text(encode(*md)));
  });
}

int hf_drawing_render_svg(const hf_drawing* d, int samples, char** out) {
  return guarded([&] { *out = copy_out(render_svg(d->value, samples)); });
}

int hf_max_family(int n, int k, unsigned long long budget, char** summary, char** witness,
                  int* exact) {
  return guarded([&] {
    FamilyResult r = max_family(n, k, budget);
    *summary = copy_out(maxfamily_summary(r));
    *witness = copy_out(sequences_text(r.witness));
    *exact = r.exact ? 1 : 0;
  });
}

int hf_bounds_table(int n, int k, const char* m, char** out) {
  return guarded([&] {
    if (m) {
      Rational r = parse_rational(m);
      if (denominator(r) != 1 || r.sign() < 0)
        throw Error(ErrorCode::InvalidParams, "m must be a nonnegative integer");
      Integer mv = numerator(r);
      *out = copy_out(bounds_table(n, k, &mv));
    } else {
      *out = copy_out(bounds_table(n, k, nullptr));
    }
  });
}

}  // extern "C"
