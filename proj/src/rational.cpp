#include "hforge/rational.hpp"

#include <cstddef>

namespace hforge {

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t i = from; i < to; ++i) {
    if (s[i] < '0' || s[i] > '9') return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t slash = text.find('/');
  std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
  std::size_t num_start = 0;
  if (!num.empty() && (num[0] == '+' || num[0] == '-')) num_start = 1;
  if (!all_digits(num, num_start, num.size())) {
    throw Error(ErrorCode::ParseError, "bad rational literal: " + text);
  }
  Integer p(num.substr(num_start));
  if (!num.empty() && num[0] == '-') p = -p;
  if (slash == std::string::npos) return Rational(p);

  std::string den = text.substr(slash + 1);
  if (!all_digits(den, 0, den.size())) {
    throw Error(ErrorCode::ParseError, "bad rational literal: " + text);
  }
  Integer q(den);
  if (q == 0) {
    throw Error(ErrorCode::ParseError, "zero denominator: " + text);
  }
  return Rational(p, q);
}

std::string rational_string(const Rational& r) {
  std::string s = numerator(r).str();
  if (denominator(r) != 1) {
    s += '/';
    s += denominator(r).str();
  }
  return s;
}

std::string decimal_string(const Rational& r, int digits) {
  if (digits < 0) throw Error(ErrorCode::InvalidParams, "negative digit count");
  Integer num = numerator(r);
  Integer den = denominator(r);
  bool neg = num < 0;
  if (neg) num = -num;
  Integer scaled = num * ipow(Integer(10), static_cast<unsigned long>(digits));
  Integer q = scaled / den;
  Integer rem = scaled % den;
  if (2 * rem >= den) ++q;  // half away from zero
  std::string body = q.str();
  std::string out;
  if (digits == 0) {
    out = body;
  } else {
    while (body.size() <= static_cast<std::size_t>(digits)) body.insert(body.begin(), '0');
    out = body.substr(0, body.size() - digits) + "." + body.substr(body.size() - digits);
  }
  if (neg && q != 0) out.insert(out.begin(), '-');
  return out;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return Integer(0);
  if (k > n - k) k = n - k;
  Integer r(1);
  for (long i = 1; i <= k; ++i) {
    r *= (n - k + i);
    r /= i;  // exact at every step
  }
  return r;
}

Integer ipow(Integer base, unsigned long exp) {
  Integer r(1);
  while (exp > 0) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

Integer kth_root_floor(const Integer& v, unsigned long k, bool* exact) {
  if (v < 0 || k == 0) throw Error(ErrorCode::InvalidParams, "kth_root_floor domain");
  if (exact) *exact = false;
  if (v == 0 || v == 1 || k == 1) {
    if (exact) *exact = true;
    return v;
  }
  Integer lo(1), hi(2);
  while (ipow(hi, k) <= v) hi <<= 1;
  // invariant: lo^k <= v < hi^k
  while (hi - lo > 1) {
    Integer mid = (lo + hi) / 2;
    if (ipow(mid, k) <= v) lo = mid; else hi = mid;
  }
  if (exact) *exact = (ipow(lo, k) == v);
  return lo;
}

}  // namespace hforge
