#include "hforge/polynomial.hpp"

#include <utility>

namespace hforge {

namespace {

void strip_trailing_zeros(std::vector<Rational>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

Polynomial monic(const Polynomial& p) {
  if (p.is_zero() || p.leading() == 1) return p;
  return Rational(1) / p.leading() * p;
}

// Scale so the leading coefficient has absolute value 1 but keeps its sign.
// Positive scaling preserves the sign of every evaluation, which is all the
// Sturm chain needs; it also keeps intermediate coefficients small.
Polynomial positive_normalize(const Polynomial& p) {
  if (p.is_zero()) return p;
  Rational lead = p.leading();
  if (lead < 0) lead = -lead;
  if (lead == 1) return p;
  return Rational(1) / lead * p;
}

}  // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  strip_trailing_zeros(coeffs_);
}

Polynomial Polynomial::constant(const Rational& c) {
  if (c == 0) return Polynomial();
  return Polynomial({c});
}

Polynomial Polynomial::linear_root(const Rational& r) {
  return Polynomial({-r, Rational(1)});
}

Polynomial Polynomial::monomial(int degree, const Rational& coeff) {
  if (degree < 0) throw Error(ErrorCode::InvalidParams, "negative monomial degree");
  if (coeff == 0) return Polynomial();
  std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
  c.back() = coeff;
  return Polynomial(std::move(c));
}

Rational Polynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
  return coeffs_[static_cast<std::size_t>(i)];
}

const Rational& Polynomial::leading() const {
  if (is_zero()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero polynomial");
  return coeffs_.back();
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) return Polynomial();
  std::vector<Rational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    d[i - 1] = Rational(static_cast<long>(i)) * coeffs_[i];
  }
  return Polynomial(std::move(d));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> c(coeffs_);
  for (auto& x : c) x = -x;
  return Polynomial(std::move(c));
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  strip_trailing_zeros(coeffs_);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (coeffs_.size() < o.coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rational(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  strip_trailing_zeros(coeffs_);
  return *this;
}

Polynomial operator+(Polynomial a, const Polynomial& b) { a += b; return a; }
Polynomial operator-(Polynomial a, const Polynomial& b) { a -= b; return a; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial();
  const auto& ca = a.coefficients();
  const auto& cb = b.coefficients();
  std::vector<Rational> c(ca.size() + cb.size() - 1, Rational(0));
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) c[i + j] += ca[i] * cb[j];
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& c, Polynomial p) {
  std::vector<Rational> v(p.coefficients());
  for (auto& x : v) x *= c;
  return Polynomial(std::move(v));
}

std::string Polynomial::pretty() const {
  if (is_zero()) return "0";
  std::string out;
  for (int d = degree(); d >= 0; --d) {
    Rational c = coefficient(d);
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) { out += "-"; c = -c; }
    } else {
      out += (c < 0) ? " - " : " + ";
      if (c < 0) c = -c;
    }
    bool unit = (c == 1) && d > 0;
    if (!unit) out += rational_string(c);
    if (d > 0) {
      if (!unit) out += "*";
      out += "x";
      if (d > 1) out += "^" + std::to_string(d);
    }
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "polynomial division by zero");
  int da = a.degree(), db = b.degree();
  if (da < db) return {Polynomial(), a};
  std::vector<Rational> rem = a.coefficients();
  std::vector<Rational> quo(static_cast<std::size_t>(da - db) + 1, Rational(0));
  const Rational& lead = b.leading();
  const auto& cb = b.coefficients();
  for (int i = da; i >= db; --i) {
    Rational c = rem[static_cast<std::size_t>(i)] / lead;
    if (c == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(i - db + j)] -= c * cb[static_cast<std::size_t>(j)];
    }
  }
  rem.resize(static_cast<std::size_t>(db));
  return {Polynomial(std::move(quo)), Polynomial(std::move(rem))};
}

Polynomial poly_gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = positive_normalize(r);
  }
  return monic(a);
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "squarefree part of zero polynomial");
  if (p.degree() == 0) return Polynomial::constant(Rational(1));
  Polynomial g = poly_gcd(p, p.derivative());
  if (g.degree() <= 0) return monic(p);
  auto [q, r] = divmod(p, g);
  if (!r.is_zero()) throw Error(ErrorCode::Internal, "inexact squarefree division");
  return monic(q);
}

Polynomial divide_linear_root(const Polynomial& p, const Rational& r) {
  // synthetic division, highest coefficient first
  const auto& c = p.coefficients();
  if (c.empty()) throw Error(ErrorCode::ZeroPolynomial, "root division of zero polynomial");
  std::vector<Rational> q(c.size() - 1, Rational(0));
  Rational carry(0);
  for (std::size_t i = c.size(); i-- > 0;) {
    Rational cur = c[i] + carry;
    if (i == 0) {
      if (cur != 0) throw Error(ErrorCode::Internal, "divide_linear_root: not a root");
      break;
    }
    q[i - 1] = cur;
    carry = cur * r;
  }
  return Polynomial(std::move(q));
}

std::vector<Polynomial> sturm_chain(const Polynomial& squarefree) {
  if (squarefree.degree() < 1) {
    throw Error(ErrorCode::InvalidParams, "sturm chain needs degree >= 1");
  }
  std::vector<Polynomial> chain;
  chain.push_back(squarefree);
  chain.push_back(squarefree.derivative());
  while (chain.back().degree() >= 1) {
    Polynomial r = divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;  // only hit when the input was not squarefree
    chain.push_back(positive_normalize(-r));
  }
  return chain;
}

int sign_variations(std::span<const Polynomial> chain, const Rational& x) {
  int variations = 0;
  int prev = 0;
  for (const Polynomial& p : chain) {
    int s = p.eval(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

long count_roots_open(const Polynomial& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "root count of zero polynomial");
  if (!(lo < hi)) throw Error(ErrorCode::InvalidParams, "root count needs lo < hi");
  Polynomial q = squarefree_part(p);
  if (q.degree() <= 0) return 0;
  // The Sturm count over [lo, hi] includes hi and excludes lo when they are
  // roots; stripping both endpoint roots first makes the interval fully open.
  if (q.eval(lo) == 0) q = divide_linear_root(q, lo);
  if (q.degree() >= 1 && q.eval(hi) == 0) q = divide_linear_root(q, hi);
  if (q.degree() <= 0) return 0;
  std::vector<Polynomial> chain = sturm_chain(q);
  return sign_variations(chain, lo) - sign_variations(chain, hi);
}

}  // namespace hforge
