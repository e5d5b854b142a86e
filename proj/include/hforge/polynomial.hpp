#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hforge/rational.hpp"

namespace hforge {

// Univariate polynomial with exact rational coefficients, stored lowest
// degree first. Canonical form: no trailing zero coefficient, so the zero
// polynomial is the empty coefficient list and degree() == -1.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);

  static Polynomial constant(const Rational& c);
  static Polynomial linear_root(const Rational& r);  // x - r
  static Polynomial monomial(int degree, const Rational& coeff);

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int i) const;
  const Rational& leading() const;  // pre: not zero

  Rational eval(const Rational& x) const;
  Polynomial derivative() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);

  bool operator==(const Polynomial& o) const { return coeffs_ == o.coeffs_; }

  // Conventional highest-degree-first rendering, e.g. "x^2 - 9/2*x + 3".
  std::string pretty() const;

 private:
  std::vector<Rational> coeffs_;
};

Polynomial operator+(Polynomial a, const Polynomial& b);
Polynomial operator-(Polynomial a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Rational& c, Polynomial p);

// Exact division with remainder; pre: b nonzero.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

// Monic gcd (zero if both inputs are zero).
Polynomial poly_gcd(Polynomial a, Polynomial b);

// Monic polynomial with the same distinct roots. Pre: p nonzero.
Polynomial squarefree_part(const Polynomial& p);

// Exact division by (x - r); pre: p(r) == 0.
Polynomial divide_linear_root(const Polynomial& p, const Rational& r);

// Sturm chain of a squarefree polynomial of degree >= 1.
std::vector<Polynomial> sturm_chain(const Polynomial& squarefree);

int sign_variations(std::span<const Polynomial> chain, const Rational& x);

// Number of distinct real roots of p in the open interval (lo, hi).
// Throws ZeroPolynomial if p == 0, InvalidParams unless lo < hi.
long count_roots_open(const Polynomial& p, const Rational& lo, const Rational& hi);

}  // namespace hforge
