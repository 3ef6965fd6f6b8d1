#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "grassmor/rational.hpp"

namespace grassmor {

/// One term c * x^dx * y^dy.
struct Term {
  Rational coeff;
  int dx = 0;
  int dy = 0;
};

/// A homogeneous polynomial in x, y of a fixed degree with rational
/// coefficients. Position k of coeffs() holds the coefficient of
/// x^(degree-k) * y^k. The degree is part of the value: the zero polynomial
/// of degree 3 and the zero polynomial of degree 0 are different values.
class HomPoly {
 public:
  HomPoly() : HomPoly(0) {}
  explicit HomPoly(int degree);
  HomPoly(int degree, std::vector<Rational> coeffs);

  static HomPoly monomial(const Rational& c, int dx, int dy);
  static HomPoly zero(int degree) { return HomPoly(degree); }

  int degree() const { return degree_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  /// Coefficient of x^(degree-k) y^k.
  const Rational& coeff(int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }

  bool is_zero() const;
  /// Nonzero terms in descending x-exponent order.
  std::vector<Term> terms() const;
  /// The single nonzero term, if there is exactly one.
  std::optional<Term> single_term() const;

  Rational eval(const Rational& x0, const Rational& y0) const;

  /// Signed monomial sum, e.g. "x^3*y^2 - 2*y^5"; "0" for zero.
  std::string to_string() const;

  HomPoly operator-() const;
  HomPoly& operator+=(const HomPoly& other);
  HomPoly& operator-=(const HomPoly& other);
  HomPoly& operator*=(const Rational& c);

  friend HomPoly operator+(HomPoly p, const HomPoly& q) { return p += q; }
  friend HomPoly operator-(HomPoly p, const HomPoly& q) { return p -= q; }
  friend HomPoly operator*(HomPoly p, const Rational& c) { return p *= c; }
  friend HomPoly operator*(const Rational& c, HomPoly p) { return p *= c; }
  friend HomPoly operator*(const HomPoly& p, const HomPoly& q);

  friend bool operator==(const HomPoly& p, const HomPoly& q) {
    return p.degree_ == q.degree_ && p.coeffs_ == q.coeffs_;
  }

 private:
  int degree_;
  std::vector<Rational> coeffs_;
};

/// Adds c * x^dx * y^dy into p in place; dx + dy must equal p.degree().
void add_term(HomPoly& p, const Rational& c, int dx, int dy);

/// Splits p (degree a+b) as p = x^a * R + Q * y^b with deg R = b, deg Q = a.
/// R takes every term whose x-exponent is at least a (y-exponent <= b); Q
/// takes the rest, each of which has y-exponent > b.
std::pair<HomPoly, HomPoly> solve_split(const HomPoly& p, int a, int b);

}  // namespace grassmor
