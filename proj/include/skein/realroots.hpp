#pragma once

#include <string>
#include <utility>
#include <vector>

#include "skein/rational.hpp"

namespace skein {

// Univariate polynomial over the rationals, dense ascending coefficients.
class RatPoly {
 public:
  RatPoly() = default;
  explicit RatPoly(std::vector<Rational> coeffs);

  static RatPoly constant(const Rational& c);
  static RatPoly monomial(const Rational& c, int k);

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if zero
  Rational coeff(int k) const;
  Rational leading() const;

  RatPoly operator-() const;
  friend RatPoly operator+(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator-(const RatPoly& a, const RatPoly& b);
  friend RatPoly operator*(const RatPoly& a, const RatPoly& b);
  RatPoly scaled(const Rational& k) const;

  friend bool operator==(const RatPoly& a, const RatPoly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const RatPoly& a, const RatPoly& b) {
    return !(a == b);
  }

  RatPoly derivative() const;
  Rational eval(const Rational& x) const;
  double eval_double(double x) const;

  // Euclidean division; divisor must be nonzero.
  std::pair<RatPoly, RatPoly> divmod(const RatPoly& d) const;

  // Divide out the rational content and make the leading coefficient
  // positive; zero stays zero.
  RatPoly primitive() const;

  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<Rational> c_;

  void trim();
};

RatPoly poly_gcd(RatPoly a, RatPoly b);
RatPoly squarefree_part(const RatPoly& p);

// Sturm machinery.  Roots are always counted for the squarefree part, so
// multiplicities never distort the counts.
std::vector<RatPoly> sturm_chain(const RatPoly& p);
int sign_variations(const std::vector<RatPoly>& chain, const Rational& x);
// Number of distinct real roots in the open interval (a, b); both endpoints
// must be non-roots (checked exactly).
int count_real_roots(const RatPoly& p, const Rational& a, const Rational& b);
// Subintervals of (a, b), each containing exactly one distinct root, each
// narrower than max_width.
std::vector<std::pair<Rational, Rational>> isolate_real_roots(
    const RatPoly& p, const Rational& a, const Rational& b,
    const Rational& max_width);

// Every real root x satisfies |x| <= bound.
Rational cauchy_root_bound(const RatPoly& p);

// Resultant of two polynomials in an outer variable whose coefficients are
// RatPolys (ascending outer degree), via the Sylvester determinant.
RatPoly sylvester_resultant(const std::vector<RatPoly>& A,
                            const std::vector<RatPoly>& B);

}  // namespace skein
