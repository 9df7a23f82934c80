#pragma once

#include <complex>
#include <optional>
#include <vector>

#include "skein/laurent.hpp"

namespace skein {

// Numeric evaluation point with a per-call tolerance.
struct ComplexPoint {
  double re = 0.0;
  double im = 0.0;
  double tol = 1e-9;

  std::complex<double> value() const { return {re, im}; }
  static ComplexPoint of(std::complex<double> z, double tol = 1e-9) {
    return {z.real(), z.imag(), tol};
  }
};

// Element of the fraction field of bivariate Laurent polynomials.
// No canonical gcd form: equality is decided by cross-multiplication.
// A best-effort reduction (common monomial, rational content, denominator
// normalization) keeps representations small.
class RationalFunction {
 public:
  RationalFunction() : num_(vars_qr()), den_(LaurentPoly::one(vars_qr())) {}
  RationalFunction(const LaurentPoly& n)  // NOLINT: implicit by design
      : num_(n), den_(LaurentPoly::one(n.vars())) {}
  RationalFunction(const LaurentPoly& n, const LaurentPoly& d);
  RationalFunction(long n) : RationalFunction(LaurentPoly::constant(n)) {}

  static RationalFunction zero(VarNames vars = vars_qr()) {
    return RationalFunction(LaurentPoly(vars));
  }
  static RationalFunction one(VarNames vars = vars_qr()) {
    return RationalFunction(LaurentPoly::one(vars));
  }
  static RationalFunction from_rational(const Rational& c,
                                        VarNames vars = vars_qr()) {
    return RationalFunction(LaurentPoly::constant(c, vars));
  }

  const LaurentPoly& num() const { return num_; }
  const LaurentPoly& den() const { return den_; }
  const VarNames& vars() const { return num_.vars(); }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator-() const;
  friend RationalFunction operator+(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a,
                                    const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a,
                                    const RationalFunction& b);
  RationalFunction& operator+=(const RationalFunction& o) {
    *this = *this + o;
    return *this;
  }
  RationalFunction& operator-=(const RationalFunction& o) {
    *this = *this - o;
    return *this;
  }
  RationalFunction& operator*=(const RationalFunction& o) {
    *this = *this * o;
    return *this;
  }
  RationalFunction& operator/=(const RationalFunction& o) {
    *this = *this / o;
    return *this;
  }

  RationalFunction inverse() const;
  RationalFunction pow(long e) const;

  // Exact equality of field elements: num1*den2 == num2*den1.
  bool equals(const RationalFunction& o) const;
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.equals(b);
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) {
    return !a.equals(b);
  }

  std::complex<double> eval(const ComplexPoint& x, const ComplexPoint& y) const;

  RationalFunction substitute_power(long N) const;
  RationalFunction invert_variables() const;
  RationalFunction map_first_var(int c, long k, VarNames new_vars) const;

  std::string to_string() const;

 private:
  LaurentPoly num_;
  LaurentPoly den_;

  void reduce();
};

// Sums many fractions, grouping equal denominators first so chained
// additions do not compound denominator degree.
RationalFunction rf_sum(const std::vector<RationalFunction>& parts);

// Chebyshev-style quantum integer in a designated loop value:
// [0]=0, [1]=1, [k+1] = delta*[k] - [k-1].
RationalFunction loop_quantum_integer(long n, const RationalFunction& delta);

// delta = (r - r^-1)/(q - q^-1) over the (q, r) field.
RationalFunction circle_parameter_qr();

}  // namespace skein
