#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "skein/rational.hpp"

namespace skein {

// Variable names are data: the same kernel serves (q, r), (delta, gamma)
// and the single-variable bracket ring in A.
struct VarNames {
  std::string first;
  std::string second;

  friend bool operator==(const VarNames& a, const VarNames& b) {
    return a.first == b.first && a.second == b.second;
  }
  friend bool operator!=(const VarNames& a, const VarNames& b) {
    return !(a == b);
  }
  friend bool operator<(const VarNames& a, const VarNames& b) {
    return a.first != b.first ? a.first < b.first : a.second < b.second;
  }
};

inline const VarNames& vars_qr() {
  static const VarNames v{"q", "r"};
  return v;
}
inline const VarNames& vars_dg() {
  static const VarNames v{"delta", "gamma"};
  return v;
}
inline const VarNames& vars_bracket() {
  static const VarNames v{"A", "B"};
  return v;
}

// Laurent polynomial in two formal variables over the rationals.
// Invariant: no stored zero coefficients; equality is term-map equality.
class LaurentPoly {
 public:
  using Exp = std::pair<long, long>;
  using TermMap = std::map<Exp, Rational>;

  explicit LaurentPoly(VarNames vars = vars_qr()) : vars_(std::move(vars)) {}

  static LaurentPoly constant(const Rational& c, VarNames vars = vars_qr());
  static LaurentPoly monomial(const Rational& c, long a, long b,
                              VarNames vars = vars_qr());
  static LaurentPoly one(VarNames vars = vars_qr()) {
    return constant(Rational(1), std::move(vars));
  }
  // The two generators of the ring.
  static LaurentPoly var_first(VarNames vars = vars_qr()) {
    return monomial(Rational(1), 1, 0, std::move(vars));
  }
  static LaurentPoly var_second(VarNames vars = vars_qr()) {
    return monomial(Rational(1), 0, 1, std::move(vars));
  }

  const VarNames& vars() const { return vars_; }
  const TermMap& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  bool is_constant() const {
    return t_.empty() || (t_.size() == 1 && t_.begin()->first == Exp{0, 0});
  }
  Rational constant_value() const {
    if (t_.empty()) return Rational(0);
    if (!is_constant()) throw std::domain_error("polynomial is not constant");
    return t_.begin()->second;
  }
  std::size_t term_count() const { return t_.size(); }
  Rational coefficient(long a, long b) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    return a += b;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    return a -= b;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly& operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
  }
  LaurentPoly scaled(const Rational& c) const;
  LaurentPoly pow(unsigned e) const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.t_.empty() && b.t_.empty()) return true;
    return a.vars_ == b.vars_ && a.t_ == b.t_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }
  // Deterministic total order so polynomials can key containers.
  friend bool operator<(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.vars_ != b.vars_) return a.vars_ < b.vars_;
    return a.t_ < b.t_;
  }

  std::complex<double> eval(const std::complex<double>& x,
                            const std::complex<double>& y) const;

  // Substitute second variable := first^N, producing a poly in the first
  // variable alone.
  LaurentPoly substitute_power(long N) const;
  // (a, b) -> (-a, -b) on every exponent.
  LaurentPoly invert_variables() const;
  // Substitute first variable := c * X^k (c = +-1, second exponents must all
  // vanish), landing in the ring named by new_vars.
  LaurentPoly map_first_var(int c, long k, VarNames new_vars) const;

  long min_exp_first() const;
  long min_exp_second() const;
  // Positive rational d with (1/d) * this having coprime integer
  // coefficients.  Zero polynomial yields 1.
  Rational content() const;
  // Coefficient of the largest exponent pair.
  Rational leading_coefficient() const;
  LaurentPoly divided_by_monomial(long a, long b, const Rational& c) const;
  // Exact quotient when the divisor leaves no remainder; nothing otherwise.
  std::optional<LaurentPoly> divided_exactly(const LaurentPoly& divisor) const;

  // `c*q^a*r^b` terms joined with " + ", sorted by descending (a, b).
  std::string to_string() const;
  static LaurentPoly parse(const std::string& text, VarNames vars = vars_qr());

  void set_term(long a, long b, const Rational& c);  // for builders

 private:
  VarNames vars_;
  TermMap t_;

  static VarNames merged_vars(const LaurentPoly& a, const LaurentPoly& b);
};

// [n] = sum_{k=0}^{n-1} q^{n-1-2k}; [0] = 0.
LaurentPoly quantum_integer(long n);

}  // namespace skein
