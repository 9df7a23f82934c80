#include "skein/ratfun.hpp"

#include <algorithm>
#include <map>

namespace skein {

RationalFunction::RationalFunction(const LaurentPoly& n, const LaurentPoly& d)
    : num_(n), den_(d) {
  if (den_.is_zero()) throw std::domain_error("rational function with denominator 0");
  // Force both parts into one ring up front.
  if (!num_.is_constant() && !den_.is_constant() && num_.vars() != den_.vars())
    throw std::domain_error("variable mismatch between numerator and denominator");
  if (num_.is_constant() && !den_.is_constant())
    num_ = LaurentPoly::constant(num_.constant_value(), den_.vars()) ;
  if (den_.is_constant() && !num_.is_constant())
    den_ = LaurentPoly::constant(den_.constant_value(), num_.vars());
  reduce();
}

void RationalFunction::reduce() {
  if (num_.is_zero()) {
    den_ = LaurentPoly::one(den_.vars());
    return;
  }
  // Shared monomial shift: afterwards both parts have min exponent >= 0 and
  // at least one of them touches 0 in each variable.
  long a = std::min(num_.min_exp_first(), den_.min_exp_first());
  long b = std::min(num_.min_exp_second(), den_.min_exp_second());
  if (a != 0 || b != 0) {
    num_ = num_.divided_by_monomial(a, b, Rational(1));
    den_ = den_.divided_by_monomial(a, b, Rational(1));
  }
  // Scale so the denominator has coprime integer coefficients with positive
  // leading coefficient.
  Rational scale = den_.content();
  if (den_.leading_coefficient().sign() < 0) scale = -scale;
  if (scale != Rational(1)) {
    num_ = num_.divided_by_monomial(0, 0, scale);
    den_ = den_.divided_by_monomial(0, 0, scale);
  }
  // A monomial denominator folds into the numerator.
  if (den_.term_count() == 1) {
    const auto& [e, c] = *den_.terms().begin();
    if (e.first != 0 || e.second != 0 || c != Rational(1)) {
      num_ = num_.divided_by_monomial(e.first, e.second, c);
      den_ = LaurentPoly::one(den_.vars());
    }
    return;
  }
  // So does any denominator that divides the numerator outright.
  if (auto quotient = num_.divided_exactly(den_)) {
    num_ = std::move(*quotient);
    den_ = LaurentPoly::one(den_.vars());
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return a + (-b);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw std::domain_error("rational function division by zero");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  RationalFunction acc = one(vars());
  RationalFunction base = *this;
  unsigned long n = static_cast<unsigned long>(e);
  while (n > 0) {
    if (n & 1ul) acc = acc * base;
    base = base * base;
    n >>= 1ul;
  }
  return acc;
}

bool RationalFunction::equals(const RationalFunction& o) const {
  return num_ * o.den_ == o.num_ * den_;
}

std::complex<double> RationalFunction::eval(const ComplexPoint& x,
                                            const ComplexPoint& y) const {
  std::complex<double> d = den_.eval(x.value(), y.value());
  double tol = std::max(x.tol, y.tol);
  if (std::abs(d) <= tol)
    throw PoleError("pole: denominator " + den_.to_string() +
                    " vanishes at evaluation point");
  return num_.eval(x.value(), y.value()) / d;
}

RationalFunction RationalFunction::substitute_power(long N) const {
  return RationalFunction(num_.substitute_power(N), den_.substitute_power(N));
}

RationalFunction RationalFunction::invert_variables() const {
  return RationalFunction(num_.invert_variables(), den_.invert_variables());
}

RationalFunction RationalFunction::map_first_var(int c, long k,
                                                 VarNames new_vars) const {
  return RationalFunction(num_.map_first_var(c, k, new_vars),
                          den_.map_first_var(c, k, new_vars));
}

std::string RationalFunction::to_string() const {
  if (den_ == LaurentPoly::one(den_.vars())) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

RationalFunction rf_sum(const std::vector<RationalFunction>& parts) {
  if (parts.empty()) return RationalFunction::zero();
  std::map<LaurentPoly, LaurentPoly> by_den;
  for (const auto& p : parts) {
    auto it = by_den.find(p.den());
    if (it == by_den.end())
      by_den.emplace(p.den(), p.num());
    else
      it->second += p.num();
  }
  RationalFunction acc = RationalFunction::zero(parts.front().vars());
  for (const auto& [den, num] : by_den)
    acc += RationalFunction(num, den);
  return acc;
}

RationalFunction loop_quantum_integer(long n, const RationalFunction& delta) {
  if (n < 0) throw std::invalid_argument("loop_quantum_integer of negative n");
  RationalFunction prev = RationalFunction::zero(delta.vars());
  RationalFunction cur = RationalFunction::one(delta.vars());
  if (n == 0) return prev;
  for (long k = 1; k < n; ++k) {
    RationalFunction next = delta * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

RationalFunction circle_parameter_qr() {
  LaurentPoly rminus = LaurentPoly::monomial(1, 0, 1) - LaurentPoly::monomial(1, 0, -1);
  LaurentPoly qminus = LaurentPoly::monomial(1, 1, 0) - LaurentPoly::monomial(1, -1, 0);
  return RationalFunction(rminus, qminus);
}

}  // namespace skein
