#include "skein/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace skein {

LaurentPoly LaurentPoly::constant(const Rational& c, VarNames vars) {
  LaurentPoly p(std::move(vars));
  if (!c.is_zero()) p.t_[{0, 0}] = c;
  return p;
}

LaurentPoly LaurentPoly::monomial(const Rational& c, long a, long b,
                                  VarNames vars) {
  LaurentPoly p(std::move(vars));
  if (!c.is_zero()) p.t_[{a, b}] = c;
  return p;
}

Rational LaurentPoly::coefficient(long a, long b) const {
  auto it = t_.find({a, b});
  return it == t_.end() ? Rational(0) : it->second;
}

VarNames LaurentPoly::merged_vars(const LaurentPoly& a, const LaurentPoly& b) {
  // A constant is at home in any ring; otherwise names must agree.
  if (a.is_constant()) return b.vars_;
  if (b.is_constant()) return a.vars_;
  if (a.vars_ != b.vars_)
    throw std::domain_error("variable mismatch: (" + a.vars_.first + "," +
                            a.vars_.second + ") vs (" + b.vars_.first + "," +
                            b.vars_.second + ")");
  return a.vars_;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(vars_);
  for (const auto& [e, c] : t_) p.t_[e] = -c;
  return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  vars_ = merged_vars(*this, o);
  for (const auto& [e, c] : o.t_) {
    auto it = t_.find(e);
    if (it == t_.end()) {
      t_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  return *this += -o;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly p(LaurentPoly::merged_vars(a, b));
  for (const auto& [ea, ca] : a.t_) {
    for (const auto& [eb, cb] : b.t_) {
      LaurentPoly::Exp e{ea.first + eb.first, ea.second + eb.second};
      auto it = p.t_.find(e);
      if (it == p.t_.end()) {
        Rational c = ca * cb;
        if (!c.is_zero()) p.t_[e] = c;
      } else {
        it->second += ca * cb;
        if (it->second.is_zero()) p.t_.erase(it);
      }
    }
  }
  return p;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
  LaurentPoly p(vars_);
  if (c.is_zero()) return p;
  for (const auto& [e, v] : t_) p.t_[e] = v * c;
  return p;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly acc = one(vars_);
  LaurentPoly base = *this;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1u;
  }
  return acc;
}

namespace {
std::complex<double> cpow(const std::complex<double>& x, long e) {
  if (e == 0) return {1.0, 0.0};
  long n = e < 0 ? -e : e;
  std::complex<double> acc{1.0, 0.0}, base = x;
  while (n > 0) {
    if (n & 1) acc *= base;
    base *= base;
    n >>= 1;
  }
  return e < 0 ? std::complex<double>{1.0, 0.0} / acc : acc;
}
}  // namespace

std::complex<double> LaurentPoly::eval(const std::complex<double>& x,
                                       const std::complex<double>& y) const {
  std::complex<double> acc{0.0, 0.0};
  for (const auto& [e, c] : t_)
    acc += c.to_double() * cpow(x, e.first) * cpow(y, e.second);
  return acc;
}

LaurentPoly LaurentPoly::substitute_power(long N) const {
  LaurentPoly p(vars_);
  for (const auto& [e, c] : t_) {
    Exp ne{e.first + N * e.second, 0};
    auto it = p.t_.find(ne);
    if (it == p.t_.end()) {
      p.t_[ne] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) p.t_.erase(it);
    }
  }
  return p;
}

LaurentPoly LaurentPoly::invert_variables() const {
  LaurentPoly p(vars_);
  for (const auto& [e, c] : t_) p.t_[{-e.first, -e.second}] = c;
  return p;
}

LaurentPoly LaurentPoly::map_first_var(int c, long k, VarNames new_vars) const {
  if (c != 1 && c != -1)
    throw std::invalid_argument("map_first_var: sign must be +-1");
  LaurentPoly p(std::move(new_vars));
  for (const auto& [e, v] : t_) {
    if (e.second != 0)
      throw std::domain_error("map_first_var: polynomial is not univariate");
    Rational nv = (c == -1 && (e.first % 2 != 0)) ? -v : v;
    Exp ne{k * e.first, 0};
    auto it = p.t_.find(ne);
    if (it == p.t_.end()) {
      if (!nv.is_zero()) p.t_[ne] = nv;
    } else {
      it->second += nv;
      if (it->second.is_zero()) p.t_.erase(it);
    }
  }
  return p;
}

long LaurentPoly::min_exp_first() const {
  long m = 0;
  bool seen = false;
  for (const auto& [e, c] : t_) {
    (void)c;
    if (!seen || e.first < m) m = e.first;
    seen = true;
  }
  return m;
}

long LaurentPoly::min_exp_second() const {
  long m = 0;
  bool seen = false;
  for (const auto& [e, c] : t_) {
    (void)c;
    if (!seen || e.second < m) m = e.second;
    seen = true;
  }
  return m;
}

Rational LaurentPoly::content() const {
  if (t_.empty()) return Rational(1);
  mpz_class g = 0, l = 1;
  for (const auto& [e, c] : t_) {
    (void)e;
    mpz_class n = c.num();
    mpz_class d = c.den();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
  }
  return Rational(mpq_class(g, l));
}

Rational LaurentPoly::leading_coefficient() const {
  if (t_.empty()) return Rational(0);
  return t_.rbegin()->second;
}

LaurentPoly LaurentPoly::divided_by_monomial(long a, long b,
                                             const Rational& c) const {
  if (c.is_zero()) throw std::domain_error("division by zero monomial");
  LaurentPoly p(vars_);
  for (const auto& [e, v] : t_) p.t_[{e.first - a, e.second - b}] = v / c;
  return p;
}

std::optional<LaurentPoly> LaurentPoly::divided_exactly(
    const LaurentPoly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  if (is_zero()) return LaurentPoly(vars_);
  // Shift both operands to honest polynomials; monomials are units, so
  // Laurent divisibility reduces to polynomial divisibility up to a shift.
  const long na = min_exp_first(), nb = min_exp_second();
  const long da = divisor.min_exp_first(), db = divisor.min_exp_second();
  LaurentPoly rem = divided_by_monomial(na, nb, Rational(1));
  const LaurentPoly d0 = divisor.divided_by_monomial(da, db, Rational(1));
  const auto dlead = d0.t_.rbegin();
  LaurentPoly quotient(vars_);
  long steps = 0;
  while (!rem.is_zero()) {
    if (++steps > 100000) return std::nullopt;
    const auto rlead = rem.t_.rbegin();
    const long ea = rlead->first.first - dlead->first.first;
    const long eb = rlead->first.second - dlead->first.second;
    // When the input is divisible, every leading monomial of the running
    // remainder is a multiple of the divisor's; a failure here certifies a
    // nonzero remainder.
    if (ea < 0 || eb < 0) return std::nullopt;
    const LaurentPoly t =
        LaurentPoly::monomial(rlead->second / dlead->second, ea, eb, vars_);
    quotient += t;
    rem -= t * d0;
  }
  return quotient.divided_by_monomial(da - na, db - nb, Rational(1));
}

std::string LaurentPoly::to_string() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << it->second.to_string() << "*" << vars_.first << "^"
       << it->first.first << "*" << vars_.second << "^" << it->first.second;
  }
  return os.str();
}

namespace {
std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}
}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text, VarNames vars) {
  std::string body = trim(text);
  LaurentPoly p(vars);
  if (body.empty() || body == "0") return p;
  std::size_t pos = 0;
  while (pos < body.size()) {
    std::size_t next = body.find(" + ", pos);
    std::string term = body.substr(
        pos, next == std::string::npos ? std::string::npos : next - pos);
    pos = next == std::string::npos ? body.size() : next + 3;

    term = trim(term);
    std::vector<std::string> parts;
    std::size_t tp = 0;
    while (tp <= term.size()) {
      std::size_t star = term.find('*', tp);
      parts.push_back(
          term.substr(tp, star == std::string::npos ? std::string::npos
                                                    : star - tp));
      if (star == std::string::npos) break;
      tp = star + 1;
    }
    if (parts.size() != 3)
      throw std::invalid_argument("bad polynomial term: " + term);
    Rational c = Rational::from_string(parts[0]);
    auto read_var = [&](const std::string& piece,
                        const std::string& name) -> long {
      std::size_t caret = piece.find('^');
      if (caret == std::string::npos || trim(piece.substr(0, caret)) != name)
        throw std::invalid_argument("bad variable piece: " + piece);
      return std::stol(trim(piece.substr(caret + 1)));
    };
    long a = read_var(trim(parts[1]), vars.first);
    long b = read_var(trim(parts[2]), vars.second);
    p += monomial(c, a, b, vars);
  }
  return p;
}

void LaurentPoly::set_term(long a, long b, const Rational& c) {
  if (c.is_zero())
    t_.erase({a, b});
  else
    t_[{a, b}] = c;
}

LaurentPoly quantum_integer(long n) {
  if (n < 0) throw std::invalid_argument("quantum_integer of negative n");
  LaurentPoly p(vars_qr());
  for (long k = 0; k < n; ++k) p += LaurentPoly::monomial(1, n - 1 - 2 * k, 0);
  return p;
}

}  // namespace skein
