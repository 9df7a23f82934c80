#include "skein/realroots.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace skein {

RatPoly::RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
  trim();
}

void RatPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

RatPoly RatPoly::constant(const Rational& c) { return RatPoly({c}); }

RatPoly RatPoly::monomial(const Rational& c, int k) {
  if (k < 0) throw std::domain_error("negative exponent in RatPoly");
  std::vector<Rational> v(static_cast<std::size_t>(k + 1), Rational(0));
  v.back() = c;
  return RatPoly(std::move(v));
}

Rational RatPoly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
  return c_[static_cast<std::size_t>(k)];
}

Rational RatPoly::leading() const {
  if (c_.empty()) return Rational(0);
  return c_.back();
}

RatPoly RatPoly::operator-() const {
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const Rational& x : c_) v.push_back(-x);
  return RatPoly(std::move(v));
}

RatPoly operator+(const RatPoly& a, const RatPoly& b) {
  std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()), Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i) v[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
  return RatPoly(std::move(v));
}

RatPoly operator-(const RatPoly& a, const RatPoly& b) { return a + (-b); }

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  if (a.is_zero() || b.is_zero()) return RatPoly();
  std::vector<Rational> v(a.c_.size() + b.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
  return RatPoly(std::move(v));
}

RatPoly RatPoly::scaled(const Rational& k) const {
  std::vector<Rational> v;
  v.reserve(c_.size());
  for (const Rational& x : c_) v.push_back(x * k);
  return RatPoly(std::move(v));
}

RatPoly RatPoly::derivative() const {
  if (c_.size() <= 1) return RatPoly();
  std::vector<Rational> v;
  v.reserve(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i)
    v.push_back(c_[i] * Rational(static_cast<long>(i)));
  return RatPoly(std::move(v));
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc(0);
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

double RatPoly::eval_double(double x) const {
  double acc = 0.0;
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i].to_double();
  return acc;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& d) const {
  if (d.is_zero()) throw std::domain_error("polynomial division by zero");
  RatPoly r = *this;
  std::vector<Rational> q(
      static_cast<std::size_t>(
          std::max(0, degree() - d.degree() + 1)),
      Rational(0));
  while (!r.is_zero() && r.degree() >= d.degree()) {
    const int shift = r.degree() - d.degree();
    const Rational factor = r.leading() / d.leading();
    q[static_cast<std::size_t>(shift)] = factor;
    r = r - d * RatPoly::monomial(factor, shift);
  }
  return {RatPoly(std::move(q)), r};
}

RatPoly RatPoly::primitive() const {
  if (is_zero()) return *this;
  // Scale by lcm(denominators)/gcd(numerators): integer coprime
  // coefficients, then fix the sign so the lead is positive.
  mpz_class num_gcd = 0, den_lcm = 1;
  for (const Rational& x : c_) {
    if (x.is_zero()) continue;
    mpz_class n = x.num();
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), n.get_mpz_t());
    mpz_class d = x.den();
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
  }
  Rational scale{mpq_class(den_lcm, num_gcd)};
  if (leading().sign() < 0) scale = -scale;
  return scaled(scale);
}

std::string RatPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << c_[i].to_string();
    if (i > 0) os << "*" << var << "^" << i;
  }
  return os.str();
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  // Normalize to a monic representative.
  return a.scaled(Rational(1) / a.leading());
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.is_zero() || p.degree() == 0) return p;
  RatPoly g = poly_gcd(p, p.derivative());
  if (g.degree() == 0) return p;
  return p.divmod(g).first;
}

std::vector<RatPoly> sturm_chain(const RatPoly& p) {
  std::vector<RatPoly> chain;
  RatPoly f0 = squarefree_part(p);
  if (f0.is_zero()) return chain;
  chain.push_back(f0);
  RatPoly f1 = f0.derivative();
  while (!f1.is_zero()) {
    chain.push_back(f1);
    RatPoly rem = chain[chain.size() - 2].divmod(f1).second;
    f1 = -rem;
  }
  return chain;
}

int sign_variations(const std::vector<RatPoly>& chain, const Rational& x) {
  int variations = 0;
  int prev = 0;
  for (const RatPoly& f : chain) {
    const int s = f.eval(x).sign();
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

int count_real_roots(const RatPoly& p, const Rational& a, const Rational& b) {
  if (p.is_zero()) throw std::domain_error("root count of the zero polynomial");
  if (!(a < b)) throw std::domain_error("empty interval");
  const RatPoly sf = squarefree_part(p);
  if (sf.eval(a).is_zero() || sf.eval(b).is_zero())
    throw std::domain_error("interval endpoint is a root");
  const std::vector<RatPoly> chain = sturm_chain(p);
  return sign_variations(chain, a) - sign_variations(chain, b);
}

namespace {

void isolate_rec(const std::vector<RatPoly>& chain, const RatPoly& sf,
                 const Rational& a, const Rational& b,
                 const Rational& max_width,
                 std::vector<std::pair<Rational, Rational>>& out) {
  const int count = sign_variations(chain, a) - sign_variations(chain, b);
  if (count == 0) return;
  if (count == 1 && b - a < max_width) {
    out.emplace_back(a, b);
    return;
  }
  Rational mid = (a + b) / Rational(2);
  // Nudge off a root so the Sturm counts at mid stay clean.
  while (sf.eval(mid).is_zero()) mid = (a + mid) / Rational(2);
  isolate_rec(chain, sf, a, mid, max_width, out);
  isolate_rec(chain, sf, mid, b, max_width, out);
}

}  // namespace

std::vector<std::pair<Rational, Rational>> isolate_real_roots(
    const RatPoly& p, const Rational& a, const Rational& b,
    const Rational& max_width) {
  if (max_width.sign() <= 0) throw std::domain_error("width must be positive");
  const RatPoly sf = squarefree_part(p);
  if (sf.eval(a).is_zero() || sf.eval(b).is_zero())
    throw std::domain_error("interval endpoint is a root");
  const std::vector<RatPoly> chain = sturm_chain(p);
  std::vector<std::pair<Rational, Rational>> out;
  isolate_rec(chain, sf, a, b, max_width, out);
  return out;
}

Rational cauchy_root_bound(const RatPoly& p) {
  if (p.is_zero() || p.degree() == 0) return Rational(1);
  Rational biggest(0);
  const Rational lead = p.leading().abs();
  for (int k = 0; k < p.degree(); ++k) {
    Rational ratio = p.coeff(k).abs() / lead;
    if (biggest < ratio) biggest = ratio;
  }
  return Rational(1) + biggest;
}

namespace {

RatPoly det_rec(const std::vector<std::vector<RatPoly>>& m,
                std::vector<int>& cols, int row) {
  const int size = static_cast<int>(m.size());
  if (row == size) return RatPoly::constant(Rational(1));
  RatPoly acc;
  int parity = 0;
  for (std::size_t ci = 0; ci < cols.size(); ++ci) {
    const int col = cols[ci];
    if (col < 0) continue;
    const RatPoly& entry = m[static_cast<std::size_t>(row)]
                            [static_cast<std::size_t>(col)];
    if (!entry.is_zero()) {
      cols[ci] = -1;
      RatPoly minor = det_rec(m, cols, row + 1);
      cols[ci] = col;
      RatPoly term = entry * minor;
      acc = parity % 2 == 0 ? acc + term : acc - term;
    }
    ++parity;
  }
  return acc;
}

}  // namespace

RatPoly sylvester_resultant(const std::vector<RatPoly>& A,
                            const std::vector<RatPoly>& B) {
  const int m = static_cast<int>(A.size()) - 1;
  const int n = static_cast<int>(B.size()) - 1;
  if (m < 1 || n < 1)
    throw std::domain_error("resultant needs positive outer degrees");
  if (A.back().is_zero() || B.back().is_zero())
    throw std::domain_error("leading outer coefficient vanishes");
  const int size = m + n;
  std::vector<std::vector<RatPoly>> mat(
      static_cast<std::size_t>(size),
      std::vector<RatPoly>(static_cast<std::size_t>(size)));
  // n rows of A's coefficients (descending), then m rows of B's.
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= m; ++j)
      mat[static_cast<std::size_t>(i)][static_cast<std::size_t>(i + j)] =
          A[static_cast<std::size_t>(m - j)];
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n; ++j)
      mat[static_cast<std::size_t>(n + i)][static_cast<std::size_t>(i + j)] =
          B[static_cast<std::size_t>(n - j)];
  std::vector<int> cols(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) cols[static_cast<std::size_t>(i)] = i;
  return det_rec(mat, cols, 0);
}

}  // namespace skein
