#include "skein/young.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace skein {

YoungDiagram::YoungDiagram(std::vector<int> rows) : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::domain_error("empty diagram");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] < 1) throw std::domain_error("row lengths must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1])
      throw std::domain_error("rows must be weakly decreasing");
  }
}

int YoungDiagram::cell_count() const {
  int total = 0;
  for (int r : rows_) total += r;
  return total;
}

YoungDiagram YoungDiagram::transpose() const {
  std::vector<int> cols(static_cast<std::size_t>(rows_[0]), 0);
  for (int r : rows_)
    for (int j = 0; j < r; ++j) ++cols[static_cast<std::size_t>(j)];
  return YoungDiagram(std::move(cols));
}

std::string YoungDiagram::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0) os << ",";
    os << rows_[i];
  }
  return os.str();
}

YoungDiagram YoungDiagram::parse(const std::string& text) {
  std::vector<int> rows;
  std::istringstream is(text);
  std::string part;
  while (std::getline(is, part, ',')) {
    if (part.empty()) throw std::domain_error("bad diagram text: " + text);
    rows.push_back(std::stoi(part));
  }
  return YoungDiagram(std::move(rows));
}

std::vector<Cell> cells(const YoungDiagram& lambda) {
  const auto& rows = lambda.rows();
  const std::vector<int> cols = lambda.transpose().rows();
  std::vector<Cell> out;
  for (int i = 1; i <= static_cast<int>(rows.size()); ++i) {
    for (int j = 1; j <= rows[static_cast<std::size_t>(i - 1)]; ++j) {
      Cell c;
      c.i = i;
      c.j = j;
      c.content = j - i;
      c.hook = (rows[static_cast<std::size_t>(i - 1)] - j) +
               (cols[static_cast<std::size_t>(j - 1)] - i) + 1;
      out.push_back(c);
    }
  }
  return out;
}

long num_standard_tableaux(const YoungDiagram& lambda) {
  // n! / prod(hooks), kept exact along the way.
  Rational acc(1);
  long n = 0;
  for (const Cell& c : cells(lambda)) {
    ++n;
    acc = acc * Rational(n, c.hook);
  }
  if (acc.den() != 1)
    throw std::logic_error("hook length formula gave a non-integer");
  return static_cast<long>(acc.num().get_si());
}

namespace {

void partitions_rec(int remaining, int cap, std::vector<int>& prefix,
                    std::vector<YoungDiagram>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int next = std::min(cap, remaining); next >= 1; --next) {
    prefix.push_back(next);
    partitions_rec(remaining - next, next, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<YoungDiagram> partitions_of(int n) {
  if (n < 1) throw std::domain_error("partitions need n >= 1");
  std::vector<YoungDiagram> out;
  std::vector<int> prefix;
  partitions_rec(n, n, prefix, out);
  return out;
}

RationalFunction quantum_trace(const YoungDiagram& lambda) {
  LaurentPoly num = LaurentPoly::one(vars_qr());
  LaurentPoly den = LaurentPoly::one(vars_qr());
  for (const Cell& c : cells(lambda)) {
    num = num * (LaurentPoly::monomial(Rational(1), c.content, 1) -
                 LaurentPoly::monomial(Rational(1), -c.content, -1));
    den = den * (LaurentPoly::monomial(Rational(1), c.hook, 0) -
                 LaurentPoly::monomial(Rational(1), -c.hook, 0));
  }
  return RationalFunction(num, den);
}

ComplexPoint trace_numeric(const YoungDiagram& lambda, const ComplexPoint& q0,
                           const ComplexPoint& r0) {
  const std::complex<double> q = q0.value();
  const std::complex<double> r = r0.value();
  const double tol = std::max(q0.tol, r0.tol);
  std::complex<double> acc(1.0, 0.0);
  for (const Cell& c : cells(lambda)) {
    std::complex<double> qc = std::pow(q, c.content);
    std::complex<double> den = std::pow(q, c.hook) - std::pow(q, -c.hook);
    if (std::abs(den) <= tol)
      throw PoleError("hook factor vanishes at the given q");
    acc *= (r * qc - (1.0 / r) / qc) / den;
  }
  return ComplexPoint::of(acc, tol);
}

namespace {

// Sign of [k] at q = e^{i pi / m}: zero iff k = 0 mod m, positive iff the
// residue of k mod 2m lies strictly inside (0, m).
int root_sign(long k, long m) {
  long res = ((k % (2 * m)) + 2 * m) % (2 * m);
  if (res % m == 0) return 0;
  return res < m ? 1 : -1;
}

double root_value(long k, long m) {
  return std::sin(static_cast<double>(k) * std::numbers::pi /
                  static_cast<double>(m));
}

}  // namespace

SpecializedTrace trace_at_specialization(const YoungDiagram& lambda, long N,
                                         std::optional<long> m,
                                         std::optional<double> q0) {
  if (m.has_value() == q0.has_value())
    throw std::domain_error("give exactly one of m, q0");
  SpecializedTrace out;
  out.sign = 1;
  out.value = 1.0;

  if (m.has_value()) {
    const long mm = *m;
    if (mm < 2) throw std::domain_error("root-of-unity order must be >= 2");
    for (const Cell& c : cells(lambda)) {
      if (c.hook % mm == 0) {
        out.ill_defined = true;
        out.sign = 0;
        out.value = 0.0;
        return out;
      }
      const long k = N + c.content;
      out.sign *= root_sign(k, mm) * root_sign(c.hook, mm);
      out.value *= root_value(k, mm) / root_value(c.hook, mm);
    }
    return out;
  }

  const double q = *q0;
  if (q < 1.0) throw std::domain_error("real specialization needs q >= 1");
  auto integer_sign = [](long k) { return k > 0 ? 1 : (k < 0 ? -1 : 0); };
  for (const Cell& c : cells(lambda)) {
    const long k = N + c.content;
    out.sign *= integer_sign(k);  // hooks are positive, signs come from tops
    if (q == 1.0) {
      out.value *= static_cast<double>(k) / static_cast<double>(c.hook);
    } else {
      out.value *= (std::pow(q, static_cast<double>(k)) -
                    std::pow(q, static_cast<double>(-k))) /
                   (std::pow(q, static_cast<double>(c.hook)) -
                    std::pow(q, static_cast<double>(-c.hook)));
    }
  }
  return out;
}

}  // namespace skein
