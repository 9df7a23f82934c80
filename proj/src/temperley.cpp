#include "skein/temperley.hpp"

#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace skein {

namespace {

void check_strand_count(int n) {
  if (n < 0) throw std::domain_error("strand count must be nonnegative");
}

}  // namespace

PlanarMatching::PlanarMatching(int n, std::vector<int> partner)
    : n_(n), partner_(std::move(partner)) {
  check_strand_count(n);
  if (partner_.size() != static_cast<std::size_t>(2 * n + 1))
    throw std::domain_error("pairing has wrong size");
  for (int p = 1; p <= 2 * n_; ++p) {
    int q = partner_[static_cast<std::size_t>(p)];
    if (q < 1 || q > 2 * n_ || q == p)
      throw std::domain_error("pairing is not a fixed-point-free involution");
    if (partner_[static_cast<std::size_t>(q)] != p)
      throw std::domain_error("pairing is not an involution");
  }
  if (!noncrossing()) throw std::domain_error("pairing has crossing pairs");
}

PlanarMatching PlanarMatching::identity(int n) {
  std::vector<int> partner(static_cast<std::size_t>(2 * n + 1), 0);
  for (int k = 1; k <= n; ++k) {
    partner[static_cast<std::size_t>(k)] = 2 * n + 1 - k;
    partner[static_cast<std::size_t>(2 * n + 1 - k)] = k;
  }
  return PlanarMatching(n, std::move(partner));
}

PlanarMatching PlanarMatching::cupcap(int n, int i) {
  if (i < 1 || i > n - 1) throw std::domain_error("cup-cap index out of range");
  PlanarMatching id = identity(n);
  std::vector<int> partner = id.partner_;
  auto join = [&partner](int a, int b) {
    partner[static_cast<std::size_t>(a)] = b;
    partner[static_cast<std::size_t>(b)] = a;
  };
  join(i, i + 1);
  join(2 * n - i, 2 * n + 1 - i);
  return PlanarMatching(n, std::move(partner));
}

bool PlanarMatching::noncrossing() const {
  for (int a = 1; a <= 2 * n_; ++a) {
    int b = partner_[static_cast<std::size_t>(a)];
    if (b <= a) continue;
    for (int c = a + 1; c < b; ++c) {
      int d = partner_[static_cast<std::size_t>(c)];
      if (d < a || d > b) return false;
    }
  }
  return true;
}

namespace {

// Recursive enumerator over a worklist of disjoint index ranges: the first
// point of the active range picks a mate at even distance, splitting the
// range in two.
void enumerate_segments(std::vector<std::pair<int, int>> segs,
                        std::vector<int>& partner,
                        std::vector<PlanarMatching>& out, int n) {
  while (!segs.empty() && segs.back().first > segs.back().second)
    segs.pop_back();
  if (segs.empty()) {
    out.emplace_back(n, partner);
    return;
  }
  auto [lo, hi] = segs.back();
  segs.pop_back();
  for (int mate = lo + 1; mate <= hi; mate += 2) {
    partner[static_cast<std::size_t>(lo)] = mate;
    partner[static_cast<std::size_t>(mate)] = lo;
    auto next = segs;
    next.emplace_back(mate + 1, hi);
    next.emplace_back(lo + 1, mate - 1);
    enumerate_segments(std::move(next), partner, out, n);
  }
}

}  // namespace

std::vector<PlanarMatching> PlanarMatching::enumerate(int n) {
  check_strand_count(n);
  std::vector<PlanarMatching> out;
  std::vector<int> partner(static_cast<std::size_t>(2 * n + 1), 0);
  enumerate_segments({{1, 2 * n}}, partner, out, n);
  return out;
}

std::string PlanarMatching::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int a = 1; a <= 2 * n_; ++a) {
    int b = partner_[static_cast<std::size_t>(a)];
    if (b <= a) continue;
    if (!first) os << ",";
    first = false;
    os << "(" << a << "," << b << ")";
  }
  return os.str();
}

PlanarMatching PlanarMatching::parse(const std::string& text, int n) {
  std::vector<int> partner(static_cast<std::size_t>(2 * n + 1), 0);
  std::size_t pos = 0;
  auto expect = [&](char c) {
    if (pos >= text.size() || text[pos] != c)
      throw std::domain_error("bad matching text: " + text);
    ++pos;
  };
  auto read_int = [&]() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw std::domain_error("bad matching text: " + text);
    return std::stoi(text.substr(start, pos - start));
  };
  bool first = true;
  while (pos < text.size()) {
    if (!first) expect(',');
    first = false;
    expect('(');
    int a = read_int();
    expect(',');
    int b = read_int();
    expect(')');
    if (a < 1 || a > 2 * n || b < 1 || b > 2 * n)
      throw std::domain_error("matching point out of range: " + text);
    partner[static_cast<std::size_t>(a)] = b;
    partner[static_cast<std::size_t>(b)] = a;
  }
  return PlanarMatching(n, std::move(partner));
}

std::pair<PlanarMatching, int> stack_diagrams(const PlanarMatching& x,
                                              const PlanarMatching& y) {
  if (x.strands() != y.strands())
    throw std::domain_error("strand count mismatch in composition");
  const int n = x.strands();
  const int total = 4 * n;  // nodes: layer 0 = x points, layer 1 = y points
  auto node = [n](int layer, int p) { return layer * 2 * n + (p - 1); };
  auto is_final = [n](int layer, int p) {
    return (layer == 0 && p <= n) || (layer == 1 && p > n);
  };
  // Glue partner on internal nodes: x top point t meets y bottom 2n+1-t.
  auto glue = [n](int layer, int p) {
    return std::pair<int, int>(1 - layer, 2 * n + 1 - p);
  };
  auto mate = [&](int layer, int p) {
    return layer == 0 ? x.partner(p) : y.partner(p);
  };

  std::vector<bool> visited(static_cast<std::size_t>(total), false);
  std::vector<int> result(static_cast<std::size_t>(2 * n + 1), 0);

  // Walk each open path from a final endpoint to its other end.
  for (int layer = 0; layer < 2; ++layer) {
    for (int p = 1; p <= 2 * n; ++p) {
      if (!is_final(layer, p)) continue;
      if (visited[static_cast<std::size_t>(node(layer, p))]) continue;
      int cl = layer, cp = p;
      visited[static_cast<std::size_t>(node(cl, cp))] = true;
      // First step is always along the diagram's own pairing.
      int np = mate(cl, cp);
      while (!is_final(cl, np)) {
        visited[static_cast<std::size_t>(node(cl, np))] = true;
        auto [gl, gp] = glue(cl, np);
        visited[static_cast<std::size_t>(node(gl, gp))] = true;
        cl = gl;
        np = mate(cl, gp);
      }
      visited[static_cast<std::size_t>(node(cl, np))] = true;
      // Both endpoints keep their boundary index in the composite: x bottoms
      // stay bottoms, y tops stay tops.
      result[static_cast<std::size_t>(p)] = np;
      result[static_cast<std::size_t>(np)] = p;
    }
  }

  // Remaining unvisited nodes sit on closed loops.
  int loops = 0;
  for (int layer = 0; layer < 2; ++layer) {
    for (int p = 1; p <= 2 * n; ++p) {
      if (visited[static_cast<std::size_t>(node(layer, p))]) continue;
      ++loops;
      int cl = layer, cp = p;
      while (!visited[static_cast<std::size_t>(node(cl, cp))]) {
        visited[static_cast<std::size_t>(node(cl, cp))] = true;
        int mp = mate(cl, cp);
        visited[static_cast<std::size_t>(node(cl, mp))] = true;
        auto [gl, gp] = glue(cl, mp);
        cl = gl;
        cp = gp;
      }
    }
  }

  return {PlanarMatching(n, std::move(result)), loops};
}

TLElement TLElement::identity(int n, const RationalFunction& loop) {
  TLElement e(n, loop);
  e.add_term(PlanarMatching::identity(n),
             RationalFunction::from_rational(Rational(1), loop.vars()));
  return e;
}

TLElement TLElement::basis(int n, const PlanarMatching& m,
                           const RationalFunction& loop) {
  TLElement e(n, loop);
  e.add_term(m, RationalFunction::from_rational(Rational(1), loop.vars()));
  return e;
}

TLElement TLElement::cupcap(int n, int i, const RationalFunction& loop) {
  TLElement e(n, loop);
  e.add_term(PlanarMatching::cupcap(n, i),
             RationalFunction::from_rational(Rational(1), loop.vars()));
  return e;
}

RationalFunction TLElement::coefficient(const PlanarMatching& m) const {
  auto it = combo_.find(m);
  if (it == combo_.end())
    return RationalFunction::from_rational(Rational(0), loop_.vars());
  return it->second;
}

TLElement TLElement::operator-() const {
  TLElement out(n_, loop_);
  for (const auto& [m, c] : combo_) out.combo_.emplace(m, -c);
  return out;
}

TLElement& TLElement::operator+=(const TLElement& o) {
  if (n_ != o.n_) throw std::domain_error("strand count mismatch in sum");
  for (const auto& [m, c] : o.combo_) add_term(m, c);
  return *this;
}

TLElement TLElement::scaled(const RationalFunction& c) const {
  TLElement out(n_, loop_);
  if (c.is_zero()) return out;
  for (const auto& [m, k] : combo_) out.add_term(m, k * c);
  return out;
}

void TLElement::add_term(const PlanarMatching& m, const RationalFunction& c) {
  if (m.strands() != n_)
    throw std::domain_error("strand count mismatch in term");
  auto it = combo_.find(m);
  if (it == combo_.end()) {
    if (!c.is_zero()) combo_.emplace(m, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) combo_.erase(it);
}

std::string TLElement::to_string() const {
  if (combo_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : combo_) {
    if (!first) os << "  +  ";
    first = false;
    os << "[" << c.to_string() << "] " << m.to_string();
  }
  return os.str();
}

TLElement compose(const TLElement& x, const TLElement& y) {
  if (x.strands() != y.strands())
    throw std::domain_error("strand count mismatch in composition");
  TLElement out(x.strands(), x.loop_value());
  for (const auto& [mx, cx] : x.combo()) {
    for (const auto& [my, cy] : y.combo()) {
      auto [m, loops] = stack_diagrams(mx, my);
      RationalFunction c = cx * cy;
      for (int i = 0; i < loops; ++i) c = c * x.loop_value();
      out.add_term(m, c);
    }
  }
  return out;
}

TLElement jones_projection(int n, int i, const RationalFunction& loop) {
  if (i < 1 || i > n - 1)
    throw std::domain_error("projection index out of range");
  return TLElement::cupcap(n, i, loop).scaled(loop.inverse());
}

TLElement jones_wenzl(int n, const RationalFunction& loop) {
  if (n < 1) throw std::domain_error("jones_wenzl needs n >= 1");
  TLElement f = TLElement::identity(1, loop);
  RationalFunction prev = RationalFunction::from_rational(Rational(1), loop.vars());
  RationalFunction cur = loop;  // [1], [2] in the loop parameter
  for (int k = 1; k < n; ++k) {
    TLElement g = include_strand(f);
    if (cur.is_zero())
      throw DegenerateError("degenerate loop value: quantum integer " +
                            std::to_string(k + 1) + " vanishes");
    TLElement gug = compose(compose(g, TLElement::cupcap(k + 1, k, loop)), g);
    f = g - gug.scaled(prev * cur.inverse());
    RationalFunction next = loop * cur - prev;
    prev = cur;
    cur = next;
  }
  return f;
}

RationalFunction markov_trace(const TLElement& x) {
  const int n = x.strands();
  RationalFunction total(0);
  for (const auto& [m, c] : x.combo()) {
    // Close point k onto 2n+1-k; count resulting cycles.
    std::vector<bool> visited(static_cast<std::size_t>(2 * n + 1), false);
    int loops = 0;
    for (int p = 1; p <= 2 * n; ++p) {
      if (visited[static_cast<std::size_t>(p)]) continue;
      ++loops;
      int cur = p;
      while (!visited[static_cast<std::size_t>(cur)]) {
        visited[static_cast<std::size_t>(cur)] = true;
        int q = m.partner(cur);
        visited[static_cast<std::size_t>(q)] = true;
        cur = 2 * n + 1 - q;  // closure arc
      }
    }
    RationalFunction term = c;
    for (int i = 0; i < loops; ++i) term = term * x.loop_value();
    total = total + term;
  }
  return total;
}

TLElement include_strand(const TLElement& x) {
  const int n = x.strands();
  TLElement out(n + 1, x.loop_value());
  for (const auto& [m, c] : x.combo()) {
    std::vector<int> partner(static_cast<std::size_t>(2 * (n + 1) + 1), 0);
    auto shift = [n](int p) { return p <= n ? p : p + 2; };
    for (int p = 1; p <= 2 * n; ++p) {
      int q = m.partner(p);
      partner[static_cast<std::size_t>(shift(p))] = shift(q);
    }
    partner[static_cast<std::size_t>(n + 1)] = n + 2;
    partner[static_cast<std::size_t>(n + 2)] = n + 1;
    out.add_term(PlanarMatching(n + 1, std::move(partner)), c);
  }
  return out;
}

long catalan_dim(int n) {
  check_strand_count(n);
  if (n > 30) throw std::domain_error("catalan_dim overflow guard");
  // C(n) = binom(2n, n) / (n+1), built up exactly.
  long c = 1;
  for (int k = 0; k < n; ++k) c = c * 2 * (2 * k + 1) / (k + 2);
  return c;
}

FourBoxSplit generic_four_box_split() { return FourBoxSplit{}; }

}  // namespace skein
