#pragma once

#include <map>
#include <string>
#include <vector>

#include "skein/ratfun.hpp"

namespace skein {

// Noncrossing perfect matching on 2n boundary points.  Numbering convention
// (fixed so closure is an index reflection): bottom points 1..n left to
// right, top points n+1..2n right to left, i.e. the top point directly above
// bottom k is 2n+1-k.  Planar boundary order is 1, 2, ..., 2n.
class PlanarMatching {
 public:
  explicit PlanarMatching(int n, std::vector<int> partner);

  static PlanarMatching identity(int n);
  // The unnormalized cup-cap U_i: bottom i,i+1 joined, top points above
  // i,i+1 joined, all other strands straight through.
  static PlanarMatching cupcap(int n, int i);
  static std::vector<PlanarMatching> enumerate(int n);

  int strands() const { return n_; }
  int partner(int p) const { return partner_[static_cast<std::size_t>(p)]; }
  bool noncrossing() const;

  friend bool operator==(const PlanarMatching& a, const PlanarMatching& b) {
    return a.n_ == b.n_ && a.partner_ == b.partner_;
  }
  friend bool operator<(const PlanarMatching& a, const PlanarMatching& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.partner_ < b.partner_;
  }

  // Pairs sorted by smaller endpoint: "(1,2),(3,6),(4,5)".
  std::string to_string() const;
  static PlanarMatching parse(const std::string& text, int n);

 private:
  int n_;
  std::vector<int> partner_;  // 1-indexed, size 2n+1, slot 0 unused
};

// Vertical stacking of x (below) and y (above): x's top boundary is glued to
// y's bottom.  Returns the resulting matching and the number of closed loops
// swallowed by the gluing.
std::pair<PlanarMatching, int> stack_diagrams(const PlanarMatching& x,
                                              const PlanarMatching& y);

// Linear combination of planar matchings with a designated loop value.
class TLElement {
 public:
  TLElement(int n, RationalFunction loop_value)
      : n_(n), loop_(std::move(loop_value)) {}

  static TLElement zero(int n, const RationalFunction& loop) {
    return TLElement(n, loop);
  }
  static TLElement identity(int n, const RationalFunction& loop);
  static TLElement basis(int n, const PlanarMatching& m,
                         const RationalFunction& loop);
  // Unnormalized cup-cap U_i as an element.
  static TLElement cupcap(int n, int i, const RationalFunction& loop);

  int strands() const { return n_; }
  const RationalFunction& loop_value() const { return loop_; }
  const std::map<PlanarMatching, RationalFunction>& combo() const {
    return combo_;
  }
  bool is_zero() const { return combo_.empty(); }
  RationalFunction coefficient(const PlanarMatching& m) const;

  TLElement operator-() const;
  TLElement& operator+=(const TLElement& o);
  friend TLElement operator+(TLElement a, const TLElement& b) { return a += b; }
  friend TLElement operator-(TLElement a, const TLElement& b) {
    return a += -b;
  }
  TLElement scaled(const RationalFunction& c) const;

  friend bool operator==(const TLElement& a, const TLElement& b) {
    return a.n_ == b.n_ && a.combo_ == b.combo_;
  }
  friend bool operator!=(const TLElement& a, const TLElement& b) {
    return !(a == b);
  }

  void add_term(const PlanarMatching& m, const RationalFunction& c);

  std::string to_string() const;

 private:
  int n_;
  RationalFunction loop_;
  std::map<PlanarMatching, RationalFunction> combo_;
};

// Vertical stacking with each swallowed loop contributing one factor of the
// loop value; bilinear in both arguments.
TLElement compose(const TLElement& x, const TLElement& y);
inline TLElement operator*(const TLElement& x, const TLElement& y) {
  return compose(x, y);
}

// e_i = U_i / loop value; idempotent with e_i e_{i+-1} e_i = loop^-2 e_i.
TLElement jones_projection(int n, int i, const RationalFunction& loop);

// f_n: the unique idempotent with identity coefficient 1 killed by every
// Jones projection.  Built by the Wenzl recursion
//   f_{k+1} = f_k - ([k]/[k+1]) f_k U_k f_k / loop-normalization
// with [k] the loop-value Chebyshev integers.  Throws DegenerateError when
// some [k] vanishes.
TLElement jones_wenzl(int n, const RationalFunction& loop);

// Closes strand k onto 2n+1-k all around; each resulting loop contributes a
// factor of the loop value.  trace(identity_n) = loop^n (unnormalized).
RationalFunction markov_trace(const TLElement& x);

// View an n-strand element inside TL_{n+1} by appending a through strand on
// the right.
TLElement include_strand(const TLElement& x);

long catalan_dim(int n);

// Box-space dimension constants for the generic 4-box decomposition:
// Temperley-Lieb part, annular part, generator part.
struct FourBoxSplit {
  long temperley_lieb = 14;
  long annular = 8;
  long generator = 2;
  long total() const { return temperley_lieb + annular + generator; }
};
FourBoxSplit generic_four_box_split();

}  // namespace skein
