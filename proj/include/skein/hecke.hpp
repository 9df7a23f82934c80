#pragma once

#include <map>
#include <string>
#include <vector>

#include "skein/ratfun.hpp"

namespace skein {

// Permutation of {1..n} stored as the image tuple w(1),...,w(n).
// Composition convention: (w*v)(i) = w(v(i)).
class Permutation {
 public:
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  static Permutation transposition(int n, int i);  // adjacent swap s_i
  static std::vector<Permutation> enumerate(int n);

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[static_cast<std::size_t>(i - 1)]; }
  const std::vector<int>& images() const { return img_; }

  bool is_identity() const;
  long length() const;  // inversion count
  Permutation compose(const Permutation& v) const;  // this after v
  Permutation inverse() const;
  // w * s_i: swap the image entries at positions i, i+1.
  Permutation right_swap(int i) const;
  // s_i * w: swap the values i, i+1 wherever they appear.
  Permutation value_swap(int i) const;
  // Restriction to {1..n-1}; requires w(n) = n.
  Permutation restricted() const;

  // Shortest factorization into adjacent swaps, as generator indices in
  // product order: w = s[a_0] s[a_1] ... s[a_{m-1}].
  std::vector<int> reduced_word() const;

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img_ == b.img_;
  }
  friend bool operator!=(const Permutation& a, const Permutation& b) {
    return !(a == b);
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    if (a.img_.size() != b.img_.size()) return a.img_.size() < b.img_.size();
    return a.img_ < b.img_;
  }

  std::string to_string() const;  // one-line notation "[2,3,1]"
  static Permutation parse(const std::string& text);

 private:
  std::vector<int> img_;
};

// Element of the Hecke algebra H_n(q, r) written in the basis g_w.
// Multiplication is driven by the quadratic relation
//   g_i^2 = (q - q^-1) g_i + 1.
class HeckeElement {
 public:
  explicit HeckeElement(int n) : n_(n) {}

  static HeckeElement zero(int n) { return HeckeElement(n); }
  static HeckeElement identity(int n);
  static HeckeElement basis(int n, const Permutation& w);
  static HeckeElement generator(int n, int i);  // g_{s_i}

  int strands() const { return n_; }
  const std::map<Permutation, RationalFunction>& combo() const {
    return combo_;
  }
  bool is_zero() const { return combo_.empty(); }
  RationalFunction coefficient(const Permutation& w) const;
  void add_term(const Permutation& w, const RationalFunction& c);

  HeckeElement operator-() const;
  HeckeElement& operator+=(const HeckeElement& o);
  friend HeckeElement operator+(HeckeElement a, const HeckeElement& b) {
    return a += b;
  }
  friend HeckeElement operator-(HeckeElement a, const HeckeElement& b) {
    return a += -b;
  }
  HeckeElement scaled(const RationalFunction& c) const;

  // Right product with one generator, its inverse, and left product.
  HeckeElement right_mul_gen(int i) const;
  HeckeElement right_mul_gen_inv(int i) const;
  HeckeElement left_mul_gen(int i) const;

  friend bool operator==(const HeckeElement& a, const HeckeElement& b) {
    return a.n_ == b.n_ && a.combo_ == b.combo_;
  }
  friend bool operator!=(const HeckeElement& a, const HeckeElement& b) {
    return !(a == b);
  }

  std::string to_string() const;

 private:
  int n_;
  std::map<Permutation, RationalFunction> combo_;
};

HeckeElement mul(const HeckeElement& x, const HeckeElement& y);
inline HeckeElement operator*(const HeckeElement& x, const HeckeElement& y) {
  return mul(x, y);
}

// Braid generators: positive index i is g_{s_i}, negative is its inverse
// g_{s_i} - (q - q^-1).
HeckeElement from_braid_word(const std::vector<int>& word, int n);
std::vector<int> parse_braid_word(const std::string& text);

// Normalized Markov trace: tr(1) = 1 and
//   tr(a g_{n-1} b) = (r/delta) tr(ab) for a, b in H_{n-1},
// with delta = (r - r^-1)/(q - q^-1).  Computed by strand peeling on the
// g_w basis with memoization; safe for concurrent callers.
RationalFunction ocneanu_trace(const HeckeElement& x);

enum class SymmetrizerKind { row, column };

// One-row / one-column Young symmetrizer: the normalized sum
//   m = (sum_w wt^{l(w)} g_w) / c,  wt = q (row) or -q^-1 (column),
// where c is the scalar with x^2 = c x.  Satisfies g_i m = m g_i = wt m
// and m^2 = m.
HeckeElement symmetrizer(int n, SymmetrizerKind kind);

// E_i = (q - g_i)/(q + q^-1): projection onto the -q^-1 eigenspace of g_i.
HeckeElement spectral_projection(int n, int i);

}  // namespace skein
