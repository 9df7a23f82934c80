#include "skein/hecke.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skein {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
  const int n = static_cast<int>(img_.size());
  std::vector<bool> seen(static_cast<std::size_t>(n + 1), false);
  for (int v : img_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::domain_error("not a permutation of 1..n");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int i) {
  if (i < 1 || i > n - 1)
    throw std::domain_error("transposition index out of range");
  Permutation w = identity(n);
  std::swap(w.img_[static_cast<std::size_t>(i - 1)],
            w.img_[static_cast<std::size_t>(i)]);
  return w;
}

std::vector<Permutation> Permutation::enumerate(int n) {
  std::vector<int> img(static_cast<std::size_t>(n));
  std::iota(img.begin(), img.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(img);
  } while (std::next_permutation(img.begin(), img.end()));
  return out;
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= size(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

long Permutation::length() const {
  long inv = 0;
  for (int i = 1; i <= size(); ++i)
    for (int j = i + 1; j <= size(); ++j)
      if ((*this)(i) > (*this)(j)) ++inv;
  return inv;
}

Permutation Permutation::compose(const Permutation& v) const {
  if (size() != v.size())
    throw std::domain_error("size mismatch in composition");
  std::vector<int> img(static_cast<std::size_t>(size()));
  for (int i = 1; i <= size(); ++i)
    img[static_cast<std::size_t>(i - 1)] = (*this)(v(i));
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<int> img(static_cast<std::size_t>(size()));
  for (int i = 1; i <= size(); ++i)
    img[static_cast<std::size_t>((*this)(i)-1)] = i;
  return Permutation(std::move(img));
}

Permutation Permutation::right_swap(int i) const {
  if (i < 1 || i > size() - 1)
    throw std::domain_error("swap position out of range");
  Permutation w = *this;
  std::swap(w.img_[static_cast<std::size_t>(i - 1)],
            w.img_[static_cast<std::size_t>(i)]);
  return w;
}

Permutation Permutation::value_swap(int i) const {
  if (i < 1 || i > size() - 1)
    throw std::domain_error("swap value out of range");
  Permutation w = *this;
  for (int& v : w.img_) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return w;
}

Permutation Permutation::restricted() const {
  if (size() < 1 || (*this)(size()) != size())
    throw std::domain_error("restriction needs the top point fixed");
  std::vector<int> img(img_.begin(), img_.end() - 1);
  return Permutation(std::move(img));
}

std::vector<int> Permutation::reduced_word() const {
  // Peel descents from the right: each step shortens by one.  The word is
  // rebuilt in product order at the end.
  std::vector<int> peeled;
  Permutation w = *this;
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 1; i <= w.size() - 1; ++i) {
      if (w(i) > w(i + 1)) {
        peeled.push_back(i);
        w = w.right_swap(i);
        moved = true;
        break;
      }
    }
  }
  std::reverse(peeled.begin(), peeled.end());
  return peeled;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  os << "[";
  for (int i = 1; i <= size(); ++i) {
    if (i > 1) os << ",";
    os << (*this)(i);
  }
  os << "]";
  return os.str();
}

Permutation Permutation::parse(const std::string& text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw std::domain_error("bad permutation text: " + text);
  std::vector<int> img;
  std::string body = text.substr(1, text.size() - 2);
  std::istringstream is(body);
  std::string part;
  while (std::getline(is, part, ','))
    if (!part.empty()) img.push_back(std::stoi(part));
  return Permutation(std::move(img));
}

HeckeElement HeckeElement::identity(int n) {
  return basis(n, Permutation::identity(n));
}

HeckeElement HeckeElement::basis(int n, const Permutation& w) {
  HeckeElement x(n);
  x.add_term(w, RationalFunction(1));
  return x;
}

HeckeElement HeckeElement::generator(int n, int i) {
  return basis(n, Permutation::transposition(n, i));
}

RationalFunction HeckeElement::coefficient(const Permutation& w) const {
  auto it = combo_.find(w);
  return it == combo_.end() ? RationalFunction(0) : it->second;
}

void HeckeElement::add_term(const Permutation& w, const RationalFunction& c) {
  if (w.size() != n_) throw std::domain_error("strand mismatch in term");
  auto it = combo_.find(w);
  if (it == combo_.end()) {
    if (!c.is_zero()) combo_.emplace(w, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) combo_.erase(it);
}

HeckeElement HeckeElement::operator-() const {
  HeckeElement out(n_);
  for (const auto& [w, c] : combo_) out.combo_.emplace(w, -c);
  return out;
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  if (n_ != o.n_) throw std::domain_error("strand mismatch in sum");
  for (const auto& [w, c] : o.combo_) add_term(w, c);
  return *this;
}

HeckeElement HeckeElement::scaled(const RationalFunction& c) const {
  HeckeElement out(n_);
  if (c.is_zero()) return out;
  for (const auto& [w, k] : combo_) out.add_term(w, k * c);
  return out;
}

namespace {

const RationalFunction& hecke_z() {
  static const RationalFunction z(LaurentPoly::monomial(Rational(1), 1, 0) -
                                  LaurentPoly::monomial(Rational(1), -1, 0));
  return z;
}

}  // namespace

HeckeElement HeckeElement::right_mul_gen(int i) const {
  if (i < 1 || i > n_ - 1)
    throw std::domain_error("generator index out of range");
  HeckeElement out(n_);
  for (const auto& [w, c] : combo_) {
    if (w(i) < w(i + 1)) {
      out.add_term(w.right_swap(i), c);
    } else {
      out.add_term(w, c * hecke_z());
      out.add_term(w.right_swap(i), c);
    }
  }
  return out;
}

HeckeElement HeckeElement::right_mul_gen_inv(int i) const {
  // g^-1 = g - (q - q^-1)
  HeckeElement out = right_mul_gen(i);
  out += -scaled(hecke_z());
  return out;
}

HeckeElement HeckeElement::left_mul_gen(int i) const {
  if (i < 1 || i > n_ - 1)
    throw std::domain_error("generator index out of range");
  HeckeElement out(n_);
  for (const auto& [w, c] : combo_) {
    // l(s_i w) > l(w) iff the value i appears before the value i+1.
    if (w.inverse()(i) < w.inverse()(i + 1)) {
      out.add_term(w.value_swap(i), c);
    } else {
      out.add_term(w, c * hecke_z());
      out.add_term(w.value_swap(i), c);
    }
  }
  return out;
}

std::string HeckeElement::to_string() const {
  if (combo_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : combo_) {
    if (!first) os << "  +  ";
    first = false;
    os << "[" << c.to_string() << "] g" << w.to_string();
  }
  return os.str();
}

HeckeElement mul(const HeckeElement& x, const HeckeElement& y) {
  if (x.strands() != y.strands())
    throw std::domain_error("strand mismatch in product");
  HeckeElement out(x.strands());
  for (const auto& [v, c] : y.combo()) {
    HeckeElement cur = x;
    for (int letter : v.reduced_word()) cur = cur.right_mul_gen(letter);
    out += cur.scaled(c);
  }
  return out;
}

HeckeElement from_braid_word(const std::vector<int>& word, int n) {
  HeckeElement x = HeckeElement::identity(n);
  for (int letter : word) {
    if (letter == 0 || std::abs(letter) > n - 1)
      throw std::domain_error("braid letter out of range: " +
                              std::to_string(letter));
    x = letter > 0 ? x.right_mul_gen(letter) : x.right_mul_gen_inv(-letter);
  }
  return x;
}

std::vector<int> parse_braid_word(const std::string& text) {
  std::vector<int> word;
  std::istringstream is(text);
  int v;
  while (is >> v) word.push_back(v);
  if (!is.eof()) throw std::domain_error("bad braid word: " + text);
  return word;
}

namespace {

// Trace of a basis element as num / (r - r^-1)^k.  Keeping the power of
// (r - r^-1) explicit avoids fraction blowup in the recursion: all other
// factors stay polynomial.
struct TraceVal {
  LaurentPoly num;
  int k = 0;
};

const LaurentPoly& poly_z() {
  static const LaurentPoly z = LaurentPoly::monomial(Rational(1), 1, 0) -
                               LaurentPoly::monomial(Rational(1), -1, 0);
  return z;
}

const LaurentPoly& poly_rr() {
  static const LaurentPoly p = LaurentPoly::monomial(Rational(1), 0, 1) -
                               LaurentPoly::monomial(Rational(1), 0, -1);
  return p;
}

TraceVal trace_basis(Permutation w);

// Right-multiply a polynomial combination by one Hecke generator.
std::map<Permutation, LaurentPoly> poly_right_mul_gen(
    const std::map<Permutation, LaurentPoly>& x, int i) {
  std::map<Permutation, LaurentPoly> out;
  auto add = [&out](const Permutation& w, const LaurentPoly& c) {
    auto it = out.find(w);
    if (it == out.end()) {
      if (!c.is_zero()) out.emplace(w, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  };
  for (const auto& [w, c] : x) {
    if (w(i) < w(i + 1)) {
      add(w.right_swap(i), c);
    } else {
      add(w, c * poly_z());
      add(w.right_swap(i), c);
    }
  }
  return out;
}

TraceVal trace_basis_uncached(const Permutation& w) {
  const int n = w.size();
  // Top strand goes straight across: peel it and recurse one level down.
  if (w(n) == n) return trace_basis(w.restricted());

  // Position carrying the top value.  Factor w = v * (s_{n-1} ... s_{k0})
  // with v fixing n; the Markov step removes g_{n-1} and leaves the product
  // of the remaining generators inside H_{n-1}.
  const int k0 = w.inverse()(n);
  std::vector<int> vimg(static_cast<std::size_t>(n - 1));
  for (int i = 1; i <= n - 1; ++i)
    vimg[static_cast<std::size_t>(i - 1)] = i < k0 ? w(i) : w(i + 1);
  Permutation v{std::move(vimg)};

  std::map<Permutation, LaurentPoly> y;
  y.emplace(std::move(v), LaurentPoly::one());
  for (int i = n - 2; i >= k0; --i) y = poly_right_mul_gen(y, i);

  int kmax = 0;
  std::vector<std::pair<LaurentPoly, TraceVal>> parts;
  parts.reserve(y.size());
  for (const auto& [u, c] : y) {
    parts.emplace_back(c, trace_basis(u));
    kmax = std::max(kmax, parts.back().second.k);
  }
  LaurentPoly num{vars_qr()};
  for (const auto& [c, tv] : parts)
    num += c * tv.num * poly_rr().pow(static_cast<unsigned>(kmax - tv.k));
  num = num * poly_z() * LaurentPoly::var_second();
  return TraceVal{std::move(num), kmax + 1};
}

TraceVal trace_basis(Permutation w) {
  // Strip straight-through top strands cheaply before touching the cache.
  while (w.size() > 0 && w(w.size()) == w.size()) w = w.restricted();
  if (w.size() == 0 || w.is_identity()) return TraceVal{LaurentPoly::one(), 0};

  static std::map<std::vector<int>, TraceVal> cache;
  static std::mutex cache_mutex;
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    auto it = cache.find(w.images());
    if (it != cache.end()) return it->second;
  }
  TraceVal result = trace_basis_uncached(w);
  {
    std::lock_guard<std::mutex> lock(cache_mutex);
    cache.emplace(w.images(), result);
  }
  return result;
}

}  // namespace

RationalFunction ocneanu_trace(const HeckeElement& x) {
  std::vector<RationalFunction> parts;
  parts.reserve(x.combo().size());
  for (const auto& [w, c] : x.combo()) {
    TraceVal tv = trace_basis(w);
    parts.push_back(
        c * RationalFunction(tv.num, poly_rr().pow(static_cast<unsigned>(tv.k))));
  }
  return rf_sum(parts);
}

HeckeElement symmetrizer(int n, SymmetrizerKind kind) {
  if (n < 1 || n > 6)
    throw std::domain_error("symmetrizer supported for 1 <= n <= 6");
  const LaurentPoly wt = kind == SymmetrizerKind::row
                             ? LaurentPoly::monomial(Rational(1), 1, 0)
                             : LaurentPoly::monomial(Rational(-1), -1, 0);
  HeckeElement x(n);
  for (const Permutation& w : Permutation::enumerate(n))
    x.add_term(w, RationalFunction(wt.pow(static_cast<unsigned>(w.length()))));

  // Normalizer c with x^2 = c x, in closed form: the weighted-length
  // generating series of S_n factors over k as 1 + wt^2 + ... + wt^{2(k-1)}.
  const LaurentPoly wt2 = wt * wt;
  LaurentPoly c = LaurentPoly::one();
  for (int k = 2; k <= n; ++k) {
    LaurentPoly geo{vars_qr()};
    LaurentPoly p = LaurentPoly::one();
    for (int j = 0; j < k; ++j) {
      geo += p;
      p = p * wt2;
    }
    c = c * geo;
  }
  if (c.is_zero()) throw DegenerateError("degenerate specialization");

  // The closed form relies on x being a two-sided wt-eigenvector of every
  // generator; cross-check that before normalizing.
  const RationalFunction wtf{wt};
  for (int i = 1; i <= n - 1; ++i) {
    if (x.left_mul_gen(i) != x.scaled(wtf) || x.right_mul_gen(i) != x.scaled(wtf))
      throw std::logic_error("symmetrizer eigen-identity failed");
  }
  return x.scaled(RationalFunction(LaurentPoly::one(), c));
}

HeckeElement spectral_projection(int n, int i) {
  if (i < 1 || i > n - 1)
    throw std::domain_error("projection index out of range");
  const RationalFunction q{LaurentPoly::var_first()};
  const RationalFunction denom = q + q.inverse();
  HeckeElement num =
      HeckeElement::identity(n).scaled(q) - HeckeElement::generator(n, i);
  return num.scaled(denom.inverse());
}

}  // namespace skein
