#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "skein/hecke.hpp"
#include "skein/young.hpp"

using namespace skein;

namespace {

RationalFunction z_qr() {
  return RationalFunction(LaurentPoly::var_first() -
                          LaurentPoly::monomial(1, -1, 0));
}

RationalFunction q_rf() { return RationalFunction(LaurentPoly::var_first()); }
RationalFunction r_rf() { return RationalFunction(LaurentPoly::var_second()); }

HeckeElement random_element(std::mt19937& rng, int n) {
  std::uniform_int_distribution<int> coef(-3, 3);
  HeckeElement out = HeckeElement::zero(n);
  for (const Permutation& w : Permutation::enumerate(n)) {
    const int c = coef(rng);
    if (c != 0) out.add_term(w, RationalFunction(c));
  }
  return out;
}

HeckeElement braid(const std::vector<int>& word, int n) {
  return from_braid_word(word, n);
}

}  // namespace

TEST_CASE("permutation basics") {
  const Permutation id = Permutation::identity(4);
  CHECK(id.is_identity());
  CHECK(id.length() == 0);

  const Permutation s1 = Permutation::transposition(4, 1);
  const Permutation s2 = Permutation::transposition(4, 2);
  // Composition convention: (w v)(i) = w(v(i)).
  const Permutation wv = s1.compose(s2);
  CHECK(wv(3) == 1);
  CHECK(wv(1) == 2);
  CHECK(s1.compose(s1).is_identity());
  CHECK(s1.inverse() == s1);

  CHECK(Permutation::enumerate(4).size() == 24);

  std::mt19937 rng(8);
  const auto all = Permutation::enumerate(4);
  for (const Permutation& w : all) {
    // Reduced words multiply back to the permutation and have minimal length.
    const std::vector<int> word = w.reduced_word();
    CHECK(static_cast<long>(word.size()) == w.length());
    Permutation acc = Permutation::identity(4);
    for (int i : word) acc = acc.compose(Permutation::transposition(4, i));
    CHECK(acc == w);
    CHECK(Permutation::parse(w.to_string()) == w);
    CHECK(w.compose(w.inverse()).is_identity());
  }
}

TEST_CASE("quadratic relation") {
  const RationalFunction z = z_qr();
  for (int n = 2; n <= 4; ++n) {
    for (int i = 1; i < n; ++i) {
      const HeckeElement g = HeckeElement::generator(n, i);
      CHECK(g * g == g.scaled(z) + HeckeElement::identity(n));
    }
  }
}

TEST_CASE("braid relations") {
  for (int n = 3; n <= 4; ++n) {
    for (int i = 1; i + 1 < n; ++i) {
      const HeckeElement a = HeckeElement::generator(n, i);
      const HeckeElement b = HeckeElement::generator(n, i + 1);
      CHECK(a * b * a == b * a * b);
    }
  }
  const HeckeElement g1 = HeckeElement::generator(4, 1);
  const HeckeElement g3 = HeckeElement::generator(4, 3);
  CHECK(g1 * g3 == g3 * g1);
}

TEST_CASE("inverse generators and Reidemeister style cancellations") {
  const HeckeElement id = HeckeElement::identity(3);
  CHECK(braid({1, -1}, 3) == id);
  CHECK(braid({-2, 2}, 3) == id);
  // Slide move: s1 s2 s1 = s2 s1 s2 with mixed signs.
  CHECK(braid({1, 2, 1}, 3) == braid({2, 1, 2}, 3));
  CHECK(braid({-1, -2, -1}, 3) == braid({-2, -1, -2}, 3));
  // g * g^-1 on the element level.
  const HeckeElement g = HeckeElement::generator(3, 2);
  const HeckeElement ginv = braid({-2}, 3);
  CHECK(g * ginv == id);
  CHECK(ginv * g == id);
}

TEST_CASE("multiplication is associative") {
  std::mt19937 rng(314159);
  for (int n = 2; n <= 3; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const HeckeElement a = random_element(rng, n);
      const HeckeElement b = random_element(rng, n);
      const HeckeElement c = random_element(rng, n);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
    }
  }
}

TEST_CASE("trace of small elements") {
  const RationalFunction delta = circle_parameter_qr();
  CHECK(ocneanu_trace(HeckeElement::identity(2)) == RationalFunction(1));
  CHECK(ocneanu_trace(HeckeElement::generator(2, 1)) == r_rf() / delta);
  CHECK(ocneanu_trace(braid({-1}, 2)) == r_rf().inverse() / delta);
  CHECK(ocneanu_trace(HeckeElement::generator(3, 2)) == r_rf() / delta);
}

TEST_CASE("trace peels the last strand") {
  const RationalFunction delta = circle_parameter_qr();
  const RationalFunction rp = r_rf() / delta;
  const RationalFunction rm = r_rf().inverse() / delta;
  std::mt19937 rng(6021023);
  for (int trial = 0; trial < 6; ++trial) {
    // x lives in H_2 seen inside H_3; appending g_2^{+-1} peels to r^{+-1}/delta.
    HeckeElement x = HeckeElement::zero(3);
    const HeckeElement small = random_element(rng, 2);
    for (const auto& [w, c] : small.combo()) {
      std::vector<int> img = w.images();
      img.push_back(3);
      x.add_term(Permutation(img), c);
    }
    CHECK(ocneanu_trace(x * HeckeElement::generator(3, 2)) ==
          rp * ocneanu_trace(small));
    CHECK(ocneanu_trace(x * braid({-2}, 3)) == rm * ocneanu_trace(small));
  }
}

TEST_CASE("trace is conjugation invariant") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 5; ++trial) {
    const HeckeElement x = random_element(rng, 3);
    for (int i = 1; i < 3; ++i) {
      const HeckeElement g = HeckeElement::generator(3, i);
      const HeckeElement ginv = braid({-i}, 3);
      CHECK(ocneanu_trace(g * x * ginv) == ocneanu_trace(x));
    }
    const HeckeElement y = random_element(rng, 3);
    CHECK(ocneanu_trace(x * y) == ocneanu_trace(y * x));
  }
}

TEST_CASE("symmetrizers are idempotent eigenprojections") {
  const RationalFunction q = q_rf();
  const RationalFunction qinv = q.inverse();
  for (int n = 2; n <= 4; ++n) {
    for (SymmetrizerKind kind : {SymmetrizerKind::row, SymmetrizerKind::column}) {
      const HeckeElement m = symmetrizer(n, kind);
      CHECK(m * m == m);
      const RationalFunction expected =
          kind == SymmetrizerKind::row ? q : -qinv;
      for (int i = 1; i < n; ++i) {
        const HeckeElement g = HeckeElement::generator(n, i);
        CHECK(g * m == m.scaled(expected));
        CHECK(m * g == m.scaled(expected));
      }
    }
  }
}

TEST_CASE("two strand symmetrizers in closed form") {
  const RationalFunction q = q_rf();
  const RationalFunction qinv = q.inverse();
  const RationalFunction norm = (q + qinv).inverse();
  const Permutation id2 = Permutation::identity(2);
  const Permutation s1 = Permutation::transposition(2, 1);

  const HeckeElement row = symmetrizer(2, SymmetrizerKind::row);
  CHECK(row.coefficient(id2) == qinv * norm);
  CHECK(row.coefficient(s1) == norm);

  const HeckeElement col = symmetrizer(2, SymmetrizerKind::column);
  CHECK(col.coefficient(id2) == q * norm);
  CHECK(col.coefficient(s1) == -norm);

  CHECK(row + col == HeckeElement::identity(2));
}

TEST_CASE("spectral projections") {
  for (int n = 2; n <= 3; ++n) {
    for (int i = 1; i < n; ++i) {
      const HeckeElement e = spectral_projection(n, i);
      const HeckeElement g = HeckeElement::generator(n, i);
      CHECK(e * e == e);
      CHECK(g * e == e.scaled(-q_rf().inverse()));
      CHECK(e * g == e.scaled(-q_rf().inverse()));
    }
  }
  // Complementary projection at two strands is the row symmetrizer.
  CHECK(HeckeElement::identity(2) - spectral_projection(2, 1) ==
        symmetrizer(2, SymmetrizerKind::row));
}

TEST_CASE("symmetrizer closures match the diagram trace formula") {
  // quantum_trace carries the closure normalization: one loop factor per
  // strand on top of the normalized algebra trace.
  const RationalFunction delta = circle_parameter_qr();
  for (int n = 2; n <= 3; ++n) {
    const RationalFunction loops = delta.pow(n);
    std::vector<int> row_shape{n};
    std::vector<int> col_shape(static_cast<std::size_t>(n), 1);
    CHECK(loops * ocneanu_trace(symmetrizer(n, SymmetrizerKind::row)) ==
          quantum_trace(YoungDiagram(row_shape)));
    CHECK(loops * ocneanu_trace(symmetrizer(n, SymmetrizerKind::column)) ==
          quantum_trace(YoungDiagram(col_shape)));
  }
}

TEST_CASE("braid word parser") {
  CHECK(parse_braid_word("1 -2 1 -2") == std::vector<int>{1, -2, 1, -2});
  CHECK(parse_braid_word("") == std::vector<int>{});
  CHECK_THROWS_AS(parse_braid_word("1 x 2"), std::domain_error);
}
