#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <vector>

#include "skein/temperley.hpp"

using namespace skein;

namespace {

// Formal loop variable: keeps every coefficient a univariate rational
// function, which is what makes the larger strand counts affordable.
RationalFunction loop_delta() {
  return RationalFunction(LaurentPoly::var_first(vars_dg()));
}

TLElement random_element(std::mt19937& rng, int n,
                         const RationalFunction& loop) {
  const std::vector<PlanarMatching> basis = PlanarMatching::enumerate(n);
  std::uniform_int_distribution<int> coef(-4, 4);
  TLElement out = TLElement::zero(n, loop);
  for (const PlanarMatching& m : basis) {
    const int c = coef(rng);
    if (c != 0)
      out.add_term(m, RationalFunction::from_rational(Rational(c), loop.vars()));
  }
  return out;
}

}  // namespace

TEST_CASE("diagram counts are Catalan numbers") {
  CHECK(catalan_dim(0) == 1);
  CHECK(catalan_dim(1) == 1);
  CHECK(catalan_dim(2) == 2);
  CHECK(catalan_dim(3) == 5);
  CHECK(catalan_dim(4) == 14);
  CHECK(catalan_dim(5) == 42);
  CHECK(catalan_dim(6) == 132);
  for (int n = 1; n <= 6; ++n) {
    const auto basis = PlanarMatching::enumerate(n);
    CHECK(static_cast<long>(basis.size()) == catalan_dim(n));
    for (const PlanarMatching& m : basis) CHECK(m.noncrossing());
  }
}

TEST_CASE("matching text round trip") {
  const auto basis = PlanarMatching::enumerate(4);
  for (const PlanarMatching& m : basis)
    CHECK(PlanarMatching::parse(m.to_string(), 4) == m);
  CHECK(PlanarMatching::identity(3).to_string() == "(1,6),(2,5),(3,4)");
}

TEST_CASE("cup cap relations") {
  const RationalFunction d = loop_delta();
  for (int n = 2; n <= 4; ++n) {
    const TLElement one = TLElement::identity(n, d);
    for (int i = 1; i < n; ++i) {
      const TLElement u = TLElement::cupcap(n, i, d);
      // U_i U_i = delta U_i
      CHECK(u * u == u.scaled(d));
      if (i + 1 < n) {
        const TLElement v = TLElement::cupcap(n, i + 1, d);
        CHECK(u * v * u == u);
        CHECK(v * u * v == v);
      }
      if (i + 2 < n) {
        const TLElement w = TLElement::cupcap(n, i + 2, d);
        CHECK(u * w == w * u);
      }
      CHECK(one * u == u);
      CHECK(u * one == u);
    }
  }
}

TEST_CASE("loop counting when diagrams stack") {
  const PlanarMatching u1 = PlanarMatching::cupcap(2, 1);
  auto [m, loops] = stack_diagrams(u1, u1);
  CHECK(m == u1);
  CHECK(loops == 1);
}

TEST_CASE("composition is associative and bilinear") {
  const RationalFunction d = loop_delta();
  std::mt19937 rng(424242);
  for (int n = 2; n <= 5; ++n) {
    for (int trial = 0; trial < 6; ++trial) {
      const TLElement a = random_element(rng, n, d);
      const TLElement b = random_element(rng, n, d);
      const TLElement c = random_element(rng, n, d);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a + b) * c == a * c + b * c);
    }
  }
}

TEST_CASE("jones projections") {
  const RationalFunction d = loop_delta();
  for (int n = 2; n <= 4; ++n) {
    for (int i = 1; i < n; ++i) {
      const TLElement e = jones_projection(n, i, d);
      CHECK(e * e == e);
      if (i + 1 < n) {
        const TLElement f = jones_projection(n, i + 1, d);
        CHECK(e * f * e == e.scaled((d * d).inverse()));
      }
    }
  }
}

TEST_CASE("jones wenzl small cases") {
  const RationalFunction d = loop_delta();
  const TLElement f1 = jones_wenzl(1, d);
  CHECK(f1 == TLElement::identity(1, d));

  // f_2 = 1 - e_1
  const TLElement f2 = jones_wenzl(2, d);
  CHECK(f2 == TLElement::identity(2, d) - jones_projection(2, 1, d));

  // f_3 = 1 - d/(d^2-1) (U_1 + U_2) + 1/(d^2-1) (U_1 U_2 + U_2 U_1)
  const TLElement f3 = jones_wenzl(3, d);
  const RationalFunction denom = d * d - RationalFunction(1);
  const TLElement u1 = TLElement::cupcap(3, 1, d);
  const TLElement u2 = TLElement::cupcap(3, 2, d);
  const TLElement expected = TLElement::identity(3, d) +
                             (u1 + u2).scaled(-(d / denom)) +
                             (u1 * u2 + u2 * u1).scaled(denom.inverse());
  CHECK(f3 == expected);
}

TEST_CASE("jones wenzl defining properties") {
  const RationalFunction d = loop_delta();
  for (int n = 1; n <= 5; ++n) {
    const TLElement f = jones_wenzl(n, d);
    CHECK(f * f == f);
    CHECK(f.coefficient(PlanarMatching::identity(n)) ==
          RationalFunction::one(vars_dg()));
    for (int i = 1; i < n; ++i) {
      const TLElement u = TLElement::cupcap(n, i, d);
      CHECK((u * f).is_zero());
      CHECK((f * u).is_zero());
    }
    // trace(f_n) = [n+1] in the loop Chebyshev integers
    CHECK(markov_trace(f) == loop_quantum_integer(n + 1, d));
  }
}

TEST_CASE("jones wenzl over the braid parameter field") {
  // Same structure with the loop value (r - 1/r)/(q - 1/q); kept to three
  // strands because bivariate coefficients grow quickly.
  const RationalFunction d = circle_parameter_qr();
  const TLElement f3 = jones_wenzl(3, d);
  CHECK(f3 * f3 == f3);
  CHECK((TLElement::cupcap(3, 1, d) * f3).is_zero());
  CHECK(markov_trace(f3) == loop_quantum_integer(4, d));
}

TEST_CASE("degenerate loop value is detected") {
  // Loop value 0 kills [2], so f_2 does not exist.
  CHECK_THROWS_AS(jones_wenzl(2, RationalFunction::zero(vars_dg())),
                  DegenerateError);
  // Loop value 1 kills [3] = delta^2 - 1, so f_3 does not exist.
  CHECK_THROWS_AS(jones_wenzl(3, RationalFunction::one(vars_dg())),
                  DegenerateError);
}

TEST_CASE("markov trace basics") {
  const RationalFunction d = loop_delta();
  CHECK(markov_trace(TLElement::identity(3, d)) == d.pow(3));
  CHECK(markov_trace(TLElement::identity(2, d)) == d * d);
  CHECK(markov_trace(TLElement::cupcap(2, 1, d)) == d);
  CHECK(markov_trace(TLElement::cupcap(3, 1, d)) == d * d);
}

TEST_CASE("markov trace is compatible with strand inclusion") {
  const RationalFunction d = loop_delta();
  std::mt19937 rng(99);
  for (int n = 2; n <= 4; ++n) {
    for (int trial = 0; trial < 5; ++trial) {
      const TLElement x = random_element(rng, n, d);
      const TLElement included = include_strand(x);
      CHECK(included.strands() == n + 1);
      CHECK(markov_trace(included) == d * markov_trace(x));
      // Closing the new strand through U_n recovers the old trace.
      const TLElement u = TLElement::cupcap(n + 1, n, d);
      CHECK(markov_trace(included * u) == markov_trace(x));
    }
  }
  // Trace property on random pairs.
  for (int trial = 0; trial < 8; ++trial) {
    const TLElement a = random_element(rng, 3, d);
    const TLElement b = random_element(rng, 3, d);
    CHECK(markov_trace(a * b) == markov_trace(b * a));
  }
}

TEST_CASE("element text form") {
  const RationalFunction d = loop_delta();
  const TLElement u = TLElement::cupcap(2, 1, d);
  CHECK(u.to_string() == "[1*delta^0*gamma^0] (1,2),(3,4)");
  CHECK(TLElement::zero(2, d).to_string() == "0");
}

TEST_CASE("four box split") {
  const FourBoxSplit split = generic_four_box_split();
  CHECK(split.temperley_lieb == 14);
  CHECK(split.annular == 8);
  CHECK(split.generator == 2);
  CHECK(split.total() == 24);
  CHECK(split.temperley_lieb == catalan_dim(4));
}
