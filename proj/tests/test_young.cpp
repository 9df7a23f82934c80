#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "skein/young.hpp"

using namespace skein;

namespace {

RationalFunction r_rf() { return RationalFunction(LaurentPoly::var_second()); }

}  // namespace

TEST_CASE("diagram shape bookkeeping") {
  const YoungDiagram lambda({3, 1});
  CHECK(lambda.cell_count() == 4);
  CHECK(lambda.row_count() == 2);
  CHECK(lambda.transpose() == YoungDiagram({2, 1, 1}));
  CHECK(lambda.transpose().transpose() == lambda);
  CHECK(lambda.to_string() == "3,1");
  CHECK(YoungDiagram::parse("3,1") == lambda);
  CHECK_THROWS_AS(YoungDiagram({1, 3}), std::domain_error);

  const std::vector<Cell> cs = cells(lambda);
  REQUIRE(cs.size() == 4);
  // Row major: (1,1),(1,2),(1,3),(2,1).
  CHECK(cs[0].content == 0);
  CHECK(cs[1].content == 1);
  CHECK(cs[2].content == 2);
  CHECK(cs[3].content == -1);
  CHECK(cs[0].hook == 4);
  CHECK(cs[1].hook == 2);
  CHECK(cs[2].hook == 1);
  CHECK(cs[3].hook == 1);

  CHECK(num_standard_tableaux(lambda) == 3);
  CHECK(num_standard_tableaux(YoungDiagram({2, 2})) == 2);
  CHECK(num_standard_tableaux(YoungDiagram({1})) == 1);
}

TEST_CASE("partition enumeration order") {
  const auto p4 = partitions_of(4);
  REQUIRE(p4.size() == 5);
  CHECK(p4.front() == YoungDiagram({4}));
  CHECK(p4.back() == YoungDiagram({1, 1, 1, 1}));
  CHECK(p4[1] == YoungDiagram({3, 1}));
  CHECK(partitions_of(6).size() == 11);
  CHECK(partitions_of(1).size() == 1);
}

TEST_CASE("quantum trace closed forms") {
  const RationalFunction delta = circle_parameter_qr();
  CHECK(quantum_trace(YoungDiagram({1})) == delta);

  // Tr[2] = delta (r q - 1/(r q)) / (q^2 - q^-2)
  const LaurentPoly q = LaurentPoly::var_first();
  const LaurentPoly r = LaurentPoly::var_second();
  const RationalFunction expected2 =
      delta * RationalFunction(r * q - LaurentPoly::monomial(1, -1, -1),
                               q * q - LaurentPoly::monomial(1, -2, 0));
  CHECK(quantum_trace(YoungDiagram({2})) == expected2);

  // The two-cell traces fill the square of the loop value.
  CHECK(quantum_trace(YoungDiagram({2})) + quantum_trace(YoungDiagram({1, 1})) ==
        delta * delta);
}

TEST_CASE("traces resolve the identity by tableau count") {
  const RationalFunction delta = circle_parameter_qr();
  for (int n = 1; n <= 4; ++n) {
    RationalFunction total = RationalFunction::zero();
    for (const YoungDiagram& lambda : partitions_of(n)) {
      total += RationalFunction::from_rational(
                   Rational(num_standard_tableaux(lambda)), vars_qr()) *
               quantum_trace(lambda);
    }
    CHECK(total == delta.pow(n));
  }
}

TEST_CASE("trace symmetry under variable inversion") {
  for (int n = 1; n <= 6; ++n) {
    for (const YoungDiagram& lambda : partitions_of(n)) {
      CHECK(quantum_trace(lambda).invert_variables() == quantum_trace(lambda));
    }
  }
}

TEST_CASE("transposition swaps r with its negated inverse") {
  const ComplexPoint q0{1.21, 0.0, 1e-9};
  const ComplexPoint r0{1.77, 0.0, 1e-9};
  const ComplexPoint r_flip{-1.0 / 1.77, 0.0, 1e-9};
  for (int n = 1; n <= 6; ++n) {
    for (const YoungDiagram& lambda : partitions_of(n)) {
      const std::complex<double> a =
          trace_numeric(lambda.transpose(), q0, r0).value();
      const std::complex<double> b = trace_numeric(lambda, q0, r_flip).value();
      CHECK(std::abs(a - b) < 1e-9 * (1.0 + std::abs(a)));
    }
  }
}

TEST_CASE("numeric trace agrees with symbolic evaluation") {
  std::mt19937 rng(2718);
  std::uniform_real_distribution<double> qd(1.05, 1.6);
  std::uniform_real_distribution<double> rd(1.7, 3.0);
  for (int trial = 0; trial < 10; ++trial) {
    const ComplexPoint q0{qd(rng), 0.0, 1e-9};
    const ComplexPoint r0{rd(rng), 0.0, 1e-9};
    for (const YoungDiagram& lambda : partitions_of(4)) {
      const std::complex<double> direct = trace_numeric(lambda, q0, r0).value();
      const std::complex<double> via_field = quantum_trace(lambda).eval(q0, r0);
      CHECK(std::abs(direct - via_field) < 1e-9 * (1.0 + std::abs(direct)));
    }
  }
  // Loop value of a single box at a fixed point.
  const ComplexPoint q0{1.2, 0.0, 1e-9};
  const ComplexPoint r0{1.9, 0.0, 1e-9};
  const double expected = (1.9 - 1.0 / 1.9) / (1.2 - 1.0 / 1.2);
  CHECK(std::abs(trace_numeric(YoungDiagram({1}), q0, r0).value() -
                 std::complex<double>(expected, 0.0)) < 1e-12);
}

TEST_CASE("specialized trace at a root of unity") {
  // q = exp(i pi/6), r = q^3: the hook products reduce to sine ratios.
  const SpecializedTrace t21 =
      trace_at_specialization(YoungDiagram({2, 1}), 3, 6, std::nullopt);
  CHECK_FALSE(t21.ill_defined);
  CHECK(t21.sign == 1);
  CHECK(t21.value == doctest::Approx(3.0).epsilon(1e-9));

  // A hook equal to the order makes the underlying idempotent ill defined.
  const SpecializedTrace bad =
      trace_at_specialization(YoungDiagram({6}), 3, 6, std::nullopt);
  CHECK(bad.ill_defined);

  // A vanishing numerator factor gives an honest zero.
  const SpecializedTrace zero =
      trace_at_specialization(YoungDiagram({1, 1, 1, 1}), 3, 6, std::nullopt);
  CHECK_FALSE(zero.ill_defined);
  CHECK(zero.sign == 0);

  // Inside the compatibility window every small diagram is nonnegative.
  for (auto [N, m] : std::vector<std::pair<long, long>>{{3, 6}, {3, 7}, {2, 5}}) {
    for (int n = 1; n <= 4; ++n) {
      for (const YoungDiagram& lambda : partitions_of(n)) {
        const SpecializedTrace t =
            trace_at_specialization(lambda, N, m, std::nullopt);
        if (!t.ill_defined) CHECK(t.sign >= 0);
      }
    }
  }
}

TEST_CASE("specialized trace on the real ray") {
  // q real: matches the numeric trace at r = q^N.
  const SpecializedTrace t = trace_at_specialization(YoungDiagram({2}), 2,
                                                     std::nullopt, 1.5);
  CHECK_FALSE(t.ill_defined);
  CHECK(t.sign == 1);
  const std::complex<double> direct =
      trace_numeric(YoungDiagram({2}), {1.5, 0.0, 1e-9}, {2.25, 0.0, 1e-9})
          .value();
  CHECK(t.value == doctest::Approx(direct.real()).epsilon(1e-9));

  // At q0 = 1 the factors become plain integer ratios.
  const SpecializedTrace limit = trace_at_specialization(YoungDiagram({2}), 2,
                                                         std::nullopt, 1.0);
  CHECK_FALSE(limit.ill_defined);
  CHECK(limit.value == doctest::Approx(3.0));

  // On the ray r = q^N no diagram is ever negative: column contents are
  // consecutive, so a factor hits zero before any factor can flip sign.
  const SpecializedTrace zero3 = trace_at_specialization(
      YoungDiagram({1, 1, 1}), 2, std::nullopt, 1.3);
  CHECK_FALSE(zero3.ill_defined);
  CHECK(zero3.sign == 0);
  for (int n = 1; n <= 5; ++n) {
    for (const YoungDiagram& lambda : partitions_of(n)) {
      const SpecializedTrace t =
          trace_at_specialization(lambda, 2, std::nullopt, 1.3);
      CHECK_FALSE(t.ill_defined);
      CHECK(t.sign >= 0);
    }
  }

  CHECK_THROWS_AS(trace_at_specialization(YoungDiagram({2}), 2,
                                          std::optional<long>(6),
                                          std::optional<double>(1.5)),
                  std::domain_error);
}

TEST_CASE("pole of the generic trace at degenerate points") {
  // [1,1] has hook 2; its trace denominator vanishes at q = 1 even though
  // r stays generic.
  CHECK_THROWS_AS(
      (void)quantum_trace(YoungDiagram({1, 1})).eval({1.0, 0.0, 1e-9},
                                                     {1.9, 0.0, 1e-9}),
      PoleError);
  (void)r_rf();
}
