#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "skein/classify.hpp"

using namespace skein;

namespace {

ParameterPoint numeric_point(double qre, double qim, double rre, double rim) {
  return ParameterPoint::at({qre, qim, 1e-9}, {rre, rim, 1e-9});
}

ParameterPoint real_pair(double q0, double r0) {
  return numeric_point(q0, 0.0, r0, 0.0);
}

}  // namespace

TEST_CASE("delta and gamma from a parameter point") {
  const DeltaGamma dg = delta_gamma_from_qr(real_pair(1.2, 1.728));
  CHECK(dg.delta.real() == doctest::Approx(3.134444444444444).epsilon(1e-12));
  CHECK(dg.delta.imag() == doctest::Approx(0.0));
  CHECK(dg.gamma.real() == doctest::Approx(2.665938457979064).epsilon(1e-9));

  // Exact modes evaluate their defining representatives.
  const DeltaGamma root = delta_gamma_from_qr(ParameterPoint::root_of_unity(3, 6));
  const double expected = std::sin(3.0 * M_PI / 6.0) / std::sin(M_PI / 6.0);
  CHECK(root.delta.real() == doctest::Approx(expected).epsilon(1e-12));

  // q on the degenerate boundary requires an explicit circle parameter.
  CHECK_THROWS_AS(delta_gamma_from_qr(real_pair(1.0, 2.0)), PoleError);
  ParameterPoint with_override = real_pair(1.0, 1.0);
  with_override.delta_override = 3.0;
  const DeltaGamma forced = delta_gamma_from_qr(with_override);
  CHECK(forced.delta.real() == doctest::Approx(3.0));
  CHECK(forced.gamma.real() == doctest::Approx(gamma_at_unit_q(3.0)));
}

TEST_CASE("gamma of the unit q degeneration") {
  CHECK(gamma_at_unit_q(3.0) == doctest::Approx(2.5));
  // (delta+2)(delta-1) / ((delta-2)(delta+1)) at delta = 4.
  CHECK(gamma_at_unit_q(4.0) == doctest::Approx(18.0 / 10.0));
}

TEST_CASE("parameter point validation") {
  CHECK_THROWS_AS(ParameterPoint::root_of_unity(6, 3), std::domain_error);
  CHECK_THROWS_AS(ParameterPoint::root_of_unity(0, 3), std::domain_error);
  CHECK_THROWS_AS(ParameterPoint::real_power(0.9, 2), std::domain_error);
  CHECK_THROWS_AS(ParameterPoint::real_power(1.2, 0), std::domain_error);
  CHECK_THROWS_AS(numeric_point(0.0, 0.0, 1.0, 0.0).q_value(),
                  std::domain_error);
  CHECK_NOTHROW(ParameterPoint::root_of_unity(2, 5));
}

TEST_CASE("symmetry orbit") {
  const std::vector<ParameterPoint> orbit =
      symmetry_orbit(real_pair(1.2, 1.9));
  REQUIRE(orbit.size() == 4);

  auto contains = [&](std::complex<double> q, std::complex<double> r) {
    for (const ParameterPoint& p : orbit)
      if (std::abs(p.q_value() - q) < 1e-12 &&
          std::abs(p.r_value() - r) < 1e-12)
        return true;
    return false;
  };
  CHECK(contains({1.2, 0.0}, {1.9, 0.0}));
  CHECK(contains({-1.0 / 1.2, 0.0}, {1.9, 0.0}));
  CHECK(contains({-1.2, 0.0}, {-1.9, 0.0}));
  CHECK(contains({1.0 / 1.2, 0.0}, {1.0 / 1.9, 0.0}));

  // Each listed map is an involution up to the others: every member's own
  // orbit leads back to the original point.
  for (const ParameterPoint& m : orbit) {
    bool found = false;
    for (const ParameterPoint& back : symmetry_orbit(m))
      if (std::abs(back.q_value() - std::complex<double>(1.2)) < 1e-12 &&
          std::abs(back.r_value() - std::complex<double>(1.9)) < 1e-12)
        found = true;
    CHECK(found);
  }
}

TEST_CASE("correspondence special case at the unit q curve") {
  const CorrespondenceResult res = qr_from_delta_gamma(3.0, 2.5);
  REQUIRE(res.points.size() == 1);
  CHECK(res.points[0].q_value().real() == doctest::Approx(1.0));
  REQUIRE(res.points[0].delta_override.has_value());
  CHECK(*res.points[0].delta_override == doctest::Approx(3.0));
  CHECK(res.diagnostic.empty());

  CHECK_THROWS_AS(qr_from_delta_gamma(0.0, 1.5), std::domain_error);
  CHECK_THROWS_AS(qr_from_delta_gamma(3.0, -1.0), std::domain_error);
}

TEST_CASE("correspondence roundtrip at a fixed point") {
  const DeltaGamma dg = delta_gamma_from_qr(real_pair(1.3, 2.197));
  const CorrespondenceResult res =
      qr_from_delta_gamma(dg.delta.real(), dg.gamma.real());
  CHECK(res.diagnostic.empty());
  REQUIRE(!res.points.empty());

  double best = 1e18;
  for (const ParameterPoint& p : res.points) {
    // Every returned point solves the correspondence.
    const DeltaGamma back = delta_gamma_from_qr(p);
    CHECK(std::abs(back.delta - dg.delta) < 1e-9);
    CHECK(std::abs(back.gamma - dg.gamma) < 1e-9);
    best = std::min(best, std::abs(p.q_value() - std::complex<double>(1.3)) +
                              std::abs(p.r_value() -
                                       std::complex<double>(2.197)));
  }
  // And one of them is the point we started from.
  CHECK(best < 1e-9);
}

TEST_CASE("correspondence roundtrip over random points") {
  std::mt19937 rng(77130);
  std::uniform_real_distribution<double> pick_q(1.02, 2.0);
  std::uniform_real_distribution<double> pick_t(0.1, 0.9);
  int done = 0;
  for (int trial = 0; trial < 60 && done < 30; ++trial) {
    const double q0 = pick_q(rng);
    // r strictly between q and q^5, clear of the q = r ray.
    const double r0 = std::pow(q0, 1.0 + 4.0 * pick_t(rng)) * 1.001;
    DeltaGamma dg;
    try {
      dg = delta_gamma_from_qr(real_pair(q0, r0));
    } catch (const PoleError&) {
      continue;
    }
    if (std::abs(dg.gamma.imag()) > 1e-9) continue;
    CorrespondenceResult res;
    try {
      res = qr_from_delta_gamma(dg.delta.real(), dg.gamma.real());
    } catch (const std::domain_error&) {
      continue;
    }
    if (!res.diagnostic.empty()) continue;
    ++done;
    REQUIRE(!res.points.empty());
    double best = 1e18;
    for (const ParameterPoint& p : res.points) {
      const DeltaGamma back = delta_gamma_from_qr(p);
      CHECK(std::abs(back.delta - dg.delta) <
            1e-6 * std::max(1.0, std::abs(dg.delta)));
      CHECK(std::abs(back.gamma - dg.gamma) <
            1e-6 * std::max(1.0, std::abs(dg.gamma)));
      best = std::min(best,
                      std::abs(p.q_value() - std::complex<double>(q0)) +
                          std::abs(p.r_value() - std::complex<double>(r0)));
    }
    CAPTURE(q0);
    CAPTURE(r0);
    CHECK(best < 1e-6);
  }
  CHECK(done == 30);
}

TEST_CASE("positivity on the discrete families") {
  const Verdict real3 = positivity(real_pair(1.2, 1.728));
  CHECK(real3.kind == Verdict::Kind::positive_real);
  CHECK(real3.N == 3);
  CHECK(real3.kind_name() == "PositiveReal");

  const Verdict exact_real = positivity(ParameterPoint::real_power(1.2, 3));
  CHECK(exact_real.kind == Verdict::Kind::positive_real);
  CHECK(exact_real.N == 3);

  const Verdict root = positivity(ParameterPoint::root_of_unity(3, 6));
  CHECK(root.kind == Verdict::Kind::positive_root_of_unity);
  CHECK(root.N == 3);
  CHECK(root.l == 3);
  CHECK(root.kind_name() == "PositiveRootOfUnity");

  const Verdict root2 = positivity(ParameterPoint::root_of_unity(2, 7));
  CHECK(root2.kind == Verdict::Kind::positive_root_of_unity);
  CHECK(root2.N == 2);
  CHECK(root2.l == 5);
}

TEST_CASE("negative points carry a checked witness") {
  const Verdict v = positivity(real_pair(1.2, 1.9));
  CHECK(v.kind == Verdict::Kind::negative);
  REQUIRE(v.witness.has_value());
  CHECK(v.witness->to_string() == "1,1,1,1,1");
  CHECK(v.witness_trace == doctest::Approx(-0.02342065019029146).epsilon(1e-9));
  CHECK(v.witness_trace < 0.0);

  // The trace really is negative at the point itself.
  const auto confirm = real_trace_at(*v.witness, real_pair(1.2, 1.9));
  REQUIRE(confirm.has_value());
  CHECK(*confirm == doctest::Approx(v.witness_trace));

  // The label-swapped orbit member reports the transposed witness with the
  // same trace value.
  const Verdict swapped = positivity(real_pair(-1.0 / 1.2, 1.9));
  CHECK(swapped.kind == Verdict::Kind::negative);
  REQUIRE(swapped.witness.has_value());
  CHECK(swapped.witness->to_string() == "5");
  CHECK(swapped.witness_trace == doctest::Approx(v.witness_trace));
}

TEST_CASE("witness search") {
  const auto hit = witness_search(real_pair(1.2, 1.9), 6);
  REQUIRE(hit.has_value());
  CHECK(hit->to_string() == "1,1,1,1,1");

  // No witness exists below five cells at this point.
  CHECK(!witness_search(real_pair(1.2, 1.9), 4).has_value());

  // Positive points have no witness at all.
  CHECK(!witness_search(real_pair(1.2, 1.728), 8).has_value());
}

TEST_CASE("verdict kind is constant along each symmetry orbit") {
  std::mt19937 rng(40925);
  std::uniform_real_distribution<double> pick_q(1.05, 1.9);
  std::uniform_real_distribution<double> pick_e(1.2, 4.8);
  for (int trial = 0; trial < 30; ++trial) {
    const double q0 = pick_q(rng);
    const double r0 = std::pow(q0, pick_e(rng));
    const Verdict base = positivity(real_pair(q0, r0), 8);
    CAPTURE(q0);
    CAPTURE(r0);
    for (const ParameterPoint& p : symmetry_orbit(real_pair(q0, r0))) {
      const Verdict v = positivity(p, 8);
      CHECK(v.kind == base.kind);
    }
  }
}

TEST_CASE("small index window is left to the exceptional families") {
  // q = exp(i pi/6), r = i sits at delta <= 2.
  const double c30 = std::sqrt(3.0) / 2.0;
  const Verdict v = positivity(numeric_point(c30, 0.5, 0.0, 1.0));
  CHECK(v.kind == Verdict::Kind::indeterminate);
  CHECK(v.reason.find("E_6") != std::string::npos);
  CHECK(v.reason.find("E_6^{(1)}") != std::string::npos);
}

TEST_CASE("degenerate q needs the explicit circle parameter") {
  const Verdict near_one = positivity(real_pair(1.0 + 1e-12, 2.0));
  CHECK(near_one.kind == Verdict::Kind::indeterminate);
  CHECK(near_one.reason.find("circle parameter") != std::string::npos);

  ParameterPoint p = real_pair(1.0, 1.0);
  p.delta_override = 3.0;
  const Verdict forced = positivity(p);
  CHECK(forced.kind == Verdict::Kind::positive_real);
  CHECK(forced.N == 3);

  // Off the integer gamma curve the unit q limit goes negative, with the
  // limiting trace value reported exactly.
  p.delta_override = 2.5;
  const Verdict off = positivity(p);
  CHECK(off.kind == Verdict::Kind::negative);
  REQUIRE(off.witness.has_value());
  CHECK(off.witness->to_string() == "1,1,1,1");
  CHECK(off.witness_trace == doctest::Approx(-0.0390625).epsilon(1e-12));

  p.delta_override = 2.2;
  const Verdict off2 = positivity(p);
  CHECK(off2.kind == Verdict::Kind::negative);
  REQUIRE(off2.witness.has_value());
  CHECK(off2.witness->to_string() == "1,1,1,1");
}

TEST_CASE("guard band separates resolvable points from borderline ones") {
  const double q0 = 1.2;
  // Within the guard band of r = q^3 the ratio test refuses to decide.
  const Verdict close =
      positivity(real_pair(q0, std::pow(q0, 3.0) * (1.0 + 1e-7)));
  CHECK(close.kind == Verdict::Kind::indeterminate);

  // Clearly off the ray the verdict is negative.
  const Verdict off =
      positivity(real_pair(q0, std::pow(q0, 3.0) * (1.0 + 1e-3)));
  CHECK(off.kind == Verdict::Kind::negative);
  CHECK(off.witness.has_value());
}

TEST_CASE("grid scan is deterministic") {
  const auto run = [] {
    return scan_grid(ScanShape::real_axis, 1.05, 1.4, 3, 1.1, 2.2, 3, 8);
  };
  const std::vector<ScanPoint> a = run();
  const std::vector<ScanPoint> b = run();
  REQUIRE(a.size() == 9);
  const std::string csv_a = scan_csv(a);
  CHECK(csv_a == scan_csv(b));
  CHECK(csv_a.rfind("q_re,q_im,r_re,r_im,delta,gamma,verdict,witness,"
                    "trace_value\n",
                    0) == 0);

  // Points come in row-major order with params attached.
  CHECK(a[0].q.re == doctest::Approx(1.05));
  CHECK(a[0].params_ok);

  const auto doc = scan_json(a);
  REQUIRE(doc.is_array());
  CHECK(doc.size() == 9);

  CHECK_THROWS_AS(scan_grid(ScanShape::real_axis, 1.0, 2.0, 0, 1.0, 2.0, 3, 8),
                  std::domain_error);
}
