#include "skein/classify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>
#include <stdexcept>

namespace skein {

namespace {

constexpr double kGuardFactor = 1e3;
constexpr double kPi = 3.14159265358979323846;

double magnitude_scale(std::complex<double> v) {
  return std::max(1.0, std::abs(v));
}

}  // namespace

ParameterPoint ParameterPoint::root_of_unity(long N, long m) {
  if (!(0 < N && N < m))
    throw std::domain_error("root-of-unity point needs 0 < N < m");
  ParameterPoint p;
  p.mode = Mode::exact_root_of_unity;
  p.N = N;
  p.m = m;
  return p;
}

ParameterPoint ParameterPoint::real_power(double q0, long N) {
  if (!(q0 >= 1.0))
    throw std::domain_error("real point needs q0 >= 1");
  if (N < 1) throw std::domain_error("real point needs exponent N >= 1");
  ParameterPoint p;
  p.mode = Mode::exact_real;
  p.q0 = q0;
  p.real_exponent = N;
  return p;
}

ParameterPoint ParameterPoint::at(ComplexPoint q, ComplexPoint r) {
  if (std::abs(q.value()) == 0.0 || std::abs(r.value()) == 0.0)
    throw std::domain_error("numeric point needs nonzero q and r");
  ParameterPoint p;
  p.mode = Mode::numeric;
  p.q = q;
  p.r = r;
  return p;
}

std::complex<double> ParameterPoint::q_value() const {
  switch (mode) {
    case Mode::exact_root_of_unity:
      return std::polar(1.0, kPi / static_cast<double>(m));
    case Mode::exact_real:
      return {q0, 0.0};
    case Mode::numeric:
      break;
  }
  return q.value();
}

std::complex<double> ParameterPoint::r_value() const {
  switch (mode) {
    case Mode::exact_root_of_unity:
      return std::polar(1.0, kPi * static_cast<double>(N) /
                                 static_cast<double>(m));
    case Mode::exact_real:
      if (!real_exponent)
        throw std::domain_error("real point carries no exponent for r");
      return {std::pow(q0, static_cast<double>(*real_exponent)), 0.0};
    case Mode::numeric:
      break;
  }
  return r.value();
}

double ParameterPoint::tolerance() const {
  if (mode == Mode::numeric) return std::max(q.tol, r.tol);
  return 1e-9;
}

std::string Verdict::kind_name() const {
  switch (kind) {
    case Kind::positive_root_of_unity:
      return "PositiveRootOfUnity";
    case Kind::positive_real:
      return "PositiveReal";
    case Kind::negative:
      return "Negative";
    case Kind::indeterminate:
      break;
  }
  return "Indeterminate";
}

nlohmann::ordered_json Verdict::to_json() const {
  nlohmann::ordered_json j;
  j["kind"] = kind_name();
  if (kind == Kind::positive_root_of_unity) {
    j["N"] = N;
    j["l"] = l;
  } else if (kind == Kind::positive_real) {
    j["N"] = N;
  } else if (kind == Kind::negative) {
    j["witness"] = witness ? witness->to_string() : "";
    j["witness_trace"] = witness_trace;
  } else {
    j["reason"] = reason;
  }
  return j;
}

double gamma_at_unit_q(double delta) {
  const double den = (delta - 2.0) * (delta + 1.0);
  if (std::abs(den) < 1e-300)
    throw PoleError("gamma degenerates at delta = 2 or delta = -1");
  return (delta + 2.0) * (delta - 1.0) / den;
}

namespace {

const std::pair<RationalFunction, RationalFunction>& cached_traces() {
  static const std::pair<RationalFunction, RationalFunction> traces =
      hecke_idempotent_traces();
  return traces;
}

std::pair<std::complex<double>, std::complex<double>> trace_pair_at(
    std::complex<double> q, std::complex<double> r, double tol) {
  const auto& [tp, tq] = cached_traces();
  const ComplexPoint qp = ComplexPoint::of(q, tol);
  const ComplexPoint rp = ComplexPoint::of(r, tol);
  return {tp.eval(qp, rp), tq.eval(qp, rp)};
}

}  // namespace

DeltaGamma delta_gamma_from_qr(const ParameterPoint& p) {
  const std::complex<double> qv = p.q_value();
  const std::complex<double> rv = p.r_value();
  const double tol = p.tolerance();
  const std::complex<double> z = qv - 1.0 / qv;

  DeltaGamma out;
  if (std::abs(z) <= tol * magnitude_scale(qv)) {
    if (!p.delta_override)
      throw PoleError(
          "circle parameter undefined at q = +-1 without an explicit value");
    out.delta = {*p.delta_override, 0.0};
    out.gamma = {gamma_at_unit_q(*p.delta_override), 0.0};
    return out;
  }
  out.delta = (rv - 1.0 / rv) / z;
  const auto [tp, tq] = trace_pair_at(qv, rv, tol);
  if (std::abs(tp) <= tol)
    throw PoleError("first idempotent trace vanishes; gamma undefined");
  out.gamma = tq / tp;
  return out;
}

CorrespondenceResult qr_from_delta_gamma(double delta, double gamma,
                                         double tol) {
  if (delta == 0.0)
    throw std::domain_error("correspondence needs a nonzero circle parameter");
  if (std::abs(gamma + 1.0) <= tol)
    throw std::domain_error("gamma = -1 makes the trace split degenerate");

  CorrespondenceResult result;

  // The q = 1 degeneration only exists past the index-4 threshold.
  const double special = delta > 2.0 ? gamma_at_unit_q(delta) : 0.0;
  if (delta > 2.0 &&
      std::abs(gamma - special) <= tol * std::max(1.0, std::abs(special))) {
    ParameterPoint p = ParameterPoint::at(ComplexPoint{1.0, 0.0, tol},
                                          ComplexPoint{1.0, 0.0, tol});
    p.delta_override = delta;
    result.points.push_back(p);
    return result;
  }

  const double K = (delta * delta - 2.0) / delta * (gamma - 1.0) /
                   (gamma + 1.0);
  const double den = delta * delta - K * K;
  if (std::abs(den) <= tol) {
    result.diagnostic = "degenerate correspondence: delta^2 = K^2";
    return result;
  }
  const double x = 2.0 * (delta * delta - 2.0 + K * K) / den;
  if (x + 2.0 < -tol) {
    result.diagnostic = "negative radicand: q + 1/q would not be real";
    return result;
  }
  if (std::abs(x - 2.0) <= tol) {
    result.diagnostic =
        "solutions degenerate to q = +-1 with swapped trace labels";
    return result;
  }

  std::vector<std::complex<double>> q_candidates;
  const double s0 = std::sqrt(std::max(0.0, x + 2.0));
  for (double s : {s0, -s0}) {
    const double disc = s * s - 4.0;
    if (disc >= 0.0) {
      const double root = std::sqrt(disc);
      q_candidates.emplace_back((s + root) / 2.0, 0.0);
      q_candidates.emplace_back((s - root) / 2.0, 0.0);
    } else {
      const double root = std::sqrt(-disc);
      q_candidates.emplace_back(s / 2.0, root / 2.0);
      q_candidates.emplace_back(s / 2.0, -root / 2.0);
    }
  }

  const double target_sum = delta * delta * delta - 2.0 * delta;
  const std::complex<double> A{target_sum / (1.0 + gamma), 0.0};
  const std::complex<double> B{gamma * target_sum / (1.0 + gamma), 0.0};
  const double scale = std::max({1.0, std::abs(A), std::abs(B)});
  const double ftol = 1e4 * tol * scale;

  std::vector<std::pair<std::complex<double>, std::complex<double>>> kept;
  for (const std::complex<double>& qc : q_candidates) {
    if (std::abs(qc) <= tol) continue;
    if (std::abs(qc - 1.0) <= tol || std::abs(qc + 1.0) <= tol) continue;
    const std::complex<double> z = qc - 1.0 / qc;
    const std::complex<double> disc =
        delta * delta * z * z + 4.0;
    const std::complex<double> root = std::sqrt(disc);
    for (int sign : {1, -1}) {
      const std::complex<double> rc =
          (delta * z + static_cast<double>(sign) * root) / 2.0;
      if (std::abs(rc) <= tol) continue;
      std::complex<double> tp, tq;
      try {
        std::tie(tp, tq) = trace_pair_at(qc, rc, tol);
      } catch (const PoleError&) {
        continue;
      }
      if (std::abs(tp - A) > ftol || std::abs(tq - B) > ftol) continue;
      bool duplicate = false;
      for (const auto& [kq, kr] : kept) {
        if (std::abs(kq - qc) <= kGuardFactor * tol * magnitude_scale(qc) &&
            std::abs(kr - rc) <= kGuardFactor * tol * magnitude_scale(rc)) {
          duplicate = true;
          break;
        }
      }
      if (!duplicate) kept.emplace_back(qc, rc);
    }
  }

  std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) {
    return std::make_tuple(a.first.real(), a.first.imag(), a.second.real(),
                           a.second.imag()) <
           std::make_tuple(b.first.real(), b.first.imag(), b.second.real(),
                           b.second.imag());
  });
  for (const auto& [qc, rc] : kept)
    result.points.push_back(
        ParameterPoint::at(ComplexPoint::of(qc, tol), ComplexPoint::of(rc, tol)));
  if (result.points.empty() && result.diagnostic.empty())
    result.diagnostic = "no candidate reproduced the trace pair";
  return result;
}

std::vector<ParameterPoint> symmetry_orbit(const ParameterPoint& p) {
  const std::complex<double> qv = p.q_value();
  const std::complex<double> rv = p.r_value();
  const double tol = p.tolerance();
  const std::vector<std::pair<std::complex<double>, std::complex<double>>>
      members = {{qv, rv},
                 {-1.0 / qv, rv},
                 {-qv, -rv},
                 {1.0 / qv, 1.0 / rv}};
  std::vector<ParameterPoint> out;
  for (const auto& [mq, mr] : members) {
    ParameterPoint member =
        ParameterPoint::at(ComplexPoint::of(mq, tol), ComplexPoint::of(mr, tol));
    member.delta_override = p.delta_override;
    out.push_back(member);
  }
  return out;
}

namespace {

// Trace in the q -> 1 limit at circle parameter delta: the product over
// cells of (delta + content)/hook.
double unit_q_limit_trace(const YoungDiagram& diagram, double delta) {
  double acc = 1.0;
  for (const Cell& cell : cells(diagram))
    acc *= (delta + static_cast<double>(cell.content)) /
           static_cast<double>(cell.hook);
  return acc;
}

}  // namespace

std::optional<double> real_trace_at(const YoungDiagram& diagram,
                                    const ParameterPoint& p) {
  switch (p.mode) {
    case ParameterPoint::Mode::exact_root_of_unity: {
      const SpecializedTrace st =
          trace_at_specialization(diagram, p.N, p.m, std::nullopt);
      if (st.ill_defined) return std::nullopt;
      // The residue computation makes the sign authoritative.
      if (st.sign < 0) return -std::abs(st.value);
      if (st.sign > 0) return std::abs(st.value);
      return 0.0;
    }
    case ParameterPoint::Mode::exact_real: {
      if (!p.real_exponent) return std::nullopt;
      const SpecializedTrace st = trace_at_specialization(
          diagram, *p.real_exponent, std::nullopt, p.q0);
      if (st.ill_defined) return std::nullopt;
      if (st.sign < 0) return -std::abs(st.value);
      if (st.sign > 0) return std::abs(st.value);
      return 0.0;
    }
    case ParameterPoint::Mode::numeric:
      break;
  }
  const double tol = p.tolerance();
  const std::complex<double> qv = p.q_value();
  if (p.delta_override &&
      std::abs(qv - 1.0 / qv) <= tol * magnitude_scale(qv))
    return unit_q_limit_trace(diagram, *p.delta_override);
  try {
    const ComplexPoint t = trace_numeric(diagram, p.q, p.r);
    const std::complex<double> v = t.value();
    if (std::abs(v.imag()) > kGuardFactor * tol * std::max(1.0, std::abs(v)))
      return std::nullopt;  // not a real trace; no sign to report
    return v.real();
  } catch (const PoleError&) {
    return std::nullopt;
  }
}

std::optional<YoungDiagram> witness_search(const ParameterPoint& p,
                                           int max_cells) {
  const bool exact = p.mode != ParameterPoint::Mode::numeric;
  const double floor_value = exact ? 0.0 : p.tolerance();
  for (int cells = 1; cells <= max_cells; ++cells) {
    for (const YoungDiagram& diagram : partitions_of(cells)) {
      const std::optional<double> t = real_trace_at(diagram, p);
      if (t && *t < -floor_value) return diagram;
    }
  }
  return std::nullopt;
}

namespace {

Verdict indeterminate(std::string reason) {
  Verdict v;
  v.kind = Verdict::Kind::indeterminate;
  v.reason = std::move(reason);
  return v;
}

Verdict negative_with(const YoungDiagram& witness, double trace) {
  Verdict v;
  v.kind = Verdict::Kind::negative;
  v.witness = witness;
  v.witness_trace = trace;
  return v;
}

Verdict positive_real_verdict(long N) {
  Verdict v;
  v.kind = Verdict::Kind::positive_real;
  v.N = N;
  return v;
}

Verdict positive_root_verdict(long N, long l) {
  Verdict v;
  v.kind = Verdict::Kind::positive_root_of_unity;
  v.N = N;
  v.l = l;
  return v;
}

YoungDiagram column_diagram(int cells) {
  return YoungDiagram(std::vector<int>(cells, 1));
}

YoungDiagram row_diagram(int cells) {
  return YoungDiagram(std::vector<int>{cells});
}

// Verify the proposed witness numerically; fall back to the exhaustive
// search; give up with an honest reason.
Verdict negative_or_search(const ParameterPoint& p, const YoungDiagram& guess,
                           int witness_cap, double tol) {
  const std::optional<double> t = real_trace_at(guess, p);
  if (t && *t < -tol) return negative_with(guess, *t);
  const std::optional<YoungDiagram> found = witness_search(p, witness_cap);
  if (found) return negative_with(*found, *real_trace_at(*found, p));
  return indeterminate("expected a negative witness but none was found up to "
                       "the search cap");
}

Verdict scan_first(const ParameterPoint& p, int witness_cap,
                   std::string fallback_reason) {
  const std::optional<YoungDiagram> found = witness_search(p, witness_cap);
  if (found) {
    const std::optional<double> t = real_trace_at(*found, p);
    return negative_with(*found, t ? *t : 0.0);
  }
  return indeterminate(std::move(fallback_reason));
}

const char* kSmallIndexReason =
    "index at most 4 regime: beyond the discrete series, positivity here "
    "belongs to either the E_6 or E_6^{(1)} family and is not decided by "
    "this procedure";

Verdict decide_real(double qre, double rre, const ParameterPoint& original,
                    int witness_cap) {
  const double tol = original.tolerance();
  const double guard = kGuardFactor * tol;
  if (rre < 0.0) {
    // Replacing r by -1/r preserves every trace value while transposing the
    // diagram it belongs to, so decide there and transpose the witness back.
    Verdict v = decide_real(qre, -1.0 / rre, original, witness_cap);
    if (v.kind == Verdict::Kind::negative && v.witness)
      v.witness = v.witness->transpose();
    return v;
  }
  ParameterPoint pnorm = ParameterPoint::at(ComplexPoint{qre, 0.0, tol},
                                            ComplexPoint{rre, 0.0, tol});

  const double delta = (rre - 1.0 / rre) / (qre - 1.0 / qre);
  if (delta <= 2.0 + tol)
    return scan_first(pnorm, witness_cap, kSmallIndexReason);

  // delta > 2 forces r > 1 here, so the logarithm ratio is positive.
  const double ratio = std::log(rre) / std::log(qre);
  const long nearest = std::lround(ratio);
  const double resid =
      nearest >= 1
          ? std::abs(rre - std::pow(qre, static_cast<double>(nearest))) / rre
          : 1.0;
  if (resid <= tol) {
    if (nearest > 24)
      return indeterminate("exponent exceeds the detection cap of 24");
    return positive_real_verdict(nearest);
  }
  if (resid <= guard)
    return indeterminate(
        "within the guard band of r = q^N; tighten the input");

  const long below = static_cast<long>(std::floor(ratio));
  if (below + 2 > 200)
    return indeterminate("witness size beyond the supported bound");
  return negative_or_search(pnorm, column_diagram(static_cast<int>(below) + 2),
                            witness_cap, tol);
}

Verdict decide_unit_circle(std::complex<double> q, std::complex<double> r,
                           const ParameterPoint& original, int witness_cap) {
  const double tol = original.tolerance();
  const double guard = kGuardFactor * tol;

  // Conjugation preserves the trace values; use it to put q in the upper
  // half plane, then the parameter symmetry to bring the angle below pi/2.
  double theta = std::arg(q);
  double alpha = std::arg(r);
  if (theta < 0.0) {
    theta = -theta;
    alpha = -alpha;
  }
  if (theta > kPi / 2.0) {
    theta = kPi - theta;  // replaces q by -1/q, which keeps r
  }
  if (theta <= guard)
    return indeterminate(
        "q within tolerance of the q = +-1 boundary; use an exact mode");

  if (std::abs(std::abs(r) - 1.0) > guard) {
    ParameterPoint pnorm = ParameterPoint::at(
        ComplexPoint::of(std::polar(1.0, theta), tol), ComplexPoint::of(r, tol));
    return scan_first(pnorm,  witness_cap,
                      "no positive family contains unimodular q with r off "
                      "the unit circle");
  }

  // The parameter symmetries fix theta and act on alpha only through
  // alpha -> pi - alpha; pick the representative inside (0, pi).
  auto principal = [](double a) {
    while (a <= -kPi) a += 2.0 * kPi;
    while (a > kPi) a -= 2.0 * kPi;
    return a;
  };
  alpha = principal(alpha);
  const double mirrored = principal(kPi - alpha);
  double chosen = -1.0;
  for (double candidate : {alpha, mirrored}) {
    if (candidate > 0.0 && candidate < kPi) {
      chosen = candidate;
      break;
    }
  }
  if (chosen < 0.0)
    return indeterminate(
        "r lies outside the band theta < alpha < pi - theta where the case "
        "analysis applies");
  if (chosen <= theta + guard || chosen >= kPi - theta - guard) {
    if (chosen > theta - guard && chosen < kPi - theta + guard)
      return indeterminate("alpha within the guard band of the case-analysis "
                           "boundary");
    return indeterminate(
        "r lies outside the band theta < alpha < pi - theta where the case "
        "analysis applies");
  }

  const std::complex<double> qn = std::polar(1.0, theta);
  const std::complex<double> rn = std::polar(1.0, chosen);
  ParameterPoint pnorm =
      ParameterPoint::at(ComplexPoint::of(qn, tol), ComplexPoint::of(rn, tol));

  const double delta = std::sin(chosen) / std::sin(theta);
  if (delta <= 2.0 + tol)
    return scan_first(pnorm, witness_cap, kSmallIndexReason);

  const double ratio = chosen / theta;
  const long nearest = std::lround(ratio);
  const double angle_resid = std::abs(chosen - static_cast<double>(nearest) * theta);
  if (nearest >= 1 && angle_resid <= tol) {
    const double order = kPi / theta;
    const long order_nearest = std::lround(order);
    const double order_resid =
        std::abs(kPi - static_cast<double>(order_nearest) * theta);
    if (order_resid <= tol) {
      if (nearest < order_nearest)
        return positive_root_verdict(nearest, order_nearest - nearest);
      return indeterminate("angle ratio escapes 0 < N < m");
    }
    if (order_resid <= guard)
      return indeterminate("within the guard band of a root of unity");
    const long l = static_cast<long>(std::floor(order)) - nearest;
    return negative_or_search(pnorm, row_diagram(static_cast<int>(l) + 2),
                              witness_cap, tol);
  }
  if (nearest >= 1 && angle_resid <= guard)
    return indeterminate("within the guard band of alpha = N theta");

  const long below = static_cast<long>(std::floor(ratio));
  return negative_or_search(pnorm, column_diagram(static_cast<int>(below) + 2),
                            witness_cap, tol);
}

Verdict decide_numeric(const ParameterPoint& p, int witness_cap) {
  const double tol = p.tolerance();
  const double guard = kGuardFactor * tol;
  std::complex<double> q = p.q_value();
  std::complex<double> r = p.r_value();

  if (std::abs(q.imag()) <= tol * magnitude_scale(q)) {
    // Real q: normalize the sign and the inversion symmetry.
    double qre = q.real();
    std::complex<double> rr = r;
    if (qre < 0.0) {
      qre = -qre;
      rr = -rr;
    }
    if (qre < 1.0 && qre > 0.0) {
      qre = 1.0 / qre;
      rr = 1.0 / rr;
    }
    if (std::abs(qre - 1.0) <= guard) {
      if (p.delta_override) {
        const double d = *p.delta_override;
        const long nearest = std::lround(d);
        if (nearest >= 1 &&
            std::abs(d - static_cast<double>(nearest)) <= tol)
          return positive_real_verdict(nearest);
        if (nearest >= 1 &&
            std::abs(d - static_cast<double>(nearest)) <= guard)
          return indeterminate(
              "circle parameter within the guard band of an integer");
        if (d <= 2.0 + tol) {
          ParameterPoint pq1 = p;
          return scan_first(pq1, witness_cap, kSmallIndexReason);
        }
        const long below = static_cast<long>(std::floor(d));
        const YoungDiagram guess = column_diagram(static_cast<int>(below) + 2);
        const double value = unit_q_limit_trace(guess, d);
        if (value < -tol) return negative_with(guess, value);
        return indeterminate("no limit witness at q = 1");
      }
      return indeterminate(
          "q within tolerance of the q = +-1 boundary; supply the circle "
          "parameter exactly");
    }
    if (std::abs(rr.imag()) > tol * magnitude_scale(rr))
      return indeterminate("circle parameter is not real");
    const double rre = rr.real();
    if (std::abs(rre) <= tol)
      return indeterminate("r vanishes to tolerance");
    return decide_real(qre, rre, p, witness_cap);
  }

  if (std::abs(std::abs(q) - 1.0) <= 10.0 * tol)
    return decide_unit_circle(q, r, p, witness_cap);

  return indeterminate(
      "q is neither real nor on the unit circle after normalization; no "
      "positive family applies");
}

}  // namespace

Verdict positivity(const ParameterPoint& p, int witness_cap) {
  switch (p.mode) {
    case ParameterPoint::Mode::exact_root_of_unity:
      return positive_root_verdict(p.N, p.m - p.N);
    case ParameterPoint::Mode::exact_real:
      if (!p.real_exponent)
        return indeterminate("real point without an exponent is undecided");
      return positive_real_verdict(*p.real_exponent);
    case ParameterPoint::Mode::numeric:
      break;
  }
  return decide_numeric(p, witness_cap);
}

std::vector<ScanPoint> scan_grid(ScanShape shape, double a_lo, double a_hi,
                                 int a_count, double b_lo, double b_hi,
                                 int b_count, int witness_cap) {
  if (a_count < 1 || b_count < 1)
    throw std::domain_error("grid needs at least one point per axis");
  const double a_step = a_count > 1 ? (a_hi - a_lo) / (a_count - 1) : 0.0;
  const double b_step = b_count > 1 ? (b_hi - b_lo) / (b_count - 1) : 0.0;

  std::vector<ScanPoint> out(static_cast<std::size_t>(a_count) *
                             static_cast<std::size_t>(b_count));
  auto eval_row = [&](int i) {
    const double a = a_lo + a_step * i;
    for (int j = 0; j < b_count; ++j) {
      const double b = b_lo + b_step * j;
      std::complex<double> qv, rv;
      if (shape == ScanShape::real_axis) {
        qv = {a, 0.0};
        rv = {b, 0.0};
      } else {
        qv = std::polar(1.0, a);
        rv = std::polar(1.0, b);
      }
      ScanPoint& cell = out[static_cast<std::size_t>(i) * b_count + j];
      cell.q = ComplexPoint::of(qv, 1e-9);
      cell.r = ComplexPoint::of(rv, 1e-9);
      const ParameterPoint point = ParameterPoint::at(cell.q, cell.r);
      try {
        const DeltaGamma dg = delta_gamma_from_qr(point);
        cell.delta = dg.delta;
        cell.gamma = dg.gamma;
        cell.params_ok = true;
      } catch (const PoleError&) {
        cell.params_ok = false;
      }
      cell.verdict = positivity(point, witness_cap);
    }
  };

  std::vector<std::future<void>> rows;
  rows.reserve(a_count);
  for (int i = 0; i < a_count; ++i)
    rows.push_back(std::async(std::launch::async, eval_row, i));
  for (std::future<void>& row : rows) row.get();
  return out;
}

namespace {

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string format_param(bool ok, std::complex<double> v) {
  if (!ok) return "nan";
  if (std::abs(v.imag()) > 1e-6 * std::max(1.0, std::abs(v.real())))
    return "nan";
  return format_double(v.real());
}

}  // namespace

std::string scan_csv(const std::vector<ScanPoint>& points) {
  std::ostringstream os;
  os << "q_re,q_im,r_re,r_im,delta,gamma,verdict,witness,trace_value\n";
  for (const ScanPoint& p : points) {
    os << format_double(p.q.re) << ',' << format_double(p.q.im) << ','
       << format_double(p.r.re) << ',' << format_double(p.r.im) << ','
       << format_param(p.params_ok, p.delta) << ','
       << format_param(p.params_ok, p.gamma) << ','
       << p.verdict.kind_name() << ',';
    if (p.verdict.witness)
      os << '"' << p.verdict.witness->to_string() << '"';
    os << ',';
    if (p.verdict.kind == Verdict::Kind::negative)
      os << format_double(p.verdict.witness_trace);
    os << '\n';
  }
  return os.str();
}

nlohmann::ordered_json scan_json(const std::vector<ScanPoint>& points) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const ScanPoint& p : points) {
    nlohmann::ordered_json row;
    row["q_re"] = p.q.re;
    row["q_im"] = p.q.im;
    row["r_re"] = p.r.re;
    row["r_im"] = p.r.im;
    if (p.params_ok) {
      row["delta"] = p.delta.real();
      row["gamma"] = p.gamma.real();
    } else {
      row["delta"] = nullptr;
      row["gamma"] = nullptr;
    }
    row["verdict"] = p.verdict.to_json();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace skein
