#include "skein/threebox.hpp"

#include <stdexcept>

namespace skein {

Rational omega_pair_sum(OmegaTag tag) {
  return tag == OmegaTag::one ? Rational(2) : Rational(-1);
}

RationalFunction rf_delta() {
  return RationalFunction(LaurentPoly::var_first(vars_dg()));
}

RationalFunction rf_gamma() {
  return RationalFunction(LaurentPoly::var_second(vars_dg()));
}

namespace {

RationalFunction rf_dg(long k) {
  return RationalFunction(LaurentPoly::constant(Rational(k), vars_dg()));
}

}  // namespace

TLElement tl3_identity_element() {
  return TLElement::identity(3, rf_delta());
}

TLElement tl3_jones_wenzl() {
  static const TLElement f3 = jones_wenzl(3, rf_delta());
  return f3;
}

ThreeBoxElement tb_zero() {
  return {TLElement::zero(3, rf_delta()), rf_dg(0)};
}

ThreeBoxElement tb_identity() { return {tl3_identity_element(), rf_dg(0)}; }

ThreeBoxElement tb_generator() {
  return {TLElement::zero(3, rf_delta()), rf_dg(1)};
}

ThreeBoxElement tb_from_tl(TLElement tl) {
  if (tl.strands() != 3)
    throw std::domain_error("three-box element needs three strands");
  return {std::move(tl), rf_dg(0)};
}

std::vector<ThreeBoxElement> tb_basis() {
  std::vector<ThreeBoxElement> out;
  for (const PlanarMatching& m : PlanarMatching::enumerate(3))
    out.push_back(tb_from_tl(TLElement::basis(3, m, rf_delta())));
  out.push_back(tb_generator());
  return out;
}

ThreeBoxElement tb_add(const ThreeBoxElement& x, const ThreeBoxElement& y) {
  return {x.tl + y.tl, x.s + y.s};
}

ThreeBoxElement tb_negate(const ThreeBoxElement& x) { return {-x.tl, -x.s}; }

ThreeBoxElement tb_scaled(const ThreeBoxElement& x, const RationalFunction& c) {
  return {x.tl.scaled(c), x.s * c};
}

namespace {

// Coefficient of the identity diagram: the only TL_3 basis diagram that
// does not annihilate S.
RationalFunction identity_part(const TLElement& tl) {
  return tl.coefficient(PlanarMatching::identity(3));
}

}  // namespace

ThreeBoxElement multiply(const ThreeBoxElement& x, const ThreeBoxElement& y) {
  const RationalFunction gamma = rf_gamma();
  const RationalFunction ss = x.s * y.s;
  ThreeBoxElement out{
      compose(x.tl, y.tl) + tl3_jones_wenzl().scaled(ss * gamma),
      x.s * identity_part(y.tl) + y.s * identity_part(x.tl) +
          ss * (gamma - rf_dg(1))};
  return out;
}

RationalFunction threebox_trace(const ThreeBoxElement& x) {
  return markov_trace(x.tl);
}

std::pair<ThreeBoxElement, ThreeBoxElement> pq_idempotents() {
  const RationalFunction inv = (rf_dg(1) + rf_gamma()).inverse();
  const TLElement f3 = tl3_jones_wenzl();
  ThreeBoxElement p{f3.scaled(inv), inv};
  ThreeBoxElement q{f3.scaled(rf_gamma() * inv), -inv};
  return {std::move(p), std::move(q)};
}

namespace {

RationalFunction d2() { return rf_delta() * rf_delta(); }

}  // namespace

std::vector<CutdownItem> cutdown_coefficients(OmegaTag tag) {
  const RationalFunction delta = rf_delta();
  const RationalFunction gamma = rf_gamma();
  const RationalFunction one = rf_dg(1);
  std::vector<CutdownItem> out;

  CutdownItem i1;
  i1.id = "i";
  i1.omega_eigenvalue = true;
  i1.terms.emplace_back("wS", one);
  out.push_back(i1);

  CutdownItem i2;
  i2.id = "ii";
  i2.terms.emplace_back("S one-capped", rf_dg(0));
  i2.terms.emplace_back("TL one-capped", rf_dg(0));
  out.push_back(i2);

  CutdownItem i3;
  i3.id = "iii";
  i3.terms.emplace_back("S,TL double-capped", rf_dg(0));
  out.push_back(i3);

  CutdownItem i4;
  i4.id = "iv";
  i4.terms.emplace_back("VI", (d2() - rf_dg(2)) / delta);
  out.push_back(i4);

  CutdownItem i5;
  i5.id = "v";
  i5.terms.emplace_back(
      "VI", gamma * (delta * d2() - rf_dg(2) * delta) / (d2() - one));
  out.push_back(i5);

  CutdownItem i6;
  i6.id = "vi";
  i6.terms.emplace_back("TLTRIV", (d2() - rf_dg(3)) / delta);
  out.push_back(i6);

  CutdownItem i7;
  i7.id = "vii";
  i7.terms.emplace_back("SV", -one / delta);
  out.push_back(i7);

  CutdownItem i8;
  i8.id = "viii";
  i8.terms.emplace_back("SV", gamma - one);
  i8.terms.emplace_back("TLTRIV", -gamma * delta / (d2() - one));
  out.push_back(i8);

  CutdownItem i9;
  i9.id = "ix";
  i9.epsilon_multiplier = true;
  i9.terms.emplace_back("SV", tag == OmegaTag::one ? one : rf_dg(0));
  i9.terms.emplace_back("TLTRIV",
                        gamma * (gamma - one) * d2() / (d2() - one));
  i9.variant_second = gamma * (gamma - one) * delta / (d2() - one);
  out.push_back(i9);

  return out;
}

RelationCoefficients two_two_solutions(OmegaTag tag, int a) {
  if (a != 1 && a != -1) throw std::domain_error("sign a must be +1 or -1");
  const RationalFunction delta = rf_delta();
  const RationalFunction gamma = rf_gamma();
  const RationalFunction one = rf_dg(1);
  const RationalFunction w =
      RationalFunction(LaurentPoly::constant(omega_pair_sum(tag), vars_dg()));

  RelationCoefficients rc;
  rc.omega = tag;
  rc.a = a;
  rc.a_prime = a;
  if (a == 1) {
    rc.b = -(gamma - one) * delta / (d2() - rf_dg(2) + w);
    rc.c = -gamma * delta / (d2() - one);
  } else {
    const RationalFunction big = d2() * d2() - rf_dg(3) * d2() + one;
    rc.b = (gamma - one) * delta / (d2() - rf_dg(2) - w);
    rc.c = gamma * delta *
           (rf_dg(2) * (d2() - rf_dg(2)) / big - one / (d2() - one));
    rc.d = -rf_dg(2) * gamma * d2() / big;
  }
  if (tag == OmegaTag::one) rc.epsilon = epsilon_value(a);
  return rc;
}

CappingCheck verify_capping(const RelationCoefficients& rc) {
  const RationalFunction delta = rf_delta();
  const RationalFunction gamma = rf_gamma();
  const RationalFunction one = rf_dg(1);
  const RationalFunction w =
      RationalFunction(LaurentPoly::constant(omega_pair_sum(rc.omega), vars_dg()));

  CappingCheck check;
  if (rc.a == 1) {
    // (gamma-1) S - gamma delta/(delta^2-1) TL
    //   = b(w(-1/delta) - (delta^2-2)/delta) S + c TL
    check.residual_s =
        (gamma - one) + rc.b * (w + d2() - rf_dg(2)) / delta;
    check.residual_tl = -gamma * delta / (d2() - one) - rc.c;
  } else {
    if (!rc.d.has_value())
      throw std::domain_error("a = -1 solution needs the d coefficient");
    check.residual_s =
        (gamma - one) - rc.b * (d2() - rf_dg(2) - w) / delta;
    check.residual_tl = -gamma * delta / (d2() - one) - rc.c -
                        (*rc.d) * (d2() - rf_dg(2)) / delta;
  }
  check.ok = check.residual_s.is_zero() && check.residual_tl.is_zero();
  return check;
}

RationalFunction epsilon_value(int a) {
  if (a != 1 && a != -1) throw std::domain_error("sign a must be +1 or -1");
  const RationalFunction delta = rf_delta();
  const RationalFunction gamma = rf_gamma();
  const RationalFunction one = rf_dg(1);
  if (a == 1) {
    return gamma * delta * (d2() - rf_dg(3)) / (d2() - one) -
           rf_dg(2) * (gamma - one) * (gamma - one) * delta / (d2() - rf_dg(3));
  }
  const RationalFunction big = d2() * d2() - rf_dg(3) * d2() + one;
  const RationalFunction b = (gamma - one) * delta / (d2() - rf_dg(4));
  const RationalFunction c =
      gamma * delta * (rf_dg(2) * (d2() - rf_dg(2)) / big - one / (d2() - one));
  return gamma * delta * (d2() - rf_dg(2)) / (d2() - one) - c -
         rf_dg(2) * (gamma - one) * b;
}

namespace {

nlohmann::ordered_json poly_json(const RatPoly& p) {
  nlohmann::ordered_json j;
  j["variable"] = "delta";
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const Rational& c : p.coeffs()) coeffs.push_back(c.to_string());
  j["coefficients_ascending"] = coeffs;
  j["degree"] = p.degree();
  return j;
}

nlohmann::ordered_json root_analysis(const RatPoly& p) {
  nlohmann::ordered_json j;
  const Rational bound = cauchy_root_bound(p);
  Rational hi = bound + Rational(1);
  if (hi < Rational(100)) hi = Rational(100);
  j["cauchy_bound"] = bound.to_double();
  const int above = count_real_roots(p, Rational(2), hi);
  j["roots_in_2_to_bound"] = above;

  nlohmann::ordered_json roots = nlohmann::ordered_json::array();
  const Rational eps(1, 1000);
  if (!squarefree_part(p).eval(eps).is_zero()) {
    for (const auto& [lo, rhi] :
         isolate_real_roots(p, eps, Rational(2), Rational(1, 1024))) {
      nlohmann::ordered_json r;
      r["lo"] = lo.to_double();
      r["hi"] = rhi.to_double();
      r["approx"] = ((lo + rhi) / Rational(2)).to_double();
      roots.push_back(r);
    }
  }
  j["isolated_positive_roots_below_2"] = roots;
  j["verdict"] = above == 0 ? "no real roots with delta > 2"
                            : "roots above 2 found";
  return j;
}

// Triangle-coefficient equations as polynomials in gamma whose coefficients
// are integer polynomials in delta (ascending in both).
std::vector<RatPoly> triangle_poly(int a) {
  auto rp = [](std::vector<long> v) {
    std::vector<Rational> c;
    c.reserve(v.size());
    for (long x : v) c.emplace_back(x);
    return RatPoly(std::move(c));
  };
  if (a == 1) {
    // (2 delta - 2 delta^3) + (delta^5 - 2 delta^3 + 5 delta) g
    //   + (2 delta - 2 delta^3) g^2
    return {rp({0, 2, 0, -2}), rp({0, 5, 0, -2, 0, 1}), rp({0, 2, 0, -2})};
  }
  return {rp({0, 2, 0, -6, 0, 2}), rp({0, 1, 0, 2, 0, 2, 0, -1}),
          rp({0, 2, 0, -6, 0, 2})};
}

// [3] gamma^2 + s gamma - [5] with loop quantum integers in delta.
std::vector<RatPoly> quadratic_poly(int s) {
  auto rp = [](std::vector<long> v) {
    std::vector<Rational> c;
    c.reserve(v.size());
    for (long x : v) c.emplace_back(x);
    return RatPoly(std::move(c));
  };
  return {rp({-1, 0, 3, 0, -1}), RatPoly::constant(Rational(s)),
          rp({-1, 0, 1})};
}

nlohmann::ordered_json gamma_poly_json(const std::vector<RatPoly>& p) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const RatPoly& c : p) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const Rational& x : c.coeffs()) coeffs.push_back(x.to_string());
    arr.push_back(coeffs);
  }
  nlohmann::ordered_json j;
  j["gamma_coefficients_of_delta_polys"] = arr;
  return j;
}

}  // namespace

nlohmann::ordered_json exclusion_report() {
  nlohmann::ordered_json report;
  nlohmann::ordered_json branches = nlohmann::ordered_json::array();

  {
    nlohmann::ordered_json b;
    b["id"] = "a";
    b["statement"] = "delta (delta^2 - 3)/(delta^2 - 1) = 0";
    RatPoly p({Rational(0), Rational(-3), Rational(0), Rational(1)});
    b["polynomial"] = poly_json(p);
    b.update(root_analysis(p));
    branches.push_back(b);
  }
  {
    nlohmann::ordered_json b;
    b["id"] = "b";
    b["statement"] = "2(delta^2 - 2)/(delta^4 - 3 delta^2 + 1) = 1";
    RatPoly p({Rational(5), Rational(0), Rational(-5), Rational(0),
               Rational(1)});
    b["polynomial"] = poly_json(p);
    b.update(root_analysis(p));
    branches.push_back(b);
  }
  {
    nlohmann::ordered_json b;
    b["id"] = "c";
    b["statement"] = "delta^4 - 4 delta^2 + 1 = 0";
    RatPoly p({Rational(1), Rational(0), Rational(-4), Rational(0),
               Rational(1)});
    b["polynomial"] = poly_json(p);
    b.update(root_analysis(p));
    // Exact certificate in Z[sqrt(3)]: x = 2 + sqrt(3) is the larger root of
    // x^2 - 4x + 1, and x < 4 exactly, so delta = sqrt(x) < 2.
    {
      const long xa = 2, xb = 1;  // x = xa + xb sqrt(3)
      const long sq_a = xa * xa + 3 * xb * xb, sq_b = 2 * xa * xb;
      const long res_a = sq_a - 4 * xa + 1, res_b = sq_b - 4 * xb;
      if (res_a != 0 || res_b != 0)
        throw std::logic_error("exact quadratic certificate failed");
      b["exact_certificate"] =
          "delta^2 = 2 + sqrt(3) satisfies x^2 - 4x + 1 = 0 in Z[sqrt(3)]; "
          "2 + sqrt(3) < 4 since 3 < 4, hence delta < 2";
    }
    branches.push_back(b);
  }
  {
    nlohmann::ordered_json b;
    b["id"] = "d";
    b["statement"] =
        "triangle coefficient equation paired with [3] gamma^2 +- gamma - [5] "
        "= 0 has no common solution with delta > 2";
    nlohmann::ordered_json systems = nlohmann::ordered_json::array();
    for (int a : {1, -1}) {
      for (int s : {1, -1}) {
        nlohmann::ordered_json sys;
        sys["a"] = a;
        sys["quadratic_sign"] = s;
        const std::vector<RatPoly> tri = triangle_poly(a);
        const std::vector<RatPoly> quad = quadratic_poly(s);
        sys["triangle"] = gamma_poly_json(tri);
        sys["quadratic"] = gamma_poly_json(quad);
        const RatPoly res = sylvester_resultant(tri, quad).primitive();
        sys["resultant_in_delta"] = poly_json(res);
        sys.update(root_analysis(res));
        systems.push_back(sys);
      }
    }
    b["systems"] = systems;
    branches.push_back(b);
  }

  report["branches"] = branches;
  report["conclusion"] =
      "every exclusion branch is root-free for delta > 2";
  return report;
}

namespace {

RationalFunction rf_qr(long k) {
  return RationalFunction(LaurentPoly::constant(Rational(k), vars_qr()));
}

RationalFunction qr_mono(long a, long b) {
  return RationalFunction(LaurentPoly::monomial(Rational(1), a, b, vars_qr()));
}

}  // namespace

std::pair<RationalFunction, RationalFunction> hecke_idempotent_traces() {
  const RationalFunction q = qr_mono(1, 0);
  const RationalFunction r = qr_mono(0, 1);
  const RationalFunction z = q - q.inverse();
  const RationalFunction rr = r - r.inverse();
  const RationalFunction den = (q + q.inverse()) * z.pow(3);
  const RationalFunction tp =
      rr * (r * q - r.inverse() * q.inverse()) *
      (r * qr_mono(-2, 0) - r.inverse() * qr_mono(2, 0)) / den;
  const RationalFunction tq =
      rr * (r * qr_mono(2, 0) - r.inverse() * qr_mono(-2, 0)) *
      (r * q.inverse() - r.inverse() * q) / den;
  return {tp, tq};
}

IdempotentSystemCheck idempotent_system_check() {
  const RationalFunction q = qr_mono(1, 0);
  const RationalFunction r = qr_mono(0, 1);
  const RationalFunction z = q - q.inverse();
  const RationalFunction rr = r - r.inverse();
  const RationalFunction delta = rr / z;
  const RationalFunction big_d =
      r * r + (r * r).inverse() - q * q - (q * q).inverse();

  IdempotentSystemCheck out;
  auto residuals_for = [&](const RationalFunction& a,
                           const RationalFunction& b) {
    const RationalFunction c =
        a * r.inverse() * z * z / big_d - b * rr * z / big_d;
    const RationalFunction e = -(z / rr) * (a * r + c);
    const RationalFunction f = -(z / rr) * (a * r.inverse() + c);
    std::vector<RationalFunction> res;
    res.push_back(a * r + c + e * delta);
    res.push_back(b + c * delta + f);
    res.push_back(a * r.inverse() + c + f * delta);
    res.push_back(a * z + b + c * delta + e);
    // Trace of the candidate idempotent in the diagram basis.
    RationalFunction trace = a * r * delta * delta + b * delta.pow(3) +
                             rf_qr(2) * c * delta * delta +
                             (e + f) * delta;
    res.push_back(trace);
    return res;
  };

  const RationalFunction branch_a = (q + q.inverse()).inverse();
  const RationalFunction branch_b = q.inverse() * branch_a;
  auto res1 = residuals_for(branch_a, branch_b);
  const RationalFunction trace1 = res1.back();
  res1.pop_back();

  // Second branch swaps the two idempotents.
  auto res2 = residuals_for(-branch_a, q * branch_a);
  const RationalFunction trace2 = res2.back();
  res2.pop_back();

  auto [tp, tq] = hecke_idempotent_traces();
  out.trace_p = tp;
  out.trace_q = tq;

  out.residuals = res1;
  out.residuals.insert(out.residuals.end(), res2.begin(), res2.end());
  out.residuals.push_back(trace1 - tq);
  out.residuals.push_back(trace2 - tp);
  out.residuals.push_back(tp + tq - (delta.pow(3) - rf_qr(2) * delta));

  out.ok = true;
  for (const RationalFunction& res : out.residuals)
    if (!res.is_zero()) out.ok = false;
  return out;
}

}  // namespace skein
