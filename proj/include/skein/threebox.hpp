#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "skein/realroots.hpp"
#include "skein/temperley.hpp"

namespace skein {

// The rotation eigenvalue enters every formula through omega + omega^-1,
// which is 2 for omega = 1 and -1 for a primitive cube root.
enum class OmegaTag { one, primitive };
Rational omega_pair_sum(OmegaTag tag);

// delta and gamma as rational functions over the (delta, gamma) field.
RationalFunction rf_delta();
RationalFunction rf_gamma();

// Element t + s*S of the six-dimensional algebra TL_3 + Q(delta,gamma)S.
// S is killed by every non-identity TL diagram on either side and satisfies
// S^2 = (gamma - 1) S + gamma f_3.
struct ThreeBoxElement {
  TLElement tl;
  RationalFunction s;

  friend bool operator==(const ThreeBoxElement& a, const ThreeBoxElement& b) {
    return a.tl == b.tl && a.s == b.s;
  }
  friend bool operator!=(const ThreeBoxElement& a, const ThreeBoxElement& b) {
    return !(a == b);
  }
};

ThreeBoxElement tb_zero();
ThreeBoxElement tb_identity();
ThreeBoxElement tb_generator();            // S itself
ThreeBoxElement tb_from_tl(TLElement tl);  // embed a TL_3 element
TLElement tl3_identity_element();          // identity of TL_3 over (delta,gamma)
TLElement tl3_jones_wenzl();               // f_3 over (delta,gamma)
// The six standard basis elements: five TL_3 diagrams, then S.
std::vector<ThreeBoxElement> tb_basis();

ThreeBoxElement tb_add(const ThreeBoxElement& x, const ThreeBoxElement& y);
ThreeBoxElement tb_negate(const ThreeBoxElement& x);
ThreeBoxElement tb_scaled(const ThreeBoxElement& x, const RationalFunction& c);
ThreeBoxElement multiply(const ThreeBoxElement& x, const ThreeBoxElement& y);

// Markov trace extended by Tr(S) := 0 (S caps to zero in every direction).
RationalFunction threebox_trace(const ThreeBoxElement& x);

// P = (S + f_3)/(1 + gamma), Q = (gamma f_3 - S)/(1 + gamma).
std::pair<ThreeBoxElement, ThreeBoxElement> pq_idempotents();

// One row of the cut-down relation table.  Each capped picture expands over
// named target elements with rational-function coefficients.
struct CutdownItem {
  std::string id;  // "i" .. "ix"
  std::vector<std::pair<std::string, RationalFunction>> terms;
  // Item (i): the coefficient is the rotation eigenvalue itself.
  bool omega_eigenvalue = false;
  // Item (ix): the first coefficient multiplies the undetermined epsilon
  // (and is zero unless omega = 1).
  bool epsilon_multiplier = false;
  // Item (ix): a second published value of the same coefficient that
  // disagrees by one power of delta; stored, asserted nowhere.
  std::optional<RationalFunction> variant_second;
};

std::vector<CutdownItem> cutdown_coefficients(OmegaTag tag);

// Coefficients of the 2<->2 move relation for a given rotation tag and sign.
struct RelationCoefficients {
  OmegaTag omega = OmegaTag::one;
  int a = 1;
  int a_prime = 1;
  RationalFunction b;
  RationalFunction c;
  std::optional<RationalFunction> d;        // present only for a = -1
  std::optional<RationalFunction> epsilon;  // present only for omega = 1
};

RelationCoefficients two_two_solutions(OmegaTag tag, int a);

// Substitute the closed forms back into the capping identity they solve.
struct CappingCheck {
  bool ok = false;
  RationalFunction residual_s;
  RationalFunction residual_tl;
};
CappingCheck verify_capping(const RelationCoefficients& rc);

// The derived epsilon for omega = 1.
RationalFunction epsilon_value(int a);

// Exclusion branches: each eliminates a parameter region by showing its
// defining polynomials have no real root with delta > 2.  JSON document
// with polynomials, isolated root intervals, and verdicts.
nlohmann::ordered_json exclusion_report();

// The linear system for the two Hecke 3-box idempotents over Q(q,r):
// residuals of the four defining equations under the closed-form solution,
// the trace identity, and the trace-sum identity delta^3 - 2 delta.
struct IdempotentSystemCheck {
  bool ok = false;
  std::vector<RationalFunction> residuals;  // all zero on pass
  RationalFunction trace_p;                 // over (q, r)
  RationalFunction trace_q;
};
IdempotentSystemCheck idempotent_system_check();

// The two closed-form idempotent traces over Q(q,r) (P first).
std::pair<RationalFunction, RationalFunction> hecke_idempotent_traces();

}  // namespace skein
