#pragma once

#include <complex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "skein/ratfun.hpp"
#include "skein/threebox.hpp"
#include "skein/young.hpp"

namespace skein {

// A point of the two-parameter family, either exactly specified or numeric.
struct ParameterPoint {
  enum class Mode { exact_root_of_unity, exact_real, numeric };

  Mode mode = Mode::numeric;

  // exact_root_of_unity: q = exp(i pi / m), r = q^N with 0 < N < m.
  long N = 0;
  long m = 0;

  // exact_real: q = q0 >= 1 real, r = q0^N (exponent optional).
  double q0 = 1.0;
  std::optional<long> real_exponent;

  // numeric mode.
  ComplexPoint q{};
  ComplexPoint r{};

  // Supplies the circle parameter directly when q = +-1 makes the quotient
  // (r - r^-1)/(q - q^-1) meaningless.
  std::optional<double> delta_override;

  static ParameterPoint root_of_unity(long N, long m);
  static ParameterPoint real_power(double q0, long N);
  static ParameterPoint at(ComplexPoint q, ComplexPoint r);

  // Numeric representatives (exact modes evaluate their definitions).
  std::complex<double> q_value() const;
  std::complex<double> r_value() const;

  double tolerance() const;
};

struct Verdict {
  enum class Kind {
    positive_root_of_unity,
    positive_real,
    negative,
    indeterminate
  };

  Kind kind = Kind::indeterminate;
  long N = 0;  // positive kinds
  long l = 0;  // positive_root_of_unity only
  std::optional<YoungDiagram> witness;
  double witness_trace = 0.0;
  std::string reason;  // indeterminate detail

  bool is_positive() const {
    return kind == Kind::positive_root_of_unity || kind == Kind::positive_real;
  }
  std::string kind_name() const;
  nlohmann::ordered_json to_json() const;
};

// Circle and trace-ratio parameters of a point.
struct DeltaGamma {
  std::complex<double> delta{0.0, 0.0};
  std::complex<double> gamma{0.0, 0.0};
};

// delta = (r - r^-1)/(q - q^-1); gamma = ratio of the two three-box
// idempotent traces, second over first.  Throws PoleError at q = +-1
// unless the point carries an explicit circle parameter.
DeltaGamma delta_gamma_from_qr(const ParameterPoint& p);

// gamma value of the q -> 1 degeneration at circle parameter delta.
double gamma_at_unit_q(double delta);

// All (q, r) solving the correspondence for the given (delta, gamma),
// delta > 2, gamma > 0.  Solutions reproduce the ordered trace pair; the
// degeneration gamma = (delta+2)(delta-1)/((delta-2)(delta+1)) returns the
// q = 1 point with an explicit circle parameter.
struct CorrespondenceResult {
  std::vector<ParameterPoint> points;
  std::string diagnostic;  // non-empty when the solve could not be completed
};
CorrespondenceResult qr_from_delta_gamma(double delta, double gamma,
                                         double tol = 1e-9);

// The four isomorphic parameter points (q,r), (-1/q,r), (-q,-r), (1/q,1/r).
std::vector<ParameterPoint> symmetry_orbit(const ParameterPoint& p);

// Numeric trace of a diagram at a point; ill-defined or non-real values
// return nothing.
std::optional<double> real_trace_at(const YoungDiagram& diagram,
                                    const ParameterPoint& p);

// First diagram (by cell count, then the partition enumeration order) with
// well-defined strictly negative trace at p, up to max_cells cells.
std::optional<YoungDiagram> witness_search(const ParameterPoint& p,
                                           int max_cells = 12);

// Tri-state positivity decision with negativity witnesses.
Verdict positivity(const ParameterPoint& p, int witness_cap = 12);

// Grid scan with deterministic, index-keyed parallel evaluation.
enum class ScanShape { real_axis, unit_circle };

struct ScanPoint {
  ComplexPoint q{};
  ComplexPoint r{};
  bool params_ok = false;
  std::complex<double> delta{0.0, 0.0};
  std::complex<double> gamma{0.0, 0.0};
  Verdict verdict;
};

std::vector<ScanPoint> scan_grid(ScanShape shape, double a_lo, double a_hi,
                                 int a_count, double b_lo, double b_hi,
                                 int b_count, int witness_cap = 12);

std::string scan_csv(const std::vector<ScanPoint>& points);
nlohmann::ordered_json scan_json(const std::vector<ScanPoint>& points);

}  // namespace skein
