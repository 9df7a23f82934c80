#pragma once

#include <optional>
#include <string>
#include <vector>

#include "skein/ratfun.hpp"

namespace skein {

// Integer partition drawn as a Young diagram (weakly decreasing rows).
class YoungDiagram {
 public:
  explicit YoungDiagram(std::vector<int> rows);

  const std::vector<int>& rows() const { return rows_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  int cell_count() const;
  YoungDiagram transpose() const;

  friend bool operator==(const YoungDiagram& a, const YoungDiagram& b) {
    return a.rows_ == b.rows_;
  }
  friend bool operator!=(const YoungDiagram& a, const YoungDiagram& b) {
    return !(a == b);
  }
  friend bool operator<(const YoungDiagram& a, const YoungDiagram& b) {
    return a.rows_ < b.rows_;
  }

  std::string to_string() const;  // "3,1,1"
  static YoungDiagram parse(const std::string& text);

 private:
  std::vector<int> rows_;
};

struct Cell {
  int i = 0;        // row, 1-based
  int j = 0;        // column, 1-based
  int content = 0;  // j - i
  int hook = 0;
};

// Row-major cell list with contents and hook lengths.
std::vector<Cell> cells(const YoungDiagram& lambda);

// Number of standard tableaux, by the hook length formula.
long num_standard_tableaux(const YoungDiagram& lambda);

// All partitions of n, in deterministic order: first row descending, so
// [n] comes first and [1,...,1] last.
std::vector<YoungDiagram> partitions_of(int n);

// Product over cells of (r q^c - r^-1 q^-c) / (q^h - q^-h).
RationalFunction quantum_trace(const YoungDiagram& lambda);

// Numeric instantiation at a given (q, r) point, cell by cell.
ComplexPoint trace_numeric(const YoungDiagram& lambda, const ComplexPoint& q0,
                           const ComplexPoint& r0);

// Trace specialized to r = q^N, written as a product of quantum-integer
// ratios [N + content]/[hook].  Exactly one of m, q0 must be given:
//   m:  q = e^{i pi / m}, each [k] = sin(k pi/m)/sin(pi/m); the sign comes
//       from integer residues, never from floating point.
//   q0: real q >= 1 (at q0 = 1 the ratio of limits k/h is used); the sign
//       comes from the integer signs of the factors.
// A vanishing hook integer makes the idempotent behind the trace
// ill-defined, which is reported as a distinct outcome, not as sign zero.
struct SpecializedTrace {
  bool ill_defined = false;
  int sign = 0;        // -1, 0, +1; meaningful when well-defined
  double value = 0.0;  // numeric value; meaningful when well-defined
};

SpecializedTrace trace_at_specialization(const YoungDiagram& lambda, long N,
                                         std::optional<long> m,
                                         std::optional<double> q0);

}  // namespace skein
