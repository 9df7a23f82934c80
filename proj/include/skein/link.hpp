#pragma once

#include <string>
#include <vector>

#include "skein/hecke.hpp"
#include "skein/temperley.hpp"

namespace skein {

// Braid on n strands as a word in signed generator letters.
struct BraidWord {
  int n = 1;
  std::vector<int> letters;

  long writhe() const {
    long w = 0;
    for (int s : letters) w += s > 0 ? 1 : -1;
    return w;
  }
  void validate() const;
  std::string letters_text() const;
};

// Partition-function value of the braid closure: a circle counts delta, a
// positive curl counts r.
struct LinkValue {
  RationalFunction value;

  friend bool operator==(const LinkValue& a, const LinkValue& b) {
    return a.value == b.value;
  }
  friend bool operator!=(const LinkValue& a, const LinkValue& b) {
    return !(a == b);
  }
};

// Underlying permutation of the braid (bottom position to top position).
Permutation braid_permutation(const BraidWord& beta);
int closure_component_count(const BraidWord& beta);

// delta^n times the Markov trace of the braid's Hecke image.
LinkValue closure_value(const BraidWord& beta);

// Writhe-normalized invariant: closure value divided by r^writhe and by
// delta, so the unknot gives 1.  This is the quantity preserved by all
// Markov moves including stabilization (closure_value itself picks up a
// factor r^{+-1} under stabilization).
RationalFunction normalized_value(const BraidWord& beta);

// Independent evaluator: rewrites the first non-descending crossing along a
// closure traversal via the quadratic relation until every leaf diagram is
// descending (an unlink with curls, worth r^writhe delta^components).
// Throws BudgetError("recursion budget exceeded") past max_nodes states.
LinkValue skein_resolve_value(const BraidWord& beta, long max_nodes = 200000);

struct MarkovMove {
  enum class Kind { conjugate, stabilize, shift };
  Kind kind = Kind::shift;
  // conjugate: signed generator index; stabilize: +1 or -1; shift: rotation.
  int arg = 1;
};

// A braid with the same closure link, by one Markov move.
BraidWord markov_equivalent(const BraidWord& beta, const MarkovMove& move);

BraidWord mirror_braid(const BraidWord& beta);

// Kauffman bracket closure under sigma_i -> A + A^-1 U_i with loop value
// -A^2 - A^-2, times (-A^3)^{-writhe}, divided by one loop factor so the
// unknot gives 1.  Univariate in the bracket variable.
RationalFunction jones_oracle(const BraidWord& beta);

// normalized_value with r specialized to q^2; univariate in q.
RationalFunction homfly_jones_specialization(const BraidWord& beta);

// Monomial change of variables q -> c * A^k reconciling the two Jones
// computations, solved from reference links rather than hardcoded.
struct JonesCalibration {
  int c = 1;
  long k = 1;
};
JonesCalibration calibrate_jones_map();
RationalFunction apply_calibration(const RationalFunction& f,
                                   const JonesCalibration& cal);

// Corpus file: one braid per line, `<name> ; <n> ; <letters>`.
struct CorpusEntry {
  std::string name;
  BraidWord braid;
};
std::vector<CorpusEntry> load_corpus(const std::string& path);

}  // namespace skein
