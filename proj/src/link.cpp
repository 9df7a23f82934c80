#include "skein/link.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace skein {

void BraidWord::validate() const {
  if (n < 1) throw std::domain_error("braid needs at least one strand");
  for (int s : letters)
    if (s == 0 || std::abs(s) > n - 1)
      throw std::domain_error("braid letter out of range: " +
                              std::to_string(s));
}

std::string BraidWord::letters_text() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i > 0) os << " ";
    os << letters[i];
  }
  return os.str();
}

Permutation braid_permutation(const BraidWord& beta) {
  beta.validate();
  std::vector<int> img(static_cast<std::size_t>(beta.n));
  for (int p = 1; p <= beta.n; ++p) {
    int cur = p;
    for (int s : beta.letters) {
      int j = std::abs(s);
      if (cur == j)
        cur = j + 1;
      else if (cur == j + 1)
        cur = j;
    }
    img[static_cast<std::size_t>(p - 1)] = cur;
  }
  return Permutation(std::move(img));
}

int closure_component_count(const BraidWord& beta) {
  Permutation pi = braid_permutation(beta);
  std::vector<bool> seen(static_cast<std::size_t>(beta.n + 1), false);
  int comps = 0;
  for (int p = 1; p <= beta.n; ++p) {
    if (seen[static_cast<std::size_t>(p)]) continue;
    ++comps;
    int cur = p;
    while (!seen[static_cast<std::size_t>(cur)]) {
      seen[static_cast<std::size_t>(cur)] = true;
      cur = pi(cur);
    }
  }
  return comps;
}

LinkValue closure_value(const BraidWord& beta) {
  beta.validate();
  RationalFunction tr = ocneanu_trace(from_braid_word(beta.letters, beta.n));
  return LinkValue{tr * circle_parameter_qr().pow(beta.n)};
}

RationalFunction normalized_value(const BraidWord& beta) {
  RationalFunction rw{
      LaurentPoly::monomial(Rational(1), 0, -beta.writhe(), vars_qr())};
  return closure_value(beta).value * rw * circle_parameter_qr().inverse();
}

namespace {

const RationalFunction& rf_z() {
  static const RationalFunction z(LaurentPoly::monomial(Rational(1), 1, 0) -
                                  LaurentPoly::monomial(Rational(1), -1, 0));
  return z;
}

// Index of the first crossing whose first transit along the closure
// traversal is an under-pass, or -1 when the diagram is descending.
// Components are walked starting from the smallest unvisited bottom
// position; within a walk, crossings appear in time order.
int first_bad_crossing(const BraidWord& beta) {
  const int L = static_cast<int>(beta.letters.size());
  std::vector<int> transits(static_cast<std::size_t>(L), 0);
  std::vector<bool> started(static_cast<std::size_t>(beta.n + 1), false);
  for (int start = 1; start <= beta.n; ++start) {
    if (started[static_cast<std::size_t>(start)]) continue;
    int cur = start;
    do {
      started[static_cast<std::size_t>(cur)] = true;
      for (int t = 0; t < L; ++t) {
        const int s = beta.letters[static_cast<std::size_t>(t)];
        const int j = std::abs(s);
        if (cur != j && cur != j + 1) continue;
        if (transits[static_cast<std::size_t>(t)] == 0) {
          const bool over = (cur == j && s > 0) || (cur == j + 1 && s < 0);
          if (!over) return t;
        }
        ++transits[static_cast<std::size_t>(t)];
        cur = (cur == j) ? j + 1 : j;
      }
      // Closure arc: top position k reattaches at bottom position k.
    } while (cur != start);
  }
  return -1;
}

RationalFunction resolve(const BraidWord& beta, long& nodes) {
  if (--nodes < 0) throw BudgetError("recursion budget exceeded");
  const int bad = first_bad_crossing(beta);
  if (bad < 0) {
    // Descending closure: an unlink whose curls carry the writhe.
    RationalFunction curls{
        LaurentPoly::monomial(Rational(1), 0, beta.writhe(), vars_qr())};
    return curls * circle_parameter_qr().pow(closure_component_count(beta));
  }
  const int s = beta.letters[static_cast<std::size_t>(bad)];
  BraidWord switched = beta;
  switched.letters[static_cast<std::size_t>(bad)] = -s;
  BraidWord smoothed = beta;
  smoothed.letters.erase(smoothed.letters.begin() + bad);
  RationalFunction smoothed_part = rf_z() * resolve(smoothed, nodes);
  RationalFunction switched_part = resolve(switched, nodes);
  return s > 0 ? switched_part + smoothed_part
               : switched_part - smoothed_part;
}

}  // namespace

LinkValue skein_resolve_value(const BraidWord& beta, long max_nodes) {
  beta.validate();
  long nodes = max_nodes;
  return LinkValue{resolve(beta, nodes)};
}

BraidWord markov_equivalent(const BraidWord& beta, const MarkovMove& move) {
  beta.validate();
  BraidWord out = beta;
  switch (move.kind) {
    case MarkovMove::Kind::conjugate: {
      const int g = move.arg;
      if (g == 0 || std::abs(g) > beta.n - 1)
        throw std::domain_error("conjugating generator out of range");
      out.letters.clear();
      out.letters.push_back(g);
      out.letters.insert(out.letters.end(), beta.letters.begin(),
                         beta.letters.end());
      out.letters.push_back(-g);
      return out;
    }
    case MarkovMove::Kind::stabilize: {
      if (move.arg != 1 && move.arg != -1)
        throw std::domain_error("stabilization sign must be +1 or -1");
      out.n = beta.n + 1;
      out.letters.push_back(move.arg * beta.n);
      return out;
    }
    case MarkovMove::Kind::shift: {
      if (beta.letters.empty()) return out;
      const int L = static_cast<int>(beta.letters.size());
      int k = ((move.arg % L) + L) % L;
      std::rotate(out.letters.begin(), out.letters.begin() + k,
                  out.letters.end());
      return out;
    }
  }
  throw std::logic_error("unreachable");
}

BraidWord mirror_braid(const BraidWord& beta) {
  BraidWord out = beta;
  for (int& s : out.letters) s = -s;
  return out;
}

RationalFunction jones_oracle(const BraidWord& beta) {
  beta.validate();
  const VarNames& bv = vars_bracket();
  const RationalFunction loop{LaurentPoly::monomial(Rational(-1), 2, 0, bv) +
                              LaurentPoly::monomial(Rational(-1), -2, 0, bv)};
  const RationalFunction a_pos{LaurentPoly::monomial(Rational(1), 1, 0, bv)};
  const RationalFunction a_neg{LaurentPoly::monomial(Rational(1), -1, 0, bv)};
  TLElement x = TLElement::identity(beta.n, loop);
  for (int s : beta.letters) {
    const int i = std::abs(s);
    TLElement factor = TLElement::identity(beta.n, loop)
                           .scaled(s > 0 ? a_pos : a_neg);
    factor += TLElement::cupcap(beta.n, i, loop).scaled(s > 0 ? a_neg : a_pos);
    x = compose(x, factor);
  }
  const long w = beta.writhe();
  // (-A^3)^{-w} framing correction, then one loop factor removed so the
  // unknot value is 1.
  RationalFunction framing{LaurentPoly::monomial(
      w % 2 == 0 ? Rational(1) : Rational(-1), -3 * w, 0, bv)};
  return markov_trace(x) * framing * loop.inverse();
}

RationalFunction homfly_jones_specialization(const BraidWord& beta) {
  RationalFunction v = normalized_value(beta);
  return RationalFunction(v.num().substitute_power(2),
                          v.den().substitute_power(2));
}

RationalFunction apply_calibration(const RationalFunction& f,
                                   const JonesCalibration& cal) {
  return RationalFunction(f.num().map_first_var(cal.c, cal.k, vars_bracket()),
                          f.den().map_first_var(cal.c, cal.k, vars_bracket()));
}

JonesCalibration calibrate_jones_map() {
  const BraidWord unknot{1, {}};
  const BraidWord hopf{2, {1, 1}};
  std::vector<JonesCalibration> hits;
  for (int c : {1, -1}) {
    for (long k : {2L, -2L, 1L, -1L}) {
      JonesCalibration cal{c, k};
      bool ok = true;
      for (const BraidWord& ref : {unknot, hopf}) {
        RationalFunction lhs =
            apply_calibration(homfly_jones_specialization(ref), cal);
        if (lhs != jones_oracle(ref)) {
          ok = false;
          break;
        }
      }
      if (ok) hits.push_back(cal);
    }
  }
  if (hits.size() != 1)
    throw std::logic_error("jones calibration not unique: " +
                           std::to_string(hits.size()) + " candidate maps");
  return hits.front();
}

std::vector<CorpusEntry> load_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  std::vector<CorpusEntry> out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string name, nfield, letters;
    if (!std::getline(ls, name, ';') || !std::getline(ls, nfield, ';'))
      throw std::runtime_error("bad corpus line: " + line);
    std::getline(ls, letters);  // may be empty (unknot)
    auto trim = [](std::string s) {
      const char* ws = " \t";
      auto b = s.find_first_not_of(ws);
      auto e = s.find_last_not_of(ws);
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    CorpusEntry entry;
    entry.name = trim(name);
    entry.braid.n = std::stoi(trim(nfield));
    entry.braid.letters = parse_braid_word(letters);
    entry.braid.validate();
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace skein
