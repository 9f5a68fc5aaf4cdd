#pragma once

#include <array>
#include <string>
#include <vector>

#include "dilute/towers.hpp"

namespace dilute {

// Braid word: letters +-1..+-(strands-1); positive letter i crosses the
// strand arriving at position i+1 over the one at position i.
struct BraidWord {
  int strands = 1;
  std::vector<int> letters;

  int exponent_sum() const;
  int positive_count() const;
  int negative_count() const;
  bool operator==(const BraidWord&) const = default;
};

// Whitespace-separated signed generator indices.
BraidWord parse_braid_word(int strands, const std::string& text);

// Image of the braid word under sigma_i^{+-1} -> q^{+-2} e_i + u_i - Q^{+-1} s_i.
AlgebraElement braid_image(const AlgebraContext& ctx, const BraidWord& word,
                           const RationalScalar& Q);

// Conditional expectation: closes the last strand around the right.  Colour
// inconsistent closures vanish; each closed loop of colour c contributes
// delta_c.  Linear, maps level n+1 to level n.
AlgebraElement partial_closure(const AlgebraElement& a);

// Full diagrammatic closure: product over colours of delta^(loop count),
// zero on colour-inconsistent closures.
RationalScalar closure_trace(const AlgebraElement& a);

struct TraceInvariant {
  RationalScalar raw;         // closure trace of the braid image
  RationalScalar normalized;  // (-q^4)^(-e+) (-q^-4)^(-e-) times the raw trace
};

TraceInvariant link_invariant_trace(const BraidWord& word, const RationalScalar& Q);

// ---------------------------------------------------------------------------
// Planar diagram codes and the colour-sum state oracle.

// One crossing: the four incident arcs counterclockwise, starting at an end
// of the over-strand (so arcs[0] and arcs[2] form the over-strand).  With
// that convention the A-smoothing joins (arcs[0], arcs[3]) and
// (arcs[1], arcs[2]); the B-smoothing joins neighbouring pairs.
struct PDCrossing {
  std::array<int, 4> arcs;
  int sign = +1;
  bool operator==(const PDCrossing&) const = default;
};

struct PDCode {
  std::vector<PDCrossing> crossings;
  // Arcs partitioned into link components; crossing-free unknot components
  // appear as single-arc entries whose arc occurs in no crossing.
  std::vector<std::vector<int>> components;

  bool operator==(const PDCode&) const = default;
};

// Blackboard-framed closure of a braid word.
PDCode braid_closure_pd(const BraidWord& word);

PDCode pd_from_json(const std::string& text);
std::string pd_to_json(const PDCode& pd);

// Disjoint union with arcs of `b` relabelled past those of `a`.
PDCode pd_disjoint_union(const PDCode& a, const PDCode& b);

// Kauffman bracket of the sub-diagram spanned by the kept components, by
// exhaustive state expansion: A = q, loops -q^2 - q^-2, empty diagram 1.
// Crossings with exactly one kept strand pass straight through.
LaurentPoly kauffman_bracket(const PDCode& pd, const std::vector<bool>& keep);
LaurentPoly kauffman_bracket(const PDCode& pd);

// Sum over all two-colourings of the components of the product of the two
// monochrome Kauffman brackets.
LaurentPoly dilute_state_sum(const PDCode& pd);

// ---------------------------------------------------------------------------
// Calibration of the trace against the state-sum oracle.

struct CalibrationReport {
  bool consistent = false;
  RationalScalar lambda;      // per-crossing factor
  RationalScalar Q_star;      // calibrated parameter value
  bool sign_determined = false;  // false: both square roots fit every braid
  bool trace_even_in_Q = false;
  std::vector<std::pair<std::string, bool>> matches;  // braid word -> oracle equality
  std::string note;
};

// Solves lambda on a one-crossing braid and Q*^2 on a two-crossing braid,
// then verifies lambda^(-e) trace = state sum on every supplied braid.
CalibrationReport calibrate_and_crosscheck(const std::vector<BraidWord>& braids);

}  // namespace dilute
