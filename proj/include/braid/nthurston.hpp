#ifndef BRAID_NTHURSTON_HPP
#define BRAID_NTHURSTON_HPP

#include <optional>
#include <string>
#include <vector>

#include "braid/curves.hpp"
#include "braid/word.hpp"

namespace braid {

// An essential round curve: the circle around the consecutive punctures
// block[i..j] (at least two punctures, not all of them).
struct RoundCurve {
  int degree;
  int lo, hi;  // 1 <= lo < hi <= degree, hi-lo+1 < degree

  RoundCurve(int degree_, int lo_, int hi_);
  Lamination coords() const { return Lamination::round_block(degree, lo, hi); }
};

enum class NTType { Periodic, Reducible, PseudoAnosov };

struct ClassifyOptions {
  int max_degree = 5;
  std::size_t sss_cap = 20000;
};

// Classification outcome; `type` is empty when the bounded search was
// inconclusive (never silently defaulted).
struct ClassifyResult {
  std::optional<NTType> type;
  std::string note;

  bool is(NTType t) const { return type && *type == t; }
};

ClassifyResult classify(const Word& w, const ClassifyOptions& opts = {});

bool preserves_round_curve(const Word& w, const RoundCurve& r);

// All invariant round multicurves a reducible braid could preserve: every
// family of pairwise disjoint essential round blocks, summed into one
// coordinate vector.
std::vector<Lamination> round_multicurve_coords(int degree);

// Degree-3 invariant-curve analysis: a non-central reducible 3-braid
// preserves exactly one essential curve class.
struct CurveInvariance {
  bool central = false;
  std::optional<Lamination> curve;  // set iff reducible (non-central)
  std::string note;
};
CurveInvariance invariant_curve_class(const Word& w, const ClassifyOptions& opts = {});

std::string nt_token(const ClassifyResult& r);  // periodic|reducible|pA|inconclusive

}  // namespace braid

#endif
