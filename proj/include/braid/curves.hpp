#ifndef BRAID_CURVES_HPP
#define BRAID_CURVES_HPP

#include <string>
#include <vector>

#include "braid/word.hpp"

namespace braid {

// Integral coordinates for an isotopy class of multicurves in the
// m-punctured disc, taken in normal position with respect to the vertical
// lines e_1..e_{m-1} (line e_k separates punctures {1..k} from {k+1..m}).
//
//   cross[k-1] = E_k, the geometric intersection number with e_k (even),
//   split[s-2] = a_s  = (u_s - d_s)/2 for the interior slab around puncture
//                s (2 <= s <= m-1), where u_s/d_s count strands passing
//                above/below puncture s.
//
// Loop counts are recovered from consecutive E differences, so (cross,
// split) determines the multicurve.  Components enclosing a single
// puncture meet no line and are invisible; essential curves (enclosing
// 2..m-1 punctures) always have a nonzero vector.
struct Lamination {
  int degree = 2;
  std::vector<long> cross;  // size m-1
  std::vector<long> split;  // size m-2

  static Lamination empty(int m) {
    return Lamination{m, std::vector<long>(m - 1, 0), std::vector<long>(m - 2, 0)};
  }
  // The curve enclosing the consecutive punctures i..j (1 <= i < j <= m).
  static Lamination round_block(int m, int i, int j);

  bool is_zero() const;
  bool valid() const;
  Lamination disjoint_union(const Lamination& other) const;
  std::string serialize() const;

  friend bool operator==(const Lamination&, const Lamination&) = default;
  friend bool operator<(const Lamination& a, const Lamination& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.cross != b.cross) return a.cross < b.cross;
    return a.split < b.split;
  }
};

// Mapping-class action of sigma_index^sign on coordinates.  Exact over the
// integers; inverse generators undo it.
Lamination act_generator(const Lamination& lam, int index, int sign);
// Left-to-right action of a whole word (matching the composition order of
// braid words: act(compose(a,b), c) == act(b, act(a, c))).
Lamination act_on_lamination(const Word& w, const Lamination& lam);

}  // namespace braid

#endif
