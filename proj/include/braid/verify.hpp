#ifndef BRAID_VERIFY_HPP
#define BRAID_VERIFY_HPP

#include <string>
#include <vector>

#include "braid/hurwitz.hpp"
#include "braid/word.hpp"

namespace braid {

struct TheoremReport {
  std::string theorem;
  std::size_t instances = 0;
  std::vector<std::string> violations;
  std::string notes;

  bool ok() const { return violations.empty(); }
  void merge(const TheoremReport& other);
};

// Roots of centralizers: alpha commuting with beta^s commutes with a
// bounded power of beta depending on the type of beta (m(m-1) periodic,
// 1 pseudo-Anosov, (m-1)! reducible; exactly 1 for reducible 3-braids and
// at most 3 for reducible 4-braids).
TheoremReport check_root_centralizer(const Word& alpha, const Word& beta, long s);

// If alpha^M and beta^M commute (M != 0), alpha^{n!} and beta^{n!} commute.
TheoremReport check_corollary_consequence(const Word& alpha, const Word& beta, long M);

// Finite length-2 orbits are bounded by 6 (degree 3), 8 (degree 4) and
// 2(m-1)! in general.
TheoremReport check_length2_bound(const BraidSystem& s, std::size_t cap = 100000);

// Finite degree-3 orbits are bounded by 6 (n=2), 162 (n=3 irreducible),
// 648 (n=4 irreducible) and 27 n!; finite orbits of length >= 5 force
// reducibility.
TheoremReport check_degree3_bounds(const BraidSystem& s, std::size_t cap = 100000);

// The shipped instance corpus behind `verify-paper`: constructed commuting
// families plus the exact orbit computations.  include_slow adds the
// largest orbit run.
std::vector<TheoremReport> verify_paper_corpus(bool include_slow = true);

std::string render_report(const TheoremReport& r);

}  // namespace braid

#endif
