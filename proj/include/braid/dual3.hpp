#ifndef BRAID_DUAL3_HPP
#define BRAID_DUAL3_HPP

#include <string>
#include <utility>
#include <vector>

#include "braid/word.hpp"

namespace braid {

// Band generators of B_3: a12 = s1, a23 = s2, a13 = s2^-1 s1 s2.
enum class Band { a12, a13, a23 };

Band band_successor(Band b);    // conjugation by delta: a12 -> a13 -> a23 -> a12
Band band_predecessor(Band b);
Word band_word(Band b);

struct BandSyllable {
  Band band;
  long exponent;  // >= 1
  friend bool operator==(const BandSyllable&, const BandSyllable&) = default;
};

// Left-greedy normal form over the dual simple elements
// {1, a12, a13, a23, delta}: delta^m followed by syllables whose bands step
// through the cyclic successor order.  Unique per braid.
struct DualNF {
  long delta_power = 0;
  std::vector<BandSyllable> syllables;

  long sup() const { return delta_power; }
  long depth() const { return static_cast<long>(syllables.size()); }
  std::string serialize() const;

  friend bool operator==(const DualNF&, const DualNF&) = default;
};

DualNF dual_nf(const Word& w);                    // degree 3 only
std::pair<long, long> sup_depth(const Word& w);   // (sup, depth)
DualNF parse_dual_nf(const std::string& text);

// For a periodic 3-braid: depth == 0, or depth + sup == 2 (mod 3).
// Throws if the input is not periodic.
bool check_periodic_congruence(const Word& w);

}  // namespace braid

#endif
