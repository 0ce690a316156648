#ifndef BRAID_HURWITZ_HPP
#define BRAID_HURWITZ_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braid/nthurston.hpp"
#include "braid/word.hpp"

namespace braid {

// An ordered tuple of braids of one degree.  Entries are kept as canonical
// words (re-expanded from their Garside normal forms), so the tuple of
// normal-form serializations is a perfect equality key.
class BraidSystem {
 public:
  BraidSystem(int degree, std::vector<Word> entries);

  int degree() const { return degree_; }
  int length() const { return static_cast<int>(entries_.size()); }
  const std::vector<Word>& entries() const { return entries_; }
  const Word& entry(int i) const { return entries_.at(static_cast<std::size_t>(i)); }
  const std::string& key() const { return key_; }
  const std::vector<std::string>& entry_keys() const { return entry_keys_; }

 private:
  int degree_;
  std::vector<Word> entries_;
  std::vector<std::string> entry_keys_;
  std::string key_;
};

// One Hurwitz move: sign +1 sends (.., b_i, b_{i+1}, ..) to
// (.., b_{i+1}, b_{i+1}^-1 b_i b_{i+1}, ..); sign -1 is its inverse.
BraidSystem act_generator(const BraidSystem& s, int i, int sign);
// Left-to-right action of a word of B_n on a length-n system.
BraidSystem act_word(const BraidSystem& s, const Word& w);

// Product of the entries at I (1-based, strictly increasing); full product
// when I is empty.
Word coxeter(const BraidSystem& s, const std::vector<int>& I = {});

// Partition I|J with every cross pair commuting, if one exists (components
// of the non-commutation graph).
std::optional<std::pair<std::vector<int>, std::vector<int>>> reducible_partition(
    const BraidSystem& s);

// Pure braid generators: c_i = (s1^-1..s_{i-1}^-1) s_i^2 (s_{i-1}..s1) and
// the band generators A_{rs} of P_n.
Word pure_c(int n, int i);
Word pure_band(int n, int r, int s);

enum class Subgroup { Full, Pure, FreeF };

struct Certificate {
  std::string rule;     // R1 | R2 | R3 | R4
  std::string witness;  // human-readable evidence (index set, types, ...)
};

// Sound infiniteness certificates; empty result does not imply finiteness.
// Skipped rules (degree out of classify range, inconclusive classification)
// are appended to `log` when provided.  Rules are evaluated cheapest first:
// exponent sums (R3), then the partial-Coxeter type rules (R1, R2), then the
// length fallback (R4).
std::optional<Certificate> infiniteness_certificate(const BraidSystem& s,
                                                    std::vector<std::string>* log = nullptr,
                                                    const ClassifyOptions& copts = {});

struct OrbitResult {
  enum class Outcome { Finite, CapExceeded, ProvablyInfinite };
  Outcome outcome = Outcome::CapExceeded;
  std::vector<std::string> keys;  // sorted canonical keys (Finite only)
  std::size_t size = 0;           // orbit size when Finite
  std::size_t visited = 0;
  std::optional<Certificate> certificate;
  std::string note;
};

struct OrbitOptions {
  std::size_t cap = 100000;
  std::size_t max_entry_letters = 20000;  // resource guard, reported as CapExceeded
};

OrbitResult orbit(const BraidSystem& s, Subgroup subgroup, const OrbitOptions& opts = {});
// Same closure but also returning the visited systems in discovery order.
OrbitResult orbit_with_systems(const BraidSystem& s, Subgroup subgroup, const OrbitOptions& opts,
                               std::vector<BraidSystem>* out_systems);

std::string subgroup_name(Subgroup g);

}  // namespace braid

#endif
