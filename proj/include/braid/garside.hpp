#ifndef BRAID_GARSIDE_HPP
#define BRAID_GARSIDE_HPP

#include <optional>
#include <string>
#include <vector>

#include "braid/word.hpp"

namespace braid {

// A permutation braid (simple element) of B_m, identified with its
// underlying permutation.  Every permutation of {1..m} is simple; the
// positive braid it names crosses each pair of strands at most once.
struct SimpleFactor {
  Perm perm;

  bool is_identity() const { return perm.is_identity(); }
  // Starting set: indices i with sigma_i a prefix (descents of perm).
  std::vector<int> starting_set() const;
  // Finishing set: descents of the inverse permutation.
  std::vector<int> finishing_set() const;
  // Minimal positive word realizing the permutation.
  Word to_word(int degree) const;

  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;
  friend bool operator<(const SimpleFactor& a, const SimpleFactor& b) {
    return a.perm.img < b.perm.img;
  }
};

// Left-weighted normal form Delta^inf . f1 ... fk with no factor equal to
// the identity or Delta.  Componentwise identity is braid equality; the
// serialization is the canonical hash key used everywhere downstream.
class GarsideNF {
 public:
  GarsideNF(int degree, long inf, std::vector<SimpleFactor> factors)
      : degree_(degree), inf_(inf), factors_(std::move(factors)) {}

  int degree() const { return degree_; }
  long inf() const { return inf_; }
  long sup() const { return inf_ + static_cast<long>(factors_.size()); }
  long canonical_length() const { return static_cast<long>(factors_.size()); }
  const std::vector<SimpleFactor>& factors() const { return factors_; }

  Word to_word() const;
  std::string serialize() const;

  friend bool operator==(const GarsideNF&, const GarsideNF&) = default;
  friend bool operator<(const GarsideNF& a, const GarsideNF& b);

 private:
  int degree_;
  long inf_;
  std::vector<SimpleFactor> factors_;
};

GarsideNF normal_form(const Word& w);
GarsideNF nf_multiply(const GarsideNF& a, const GarsideNF& b);
GarsideNF nf_inverse(const GarsideNF& a);

bool equal(const Word& a, const Word& b);
bool commutes(const Word& a, const Word& b);
GarsideNF power(const Word& w, long k);

// k such that w = Delta^{2k}, if any.
std::optional<long> central_delta_power(const Word& w);
// True iff w^{m(m-1)} is a power of Delta^2 (the trivial braid counts).
bool is_periodic(const Word& w);

// Super summit set: conjugates with maximal infimum and minimal canonical
// length, computed by cycling/decycling and closure under conjugation by
// simple elements.  Witness i satisfies elements[i] == witnesses[i]^-1 . w . witnesses[i].
struct SssResult {
  bool complete = false;
  std::vector<GarsideNF> elements;
  std::vector<Word> witnesses;
  std::size_t visited = 0;
};
SssResult super_summit_set(const Word& w, std::size_t cap);

GarsideNF cycling(const GarsideNF& x);
GarsideNF decycling(const GarsideNF& x);

}  // namespace braid

#endif
