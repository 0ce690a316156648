#ifndef BRAID_WORD_HPP
#define BRAID_WORD_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace braid {

// One Artin generator occurrence: sigma_{index}^{sign}.
struct Letter {
  int index = 1;  // 1 <= index <= degree-1
  int sign = 1;   // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, std::size_t position)
      : std::runtime_error(msg + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A freely reduced word in the Artin generators of B_m.  Immutable value;
// free reduction is applied on construction, so two Words with the same
// letter sequence are literally identical sequences.
class Word {
 public:
  explicit Word(int degree) : degree_(check_degree(degree)) {}
  Word(int degree, std::vector<Letter> raw);

  static Word generator(int degree, int index, int sign = 1) {
    return Word(degree, {Letter{index, sign}});
  }

  int degree() const { return degree_; }
  const std::vector<Letter>& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }
  std::size_t size() const { return letters_.size(); }

  long exponent_sum() const;
  Word inverse() const;
  Word pow(long k) const;

  friend bool operator==(const Word&, const Word&) = default;

 private:
  static int check_degree(int degree) {
    if (degree < 2) throw std::invalid_argument("braid degree must be >= 2");
    return degree;
  }
  int degree_;
  std::vector<Letter> letters_;
};

// Freely reduced concatenation a.b (left-to-right composition order).
Word compose(const Word& a, const Word& b);
// b^{-1} a b.
Word conjugate(const Word& a, const Word& b);

// The positive half twist Delta of B_m, and its central square.
Word delta_word(int degree);
Word delta_sq_word(int degree);

// Permutation of {1..m}, stored 0-based: image(i) = img[i].
struct Perm {
  std::vector<int> img;

  static Perm identity(int m);
  int degree() const { return static_cast<int>(img.size()); }
  bool is_identity() const;
  Perm inverse() const;
  // apply this first, then other.
  Perm then(const Perm& other) const;
  // cycle type as a sorted vector of cycle lengths.
  std::vector<int> cycle_type() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  friend bool operator<(const Perm& a, const Perm& b) { return a.img < b.img; }
};

// Projection B_m -> S_m, sigma_i -> (i,i+1); permutation(ab) applies
// permutation(a) first.
Perm permutation(const Word& w);

// Word grammar: whitespace separated tokens `s<k>`, optionally `^<int>`,
// macro `D` (the half twist, exponent allowed), `e` for the empty word.
Word parse_word(const std::string& text, int degree);
// Fully expanded, freely reduced output using `s<k>` and `s<k>^-1` only.
std::string format_word(const Word& w);

}  // namespace braid

#endif
