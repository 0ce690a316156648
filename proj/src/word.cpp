#include "braid/word.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>

namespace braid {

Word::Word(int degree, std::vector<Letter> raw) : degree_(check_degree(degree)) {
  letters_.reserve(raw.size());
  for (const Letter& l : raw) {
    if (l.index < 1 || l.index >= degree_)
      throw std::invalid_argument("generator index out of range for degree " +
                                  std::to_string(degree_));
    if (l.sign != 1 && l.sign != -1) throw std::invalid_argument("letter sign must be +-1");
    if (!letters_.empty() && letters_.back().index == l.index &&
        letters_.back().sign == -l.sign) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }
}

long Word::exponent_sum() const {
  long e = 0;
  for (const Letter& l : letters_) e += l.sign;
  return e;
}

Word Word::inverse() const {
  std::vector<Letter> rev(letters_.rbegin(), letters_.rend());
  for (Letter& l : rev) l.sign = -l.sign;
  return Word(degree_, std::move(rev));
}

Word Word::pow(long k) const {
  Word base = k >= 0 ? *this : inverse();
  long n = std::labs(k);
  std::vector<Letter> out;
  out.reserve(base.size() * static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i)
    out.insert(out.end(), base.letters_.begin(), base.letters_.end());
  return Word(degree_, std::move(out));
}

Word compose(const Word& a, const Word& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in compose");
  std::vector<Letter> out = a.letters();
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return Word(a.degree(), std::move(out));
}

Word conjugate(const Word& a, const Word& b) {
  return compose(compose(b.inverse(), a), b);
}

Word delta_word(int degree) {
  std::vector<Letter> out;
  for (int run = degree - 1; run >= 1; --run)
    for (int i = 1; i <= run; ++i) out.push_back(Letter{i, 1});
  return Word(degree, std::move(out));
}

Word delta_sq_word(int degree) { return compose(delta_word(degree), delta_word(degree)); }

Perm Perm::identity(int m) {
  Perm p;
  p.img.resize(m);
  std::iota(p.img.begin(), p.img.end(), 0);
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (img[i] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  Perm r;
  r.img.resize(img.size());
  for (int i = 0; i < degree(); ++i) r.img[img[i]] = i;
  return r;
}

Perm Perm::then(const Perm& other) const {
  Perm r;
  r.img.resize(img.size());
  for (int i = 0; i < degree(); ++i) r.img[i] = other.img[img[i]];
  return r;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<bool> seen(img.size(), false);
  std::vector<int> lens;
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    int len = 0;
    for (int j = i; !seen[j]; j = img[j]) {
      seen[j] = true;
      ++len;
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

Perm permutation(const Word& w) {
  // img[s] tracks the current position of the strand starting at s; each
  // letter exchanges the strands sitting at positions index, index+1.
  Perm p = Perm::identity(w.degree());
  for (const Letter& l : w.letters())
    for (int& v : p.img) {
      if (v == l.index - 1)
        v = l.index;
      else if (v == l.index)
        v = l.index - 1;
    }
  return p;
}

namespace {

long parse_int(const std::string& s, std::size_t& pos, std::size_t token_start) {
  bool neg = false;
  if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    neg = s[pos] == '-';
    ++pos;
  }
  if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
    throw ParseError("expected integer", token_start);
  long v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    v = v * 10 + (s[pos] - '0');
    if (v > 1000000) throw ParseError("exponent too large", token_start);
    ++pos;
  }
  return neg ? -v : v;
}

}  // namespace

Word parse_word(const std::string& text, int degree) {
  if (degree < 2) throw std::invalid_argument("braid degree must be >= 2");
  std::vector<Letter> out;
  std::size_t pos = 0;
  const Word delta = delta_word(degree);
  while (pos < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
      continue;
    }
    std::size_t start = pos;
    char c = text[pos];
    if (c == 'e') {
      ++pos;
    } else if (c == 's' || c == 'D') {
      ++pos;
      long index = 0;
      if (c == 's') {
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
          throw ParseError("expected generator index after 's'", start);
        index = parse_int(text, pos, start);
        if (index < 1 || index >= degree)
          throw ParseError("generator index out of range for degree " + std::to_string(degree),
                           start);
      }
      long exp = 1;
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        exp = parse_int(text, pos, start);
      }
      if (c == 's') {
        int sign = exp >= 0 ? 1 : -1;
        for (long i = 0; i < std::labs(exp); ++i)
          out.push_back(Letter{static_cast<int>(index), sign});
      } else {
        Word d = delta.pow(exp);
        out.insert(out.end(), d.letters().begin(), d.letters().end());
      }
    } else {
      throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    if (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])))
      throw ParseError("unexpected trailing characters in token", pos);
  }
  return Word(degree, std::move(out));
}

std::string format_word(const Word& w) {
  if (w.empty()) return "e";
  std::string out;
  for (const Letter& l : w.letters()) {
    if (!out.empty()) out += ' ';
    out += 's';
    out += std::to_string(l.index);
    if (l.sign < 0) out += "^-1";
  }
  return out;
}

}  // namespace braid
