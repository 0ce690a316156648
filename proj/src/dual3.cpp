#include "braid/dual3.hpp"

#include <cctype>

#include "braid/check.hpp"
#include "braid/garside.hpp"

namespace braid {

Band band_successor(Band b) {
  switch (b) {
    case Band::a12: return Band::a13;
    case Band::a13: return Band::a23;
    default: return Band::a12;
  }
}

Band band_predecessor(Band b) { return band_successor(band_successor(b)); }

Word band_word(Band b) {
  switch (b) {
    case Band::a12: return parse_word("s1", 3);
    case Band::a23: return parse_word("s2", 3);
    default: return parse_word("s2^-1 s1 s2", 3);
  }
}

namespace {

const char* band_name(Band b) {
  switch (b) {
    case Band::a12: return "a12";
    case Band::a13: return "a13";
    default: return "a23";
  }
}

// Merge rule: x . pred(x) = delta; a delta commutes leftwards past an atom z
// as z . delta = delta . succ(z).
void normalize_atoms(long& p, std::vector<Band>& atoms) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j + 1 < atoms.size(); ++j) {
      if (atoms[j + 1] == band_predecessor(atoms[j])) {
        for (std::size_t t = 0; t < j; ++t) atoms[t] = band_successor(atoms[t]);
        atoms.erase(atoms.begin() + static_cast<long>(j), atoms.begin() + static_cast<long>(j) + 2);
        ++p;
        changed = true;
        break;
      }
    }
  }
}

}  // namespace

DualNF dual_nf(const Word& w) {
  if (w.degree() != 3) throw std::invalid_argument("dual_nf requires degree 3");
  long p = 0;
  std::vector<Band> atoms;
  for (const Letter& l : w.letters()) {
    Band b = l.index == 1 ? Band::a12 : Band::a23;
    if (l.sign > 0) {
      atoms.push_back(b);
    } else {
      // a^-1 = delta^-1 . succ(a); pushing delta^-1 left applies pred.
      --p;
      for (Band& x : atoms) x = band_predecessor(x);
      atoms.push_back(band_successor(b));
    }
    normalize_atoms(p, atoms);
  }
  normalize_atoms(p, atoms);
  DualNF out;
  out.delta_power = p;
  for (Band b : atoms) {
    if (!out.syllables.empty() && out.syllables.back().band == b)
      ++out.syllables.back().exponent;
    else
      out.syllables.push_back(BandSyllable{b, 1});
  }
  // uniqueness invariant: consecutive syllables step by the successor order
  for (std::size_t i = 0; i + 1 < out.syllables.size(); ++i)
    BRAID_CHECK(out.syllables[i + 1].band == band_successor(out.syllables[i].band),
                "dual syllables must follow the cyclic successor order");
  return out;
}

std::pair<long, long> sup_depth(const Word& w) {
  DualNF nf = dual_nf(w);
  return {nf.sup(), nf.depth()};
}

std::string DualNF::serialize() const {
  std::string s = "d^" + std::to_string(delta_power);
  for (const BandSyllable& syl : syllables) {
    s += ' ';
    s += band_name(syl.band);
    s += '^';
    s += std::to_string(syl.exponent);
  }
  return s;
}

DualNF parse_dual_nf(const std::string& text) {
  DualNF out;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_exp = [&](long dflt) -> long {
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      bool neg = pos < text.size() && text[pos] == '-';
      if (neg) ++pos;
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw ParseError("expected integer exponent", pos);
      long v = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
        v = v * 10 + (text[pos++] - '0');
      return neg ? -v : v;
    }
    return dflt;
  };
  skip_ws();
  if (pos >= text.size() || text[pos] != 'd') throw ParseError("expected 'd' prefix", pos);
  ++pos;
  out.delta_power = read_exp(1);
  skip_ws();
  while (pos < text.size()) {
    if (text.compare(pos, 3, "a12") == 0)
      out.syllables.push_back(BandSyllable{Band::a12, 1});
    else if (text.compare(pos, 3, "a13") == 0)
      out.syllables.push_back(BandSyllable{Band::a13, 1});
    else if (text.compare(pos, 3, "a23") == 0)
      out.syllables.push_back(BandSyllable{Band::a23, 1});
    else
      throw ParseError("expected band generator", pos);
    pos += 3;
    out.syllables.back().exponent = read_exp(1);
    if (out.syllables.back().exponent < 1)
      throw ParseError("syllable exponent must be positive", pos);
    skip_ws();
  }
  return out;
}

bool check_periodic_congruence(const Word& w) {
  if (w.degree() != 3) throw std::invalid_argument("check_periodic_congruence requires degree 3");
  if (!is_periodic(w)) throw std::invalid_argument("input braid is not periodic");
  DualNF nf = dual_nf(w);
  if (nf.depth() == 0) return true;
  long v = (nf.depth() + nf.sup()) % 3;
  if (v < 0) v += 3;
  return v == 2;
}

}  // namespace braid
