#include "braid/garside.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "braid/check.hpp"

namespace braid {

namespace {

Perm omega(int m) {
  Perm p;
  p.img.resize(m);
  for (int i = 0; i < m; ++i) p.img[i] = m - 1 - i;
  return p;
}

// tau(x) = Delta^-1 x Delta on simple elements: conjugate by the
// order-reversing permutation.  An involution.
Perm tau(const Perm& p) {
  int m = p.degree();
  Perm r;
  r.img.resize(m);
  for (int i = 0; i < m; ++i) r.img[i] = m - 1 - p.img[m - 1 - i];
  return r;
}

// A -> A . sigma_i (valid as a permutation braid only when i is not in
// the finishing set).  0-based i here and below.
void mul_right_sigma(Perm& p, int i) {
  for (int& v : p.img) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
}

// B -> sigma_i^-1 . B (valid when i is in the starting set).
void mul_left_sigma_inv(Perm& p, int i) { std::swap(p.img[i], p.img[i + 1]); }

bool descent(const Perm& p, int i) { return p.img[i] > p.img[i + 1]; }

// Makes the adjacent pair (a, b) left-weighted by sliding head letters of b
// into a.  Returns true if anything moved.
bool fix_pair(Perm& a, Perm& b) {
  Perm ainv = a.inverse();
  bool changed = false;
  int m = a.degree();
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i + 1 < m; ++i) {
      if (descent(b, i) && !descent(ainv, i)) {
        mul_right_sigma(a, i);
        std::swap(ainv.img[i], ainv.img[i + 1]);
        mul_left_sigma_inv(b, i);
        changed = true;
        progress = true;
      }
    }
  }
  return changed;
}

// Absorb identity/Delta factors and left-weight every adjacent pair.
void normalize(int m, long& inf, std::vector<Perm>& fs) {
  const Perm w0 = omega(m);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t j = 0; j < fs.size();) {
      if (fs[j].is_identity()) {
        fs.erase(fs.begin() + static_cast<long>(j));
        changed = true;
      } else if (fs[j] == w0) {
        for (std::size_t t = 0; t < j; ++t) fs[t] = tau(fs[t]);
        fs.erase(fs.begin() + static_cast<long>(j));
        ++inf;
        changed = true;
        j = 0;
      } else {
        ++j;
      }
    }
    for (std::size_t j = 0; j + 1 < fs.size(); ++j)
      if (fix_pair(fs[j], fs[j + 1])) changed = true;
  }
}

}  // namespace

std::vector<int> SimpleFactor::starting_set() const {
  std::vector<int> s;
  for (int i = 0; i + 1 < perm.degree(); ++i)
    if (perm.img[i] > perm.img[i + 1]) s.push_back(i + 1);
  return s;
}

std::vector<int> SimpleFactor::finishing_set() const {
  return SimpleFactor{perm.inverse()}.starting_set();
}

Word SimpleFactor::to_word(int degree) const {
  Perm p = perm;
  std::vector<Letter> out;
  bool again = true;
  while (again) {
    again = false;
    for (int i = 0; i + 1 < p.degree(); ++i) {
      if (p.img[i] > p.img[i + 1]) {
        out.push_back(Letter{i + 1, 1});
        std::swap(p.img[i], p.img[i + 1]);
        again = true;
        break;
      }
    }
  }
  return Word(degree, std::move(out));
}

Word GarsideNF::to_word() const {
  Word out(degree_);
  Word d = delta_word(degree_);
  if (inf_ != 0) out = d.pow(inf_);
  for (const SimpleFactor& f : factors_) out = compose(out, f.to_word(degree_));
  return out;
}

std::string GarsideNF::serialize() const {
  std::string s = "D^" + std::to_string(inf_);
  for (const SimpleFactor& f : factors_) {
    s += " | [";
    for (int i = 0; i < f.perm.degree(); ++i) {
      if (i) s += ' ';
      s += std::to_string(f.perm.img[i] + 1);
    }
    s += ']';
  }
  return s;
}

bool operator<(const GarsideNF& a, const GarsideNF& b) {
  if (a.degree_ != b.degree_) return a.degree_ < b.degree_;
  if (a.inf_ != b.inf_) return a.inf_ < b.inf_;
  return a.factors_ < b.factors_;
}

GarsideNF normal_form(const Word& w) {
  const int m = w.degree();
  const Perm w0 = omega(m);
  long inf = 0;
  std::vector<Perm> fs;
  for (const Letter& l : w.letters()) {
    if (l.sign > 0) {
      Perm p = Perm::identity(m);
      std::swap(p.img[l.index - 1], p.img[l.index]);
      fs.push_back(std::move(p));
    } else {
      // sigma_i^-1 = Delta^-1 . (Delta sigma_i^-1); push the Delta^-1 left.
      --inf;
      for (Perm& f : fs) f = tau(f);
      Perm r = w0;
      mul_right_sigma(r, l.index - 1);
      fs.push_back(std::move(r));
    }
  }
  normalize(m, inf, fs);
  std::vector<SimpleFactor> out;
  out.reserve(fs.size());
  for (Perm& p : fs) out.push_back(SimpleFactor{std::move(p)});
  return GarsideNF(m, inf, std::move(out));
}

GarsideNF nf_multiply(const GarsideNF& a, const GarsideNF& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in nf_multiply");
  const int m = a.degree();
  long inf = a.inf() + b.inf();
  std::vector<Perm> fs;
  fs.reserve(a.factors().size() + b.factors().size());
  // a.factors Delta^q = Delta^q tau^q(a.factors)
  const bool twist = (b.inf() % 2) != 0;
  for (const SimpleFactor& f : a.factors()) fs.push_back(twist ? tau(f.perm) : f.perm);
  for (const SimpleFactor& f : b.factors()) fs.push_back(f.perm);
  normalize(m, inf, fs);
  std::vector<SimpleFactor> out;
  out.reserve(fs.size());
  for (Perm& p : fs) out.push_back(SimpleFactor{std::move(p)});
  return GarsideNF(m, inf, std::move(out));
}

GarsideNF nf_inverse(const GarsideNF& a) { return normal_form(a.to_word().inverse()); }

bool equal(const Word& a, const Word& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("degree mismatch in equal");
  return normal_form(a) == normal_form(b);
}

bool commutes(const Word& a, const Word& b) {
  return equal(compose(a, b), compose(b, a));
}

GarsideNF power(const Word& w, long k) {
  GarsideNF base = normal_form(k >= 0 ? w : w.inverse());
  long n = std::labs(k);
  GarsideNF acc(w.degree(), 0, {});
  while (n > 0) {
    if (n & 1) acc = nf_multiply(acc, base);
    n >>= 1;
    if (n) base = nf_multiply(base, base);
  }
  return acc;
}

std::optional<long> central_delta_power(const Word& w) {
  GarsideNF nf = normal_form(w);
  if (!nf.factors().empty()) return std::nullopt;
  if (nf.inf() % 2 != 0) return std::nullopt;
  return nf.inf() / 2;
}

bool is_periodic(const Word& w) {
  const long m = w.degree();
  GarsideNF nf = power(w, m * (m - 1));
  if (!nf.factors().empty()) return false;
  BRAID_CHECK(nf.inf() % 2 == 0, "even power of a braid cannot be an odd delta power");
  return true;
}

GarsideNF cycling(const GarsideNF& x) {
  if (x.factors().empty()) return x;
  Perm head = x.factors().front().perm;
  if (x.inf() % 2 != 0) head = tau(head);  // tau^{-inf}(f1), tau is an involution
  Word c = SimpleFactor{head}.to_word(x.degree());
  return normal_form(conjugate(x.to_word(), c));
}

GarsideNF decycling(const GarsideNF& x) {
  if (x.factors().empty()) return x;
  Word t = x.factors().back().to_word(x.degree());
  return normal_form(compose(compose(t, x.to_word()), t.inverse()));
}

namespace {

// Iterated cycling/decycling to reach maximal inf, then minimal sup.
struct Tracked {
  GarsideNF nf;
  Word witness;
};

Tracked seek_summit(const Word& w) {
  Tracked cur{normal_form(w), Word(w.degree())};
  if (cur.nf.factors().empty()) return cur;
  bool improved = true;
  while (improved) {
    improved = false;
    // cycling phase: raise inf
    {
      Tracked y = cur;
      std::set<std::string> seen;
      while (true) {
        if (y.nf.factors().empty()) return y;
        std::string k = y.nf.serialize();
        if (seen.count(k)) break;
        seen.insert(k);
        Perm head = y.nf.factors().front().perm;
        if (y.nf.inf() % 2 != 0) head = tau(head);
        Word c = SimpleFactor{head}.to_word(y.nf.degree());
        y = Tracked{cycling(y.nf), compose(y.witness, c)};
        if (y.nf.inf() > cur.nf.inf()) {
          cur = y;
          improved = true;
          break;
        }
      }
    }
    // decycling phase: lower sup
    {
      Tracked y = cur;
      std::set<std::string> seen;
      while (true) {
        if (y.nf.factors().empty()) return y;
        std::string k = y.nf.serialize();
        if (seen.count(k)) break;
        seen.insert(k);
        Word t = y.nf.factors().back().to_word(y.nf.degree());
        y = Tracked{decycling(y.nf), compose(y.witness, t.inverse())};
        if (y.nf.sup() < cur.nf.sup()) {
          cur = y;
          improved = true;
          break;
        }
      }
    }
  }
  return cur;
}

std::vector<Perm> all_perms(int m) {
  std::vector<int> v(m);
  for (int i = 0; i < m; ++i) v[i] = i;
  std::vector<Perm> out;
  do {
    out.push_back(Perm{v});
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace

SssResult super_summit_set(const Word& w, std::size_t cap) {
  if (cap == 0) throw std::invalid_argument("super_summit_set cap must be positive");
  SssResult res;
  Tracked seed = seek_summit(w);
  if (seed.nf.factors().empty()) {
    res.complete = true;
    res.elements = {seed.nf};
    res.witnesses = {seed.witness};
    res.visited = 1;
    return res;
  }
  const long best_inf = seed.nf.inf();
  const long best_len = seed.nf.canonical_length();
  const int m = w.degree();
  std::vector<Perm> simples = all_perms(m);

  std::map<std::string, Tracked> found;
  std::deque<std::string> queue;
  std::string k0 = seed.nf.serialize();
  found.emplace(k0, seed);
  queue.push_back(k0);
  bool complete = true;
  while (!queue.empty()) {
    Tracked cur = found.at(queue.front());
    queue.pop_front();
    Word cw = cur.nf.to_word();
    for (const Perm& s : simples) {
      if (Perm{s}.is_identity()) continue;
      Word sw = SimpleFactor{s}.to_word(m);
      GarsideNF z = normal_form(conjugate(cw, sw));
      if (z.inf() != best_inf || z.canonical_length() != best_len) continue;
      std::string k = z.serialize();
      if (found.count(k)) continue;
      if (found.size() >= cap) {
        complete = false;
        queue.clear();
        break;
      }
      found.emplace(k, Tracked{z, compose(cur.witness, sw)});
      queue.push_back(k);
    }
  }
  res.complete = complete;
  res.visited = found.size();
  for (auto& [k, t] : found) {
    res.elements.push_back(t.nf);
    res.witnesses.push_back(t.witness);
  }
  return res;
}

}  // namespace braid
