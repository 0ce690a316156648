#include "braid/hurwitz.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "braid/check.hpp"
#include "braid/garside.hpp"

namespace braid {

BraidSystem::BraidSystem(int degree, std::vector<Word> entries) : degree_(degree) {
  if (entries.empty()) throw std::invalid_argument("braid system needs at least one entry");
  entries_.reserve(entries.size());
  for (Word& w : entries) {
    if (w.degree() != degree) throw std::invalid_argument("entry degree mismatch");
    GarsideNF nf = normal_form(w);
    entries_.push_back(nf.to_word());
    entry_keys_.push_back(nf.serialize());
  }
  for (std::size_t t = 0; t < entry_keys_.size(); ++t) {
    if (t) key_ += " ; ";
    key_ += entry_keys_[t];
  }
}

BraidSystem act_generator(const BraidSystem& s, int i, int sign) {
  const int n = s.length();
  if (i < 1 || i >= n) throw std::invalid_argument("hurwitz move index out of range");
  std::vector<Word> e = s.entries();
  const std::size_t a = static_cast<std::size_t>(i - 1), b = a + 1;
  if (sign > 0) {
    Word conj = conjugate(e[a], e[b]);  // b_{i+1}^-1 b_i b_{i+1}
    e[a] = e[b];
    e[b] = std::move(conj);
  } else {
    Word conj = compose(compose(e[a], e[b]), e[a].inverse());
    e[b] = e[a];
    e[a] = std::move(conj);
  }
  return BraidSystem(s.degree(), std::move(e));
}

BraidSystem act_word(const BraidSystem& s, const Word& w) {
  if (w.degree() != s.length())
    throw std::invalid_argument("acting word degree must equal system length");
  BraidSystem cur = s;
  for (const Letter& l : w.letters()) cur = act_generator(cur, l.index, l.sign);
  return cur;
}

Word coxeter(const BraidSystem& s, const std::vector<int>& I) {
  Word out(s.degree());
  if (I.empty()) {
    for (const Word& w : s.entries()) out = compose(out, w);
    return out;
  }
  int prev = 0;
  for (int i : I) {
    if (i <= prev || i > s.length())
      throw std::invalid_argument("index list must be strictly increasing within range");
    out = compose(out, s.entry(i - 1));
    prev = i;
  }
  return out;
}

std::optional<std::pair<std::vector<int>, std::vector<int>>> reducible_partition(
    const BraidSystem& s) {
  const int n = s.length();
  if (n < 2) return std::nullopt;
  std::vector<int> comp(static_cast<std::size_t>(n), -1);
  std::vector<std::vector<bool>> edge(static_cast<std::size_t>(n),
                                      std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      edge[a][b] = edge[b][a] = !commutes(s.entry(a), s.entry(b));
  int ncomp = 0;
  for (int v = 0; v < n; ++v) {
    if (comp[v] >= 0) continue;
    std::deque<int> q{v};
    comp[v] = ncomp;
    while (!q.empty()) {
      int x = q.front();
      q.pop_front();
      for (int y = 0; y < n; ++y)
        if (edge[x][y] && comp[y] < 0) {
          comp[y] = ncomp;
          q.push_back(y);
        }
    }
    ++ncomp;
  }
  if (ncomp < 2) return std::nullopt;
  std::vector<int> I, J;
  for (int v = 0; v < n; ++v) (comp[v] == comp[0] ? I : J).push_back(v + 1);
  return std::make_pair(I, J);
}

Word pure_c(int n, int i) {
  if (i < 1 || i >= n) throw std::invalid_argument("pure_c index out of range");
  std::vector<Letter> ls;
  for (int t = 1; t <= i - 1; ++t) ls.push_back(Letter{t, -1});
  ls.push_back(Letter{i, 1});
  ls.push_back(Letter{i, 1});
  for (int t = i - 1; t >= 1; --t) ls.push_back(Letter{t, 1});
  return Word(n, std::move(ls));
}

Word pure_band(int n, int r, int s) {
  if (r < 1 || s <= r || s > n) throw std::invalid_argument("pure_band needs 1 <= r < s <= n");
  std::vector<Letter> ls;
  for (int t = s - 1; t >= r + 1; --t) ls.push_back(Letter{t, 1});
  ls.push_back(Letter{r, 1});
  ls.push_back(Letter{r, 1});
  for (int t = r + 1; t <= s - 1; ++t) ls.push_back(Letter{t, -1});
  return Word(n, std::move(ls));
}

namespace {

void log_note(std::vector<std::string>* log, const std::string& msg) {
  if (log) log->push_back(msg);
}

std::string index_list(const std::vector<int>& I) {
  std::string s = "{";
  for (std::size_t t = 0; t < I.size(); ++t) {
    if (t) s += ',';
    s += std::to_string(I[t]);
  }
  return s + "}";
}

std::vector<std::vector<int>> subsets_at_least_two(int n, bool proper_only) {
  std::vector<std::vector<int>> out;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    std::vector<int> I;
    for (int v = 0; v < n; ++v)
      if (mask & (1u << v)) I.push_back(v + 1);
    if (I.size() < 2) continue;
    if (proper_only && static_cast<int>(I.size()) == n) continue;
    out.push_back(std::move(I));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

std::optional<Certificate> infiniteness_certificate(const BraidSystem& s,
                                                    std::vector<std::string>* log,
                                                    const ClassifyOptions& copts) {
  const int m = s.degree();
  const int n = s.length();
  const bool can_classify = m <= copts.max_degree;
  if (!can_classify)
    log_note(log, "R1/R2 skipped: degree beyond classification bound");

  std::vector<std::vector<int>> subsets =
      n >= 2 ? subsets_at_least_two(n, false) : std::vector<std::vector<int>>{};

  // R3: exponent-sum restriction in degree 3.
  if (m == 3 && n >= 3) {
    bool all_noncentral = true;
    for (const Word& w : s.entries())
      if (central_delta_power(w)) {
        all_noncentral = false;
        break;
      }
    if (all_noncentral) {
      bool all_commute = true;
      for (int a = 0; a < n && all_commute; ++a)
        for (int b = a + 1; b < n; ++b)
          if (!commutes(s.entry(a), s.entry(b))) {
            all_commute = false;
            break;
          }
      if (!all_commute) {
        for (const auto& I : subsets_at_least_two(n, true)) {
          long e = 0;
          for (int i : I) e += s.entry(i - 1).exponent_sum();
          long r = ((e % 6) + 6) % 6;
          if (r != 2 && r != 4 && r != 3)
            return Certificate{"R3", "exponent sum over " + index_list(I) + " is " +
                                         std::to_string(e) +
                                         " (not +-2 or 3 mod 6) with non-commuting "
                                         "non-central entries"};
        }
      }
    }
  }

  // R1: a pseudo-Anosov partial Coxeter element forces the selected entries
  // to be irreducible and pairwise commuting.
  if (can_classify) {
    for (const auto& I : subsets) {
      ClassifyResult cls;
      try {
        cls = classify(coxeter(s, I), copts);
      } catch (const std::exception& e) {
        log_note(log, "R1 skipped on " + index_list(I) + ": " + e.what());
        continue;
      }
      if (!cls.type) {
        log_note(log, "R1 inconclusive on " + index_list(I) + ": " + cls.note);
        continue;
      }
      if (*cls.type != NTType::PseudoAnosov) continue;
      for (int i : I) {
        ClassifyResult ei = classify(s.entry(i - 1), copts);
        if (ei.is(NTType::Reducible))
          return Certificate{"R1", "partial Coxeter element on " + index_list(I) +
                                       " is pseudo-Anosov but entry " + std::to_string(i) +
                                       " is reducible"};
      }
      for (std::size_t a = 0; a < I.size(); ++a)
        for (std::size_t b = a + 1; b < I.size(); ++b)
          if (!commutes(s.entry(I[a] - 1), s.entry(I[b] - 1)))
            return Certificate{"R1", "partial Coxeter element on " + index_list(I) +
                                         " is pseudo-Anosov but entries " +
                                         std::to_string(I[a]) + "," + std::to_string(I[b]) +
                                         " do not commute"};
    }
  }

  // R2: a reducible partial Coxeter element forces the selected entries to
  // share an invariant essential curve; in degree 3 that curve class is
  // unique per non-central entry, so the check is exact.
  if (can_classify && m == 3) {
    for (const auto& I : subsets) {
      ClassifyResult cls;
      try {
        cls = classify(coxeter(s, I), copts);
      } catch (const std::exception& e) {
        log_note(log, "R2 skipped on " + index_list(I) + ": " + e.what());
        continue;
      }
      if (!cls.is(NTType::Reducible)) continue;
      std::optional<Lamination> common;
      bool have_curve_entry = false;
      for (int i : I) {
        CurveInvariance ci;
        try {
          ci = invariant_curve_class(s.entry(i - 1), copts);
        } catch (const std::exception& e) {
          log_note(log, "R2 skipped on " + index_list(I) + ": " + e.what());
          break;
        }
        if (ci.central) continue;
        if (!ci.curve)
          return Certificate{"R2", "partial Coxeter element on " + index_list(I) +
                                       " is reducible but entry " + std::to_string(i) +
                                       " preserves no essential curve"};
        if (!have_curve_entry) {
          common = ci.curve;
          have_curve_entry = true;
        } else if (!(*common == *ci.curve)) {
          return Certificate{"R2", "partial Coxeter element on " + index_list(I) +
                                       " is reducible but the entries do not preserve a "
                                       "common essential curve"};
        }
      }
    }
  } else if (m != 3) {
    log_note(log, "R2 skipped: common-curve search implemented for degree 3 only");
  }

  // R4: irreducible degree-3 systems of length >= 5.
  if (m == 3 && n >= 5 && !reducible_partition(s))
    return Certificate{"R4", "irreducible degree-3 system of length " + std::to_string(n)};

  return std::nullopt;
}

namespace {

std::vector<Word> generator_words(Subgroup g, int n) {
  std::vector<Word> out;
  switch (g) {
    case Subgroup::Full:
      for (int i = 1; i <= n - 1; ++i) {
        out.push_back(Word::generator(n, i, 1));
        out.push_back(Word::generator(n, i, -1));
      }
      break;
    case Subgroup::Pure:
      for (int r = 1; r <= n - 1; ++r)
        for (int s = r + 1; s <= n; ++s) {
          Word b = pure_band(n, r, s);
          out.push_back(b);
          out.push_back(b.inverse());
        }
      break;
    case Subgroup::FreeF:
      if (n != 3) throw std::invalid_argument("FreeF action is defined for length-3 systems");
      for (int i = 1; i <= 2; ++i) {
        Word c = pure_c(3, i);
        out.push_back(c);
        out.push_back(c.inverse());
      }
      break;
  }
  return out;
}

std::size_t max_entry_letters(const BraidSystem& s) {
  std::size_t mx = 0;
  for (const Word& w : s.entries()) mx = std::max(mx, w.size());
  return mx;
}

}  // namespace

std::string subgroup_name(Subgroup g) {
  switch (g) {
    case Subgroup::Full: return "full";
    case Subgroup::Pure: return "pure";
    default: return "free";
  }
}

OrbitResult orbit_with_systems(const BraidSystem& s, Subgroup subgroup, const OrbitOptions& opts,
                               std::vector<BraidSystem>* out_systems) {
  if (opts.cap == 0) throw std::invalid_argument("orbit cap must be positive");
  OrbitResult res;
  // The certificates witness infiniteness of the full B_n orbit, which also
  // covers the finite-index pure subgroup.  The free subgroup has infinite
  // index in P_3, so no shortcut is taken there.
  if (subgroup != Subgroup::FreeF) {
    if (auto cert = infiniteness_certificate(s)) {
      res.outcome = OrbitResult::Outcome::ProvablyInfinite;
      res.certificate = cert;
      return res;
    }
  }
  std::vector<Word> gens = generator_words(subgroup, s.length());

  std::set<std::string> seen;
  std::deque<BraidSystem> queue;
  std::vector<BraidSystem> discovered;
  seen.insert(s.key());
  queue.push_back(s);
  discovered.push_back(s);
  bool capped = false;
  std::string note;
  while (!queue.empty()) {
    BraidSystem cur = std::move(queue.front());
    queue.pop_front();
    for (const Word& g : gens) {
      BraidSystem next = act_word(cur, g);
      if (seen.count(next.key())) continue;
      if (seen.size() >= opts.cap) {
        capped = true;
        note = "visited cap reached";
        break;
      }
      if (max_entry_letters(next) > opts.max_entry_letters) {
        capped = true;
        note = "entry word length guard exceeded";
        break;
      }
      seen.insert(next.key());
      queue.push_back(next);
      discovered.push_back(next);
    }
    if (capped) break;
  }
  res.visited = seen.size();
  if (capped) {
    res.outcome = OrbitResult::Outcome::CapExceeded;
    res.note = note;
    // Re-check certificates on a sample of visited systems: a rule can fire
    // on an orbit member even when silent on the seed.
    if (subgroup != Subgroup::FreeF) {
      std::size_t budget = std::min<std::size_t>(discovered.size(), 25);
      for (std::size_t t = 0; t < budget; ++t) {
        if (auto cert = infiniteness_certificate(discovered[t])) {
          res.outcome = OrbitResult::Outcome::ProvablyInfinite;
          res.certificate = cert;
          break;
        }
      }
    }
  } else {
    res.outcome = OrbitResult::Outcome::Finite;
    res.size = seen.size();
    res.keys.assign(seen.begin(), seen.end());
  }
  if (out_systems) *out_systems = std::move(discovered);
  return res;
}

OrbitResult orbit(const BraidSystem& s, Subgroup subgroup, const OrbitOptions& opts) {
  return orbit_with_systems(s, subgroup, opts, nullptr);
}

}  // namespace braid
