#include "braid/verify.hpp"

#include <random>

#include "braid/garside.hpp"

namespace braid {

void TheoremReport::merge(const TheoremReport& other) {
  instances += other.instances;
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  if (!other.notes.empty() && notes.find(other.notes) == std::string::npos) {
    if (!notes.empty()) notes += "; ";
    notes += other.notes;
  }
}

namespace {

long factorial(long n) {
  long f = 1;
  for (long t = 2; t <= n; ++t) f *= t;
  return f;
}

Word word_power(const Word& w, long k) { return w.pow(k); }

void violation(TheoremReport& rep, const std::string& what) { rep.violations.push_back(what); }

Word random_word(std::mt19937& rng, int degree, int len) {
  std::vector<Letter> ls;
  std::uniform_int_distribution<int> gen(1, degree - 1);
  std::uniform_int_distribution<int> sgn(0, 1);
  for (int t = 0; t < len; ++t) ls.push_back(Letter{gen(rng), sgn(rng) ? 1 : -1});
  return Word(degree, std::move(ls));
}

}  // namespace

TheoremReport check_root_centralizer(const Word& alpha, const Word& beta, long s) {
  if (alpha.degree() != beta.degree()) throw std::invalid_argument("degree mismatch");
  if (s <= 0) throw std::invalid_argument("power s must be positive");
  const long m = beta.degree();
  if (!commutes(alpha, power(beta, s).to_word()))
    throw std::invalid_argument("precondition failed: alpha does not commute with beta^s");
  TheoremReport rep{"centerroot", 1, {}, ""};
  ClassifyResult cls = classify(beta);
  if (!cls.type) throw std::runtime_error("classification inconclusive: " + cls.note);
  const std::string tag = " (alpha=" + format_word(alpha) + ", beta=" + format_word(beta) +
                          ", s=" + std::to_string(s) + ")";
  switch (*cls.type) {
    case NTType::Periodic:
      if (!commutes(alpha, power(beta, m * (m - 1)).to_word()))
        violation(rep, "periodic case: alpha not in Z(beta^{m(m-1)})" + tag);
      break;
    case NTType::PseudoAnosov:
      if (!commutes(alpha, beta))
        violation(rep, "pseudo-Anosov case: alpha not in Z(beta)" + tag);
      break;
    case NTType::Reducible:
      if (!commutes(alpha, power(beta, factorial(m - 1)).to_word()))
        violation(rep, "reducible case: alpha not in Z(beta^{(m-1)!})" + tag);
      if (m == 3 && !commutes(alpha, beta))
        violation(rep, "reducible degree-3 case: alpha not in Z(beta)" + tag);
      if (m == 4) {
        bool ok = false;
        for (long t = 1; t <= 3 && !ok; ++t)
          ok = commutes(alpha, power(beta, t).to_word());
        if (!ok) violation(rep, "reducible degree-4 case: alpha not in Z(beta^t), t<=3" + tag);
      }
      break;
  }
  return rep;
}

TheoremReport check_corollary_consequence(const Word& alpha, const Word& beta, long M) {
  if (alpha.degree() != beta.degree()) throw std::invalid_argument("degree mismatch");
  if (M == 0) throw std::invalid_argument("M must be nonzero");
  if (!commutes(word_power(alpha, M), word_power(beta, M)))
    throw std::invalid_argument("precondition failed: alpha^M and beta^M do not commute");
  TheoremReport rep{"centerroot-corollary", 1, {}, ""};
  const long nf = factorial(alpha.degree());
  if (!commutes(power(alpha, nf).to_word(), power(beta, nf).to_word()))
    violation(rep, "alpha^{n!} and beta^{n!} do not commute (alpha=" + format_word(alpha) +
                       ", beta=" + format_word(beta) + ", M=" + std::to_string(M) + ")");
  return rep;
}

TheoremReport check_length2_bound(const BraidSystem& s, std::size_t cap) {
  if (s.length() != 2) throw std::invalid_argument("length-2 system required");
  TheoremReport rep{"b2finiteness", 1, {}, ""};
  const int m = s.degree();
  OrbitOptions opts;
  opts.cap = cap;
  OrbitResult r = orbit(s, Subgroup::Full, opts);
  if (r.outcome != OrbitResult::Outcome::Finite) {
    rep.notes = "orbit not enumerated as finite (" +
                std::string(r.outcome == OrbitResult::Outcome::CapExceeded ? "cap" : "certificate") +
                "); bound not asserted";
    return rep;
  }
  std::size_t bound = m == 3 ? 6 : (m == 4 ? 8 : static_cast<std::size_t>(2 * factorial(m - 1)));
  if (r.size > bound)
    violation(rep, "orbit of " + s.key() + " has size " + std::to_string(r.size) +
                       " > bound " + std::to_string(bound));
  return rep;
}

TheoremReport check_degree3_bounds(const BraidSystem& s, std::size_t cap) {
  if (s.degree() != 3) throw std::invalid_argument("degree-3 system required");
  TheoremReport rep{"3finite", 1, {}, ""};
  const int n = s.length();
  OrbitOptions opts;
  opts.cap = cap;
  OrbitResult r = orbit(s, Subgroup::Full, opts);
  if (r.outcome != OrbitResult::Outcome::Finite) {
    rep.notes = "orbit not enumerated as finite; bounds not asserted";
    return rep;
  }
  const bool irreducible = !reducible_partition(s).has_value();
  if (n == 2 && r.size > 6)
    violation(rep, "length-2 orbit larger than 6: " + std::to_string(r.size));
  if (n >= 3 && r.size > static_cast<std::size_t>(27 * factorial(n)))
    violation(rep, "orbit larger than 27 n!: " + std::to_string(r.size));
  if (n == 3 && irreducible && r.size > 162)
    violation(rep, "irreducible length-3 orbit larger than 162: " + std::to_string(r.size));
  if (n == 4 && irreducible && r.size > 648)
    violation(rep, "irreducible length-4 orbit larger than 648: " + std::to_string(r.size));
  if (n >= 5 && irreducible)
    violation(rep, "finite irreducible orbit of length >= 5: " + s.key());
  return rep;
}

namespace {

struct CommutingInstance {
  Word alpha;
  Word beta;
  long s;
};

std::vector<CommutingInstance> degree3_instances() {
  std::vector<CommutingInstance> out;
  std::mt19937 rng(20240811);
  const Word delta = parse_word("s1 s2", 3);
  const Word big_delta = parse_word("s1 s2 s1", 3);
  const Word tube = parse_word("s2 s1 s1 s2", 3);  // Delta^2 s1^-2, the tube twist
  const Word pa = parse_word("s1 s2^-1", 3);
  std::vector<Word> conjugators;
  conjugators.push_back(Word(3));
  conjugators.push_back(parse_word("s1", 3));
  conjugators.push_back(parse_word("s2 s1", 3));
  conjugators.push_back(parse_word("s1^-1 s2", 3));
  for (int t = 0; t < 3; ++t) conjugators.push_back(random_word(rng, 3, 5));

  for (const Word& c : conjugators) {
    // periodic: central powers of delta commute with everything
    for (long k : {1L, -1L, 2L}) {
      Word beta = conjugate(delta.pow(k), c);
      out.push_back({random_word(rng, 3, 6), beta, 3});
      out.push_back({conjugate(delta.pow(2 * k), c), beta, 1});
    }
    {
      Word beta = conjugate(big_delta, c);
      out.push_back({random_word(rng, 3, 6), beta, 2});
      out.push_back({conjugate(big_delta.pow(3), c), beta, 1});
    }
    // reducible: the rank-two centralizer family sigma_1, Delta^2 sigma_1^-2
    for (long k : {1L, 2L, -1L}) {
      Word beta = conjugate(compose(tube, parse_word("s1", 3).pow(k)), c);
      out.push_back({conjugate(parse_word("s1", 3), c), beta, 1});
      out.push_back({conjugate(tube, c), beta, 2});
      out.push_back({conjugate(compose(tube.pow(2), parse_word("s1", 3).pow(-k)), c), beta, 3});
    }
    for (long k : {2L, 3L, -2L}) {
      Word beta = conjugate(parse_word("s1", 3).pow(k), c);
      out.push_back({conjugate(compose(parse_word("s1", 3), delta_sq_word(3)), c), beta, 2});
    }
    // pseudo-Anosov: the centralizer is generated by beta and the center
    for (long k : {1L, 2L}) {
      Word beta = conjugate(pa.pow(k), c);
      out.push_back({conjugate(compose(pa.pow(3), delta_sq_word(3)), c), beta, 1});
      out.push_back({conjugate(delta_sq_word(3), c), beta, 2});
    }
  }
  return out;
}

std::vector<CommutingInstance> degree4_instances() {
  std::vector<CommutingInstance> out;
  std::mt19937 rng(20240812);
  const Word delta4 = parse_word("s1 s2 s3", 4);
  const Word big_delta4 = delta_word(4);
  const Word swap_blocks = parse_word("s2 s1 s3 s2", 4);
  std::vector<Word> conjugators;
  conjugators.push_back(Word(4));
  conjugators.push_back(parse_word("s2", 4));
  conjugators.push_back(parse_word("s3 s1^-1", 4));
  for (int t = 0; t < 2; ++t) conjugators.push_back(random_word(rng, 4, 4));

  for (const Word& c : conjugators) {
    {
      Word beta = conjugate(delta4, c);
      out.push_back({random_word(rng, 4, 5), beta, 4});
      out.push_back({conjugate(delta4.pow(2), c), beta, 1});
    }
    {
      Word beta = conjugate(big_delta4, c);
      out.push_back({random_word(rng, 4, 5), beta, 2});
    }
    // reducible (2,2) blocks: disjoint-support commuting families
    for (long a : {1L, 2L}) {
      for (long b : {1L, -1L}) {
        Word beta = conjugate(compose(parse_word("s1", 4).pow(a), parse_word("s3", 4).pow(b)), c);
        Word alpha = conjugate(compose(parse_word("s1", 4).pow(b), parse_word("s3", 4).pow(a)), c);
        out.push_back({alpha, beta, 1});
        out.push_back({conjugate(delta_sq_word(4), c), beta, 3});
      }
    }
    // reducible with permuted blocks
    {
      Word beta = conjugate(swap_blocks, c);
      out.push_back({conjugate(swap_blocks.pow(2), c), beta, 1});
      out.push_back({conjugate(compose(parse_word("s1", 4), parse_word("s3", 4)), c), beta, 2});
    }
    {
      Word beta = conjugate(parse_word("s2", 4).pow(2), c);
      out.push_back({conjugate(parse_word("s2", 4), c), beta, 2});
    }
  }
  return out;
}

}  // namespace

std::vector<TheoremReport> verify_paper_corpus(bool include_slow) {
  std::vector<TheoremReport> reports;

  {
    TheoremReport root{"centerroot", 0, {}, ""};
    for (const auto& inst : degree3_instances())
      root.merge(check_root_centralizer(inst.alpha, inst.beta, inst.s));
    for (const auto& inst : degree4_instances())
      root.merge(check_root_centralizer(inst.alpha, inst.beta, inst.s));
    reports.push_back(std::move(root));
  }

  {
    TheoremReport cor{"centerroot-corollary", 0, {}, ""};
    std::mt19937 rng(20240813);
    const Word delta = parse_word("s1 s2", 3);
    const Word big_delta = parse_word("s1 s2 s1", 3);
    for (int t = 0; t < 12; ++t) {
      Word c = random_word(rng, 3, 4);
      cor.merge(check_corollary_consequence(conjugate(delta, c), random_word(rng, 3, 6), 3));
      cor.merge(check_corollary_consequence(conjugate(big_delta, c), random_word(rng, 3, 6), 2));
      Word x = conjugate(parse_word("s1", 3), c);
      cor.merge(check_corollary_consequence(x, compose(x.pow(2), conjugate(delta_sq_word(3), c)), 1));
    }
    const Word delta4 = parse_word("s1 s2 s3", 4);
    for (int t = 0; t < 6; ++t) {
      Word c = random_word(rng, 4, 4);
      cor.merge(check_corollary_consequence(conjugate(delta4, c), random_word(rng, 4, 5), 4));
      cor.merge(check_corollary_consequence(conjugate(parse_word("s1", 4), c),
                                            conjugate(parse_word("s3", 4), c), 1));
    }
    reports.push_back(std::move(cor));
  }

  {
    TheoremReport len2{"b2finiteness", 0, {}, ""};
    len2.merge(check_length2_bound(
        BraidSystem(3, {parse_word("s1^-1", 3), parse_word("s1 s1 s2", 3)})));
    len2.merge(check_length2_bound(
        BraidSystem(4, {parse_word("s1", 4), parse_word("s2 s3", 4)})));
    for (int m = 4; m <= 6; ++m) {
      std::vector<Letter> rest;
      for (int i = 2; i <= m - 1; ++i) rest.push_back(Letter{i, 1});
      len2.merge(check_length2_bound(
          BraidSystem(m, {Word::generator(m, 1), Word(m, rest)})));
    }
    std::mt19937 rng(20240814);
    OrbitOptions small;
    small.cap = 400;
    for (int t = 0; t < 10; ++t) {
      int m = 3 + (t % 2);
      BraidSystem s(m, {random_word(rng, m, 4), random_word(rng, m, 4)});
      len2.merge(check_length2_bound(s, small.cap));
    }
    reports.push_back(std::move(len2));
  }

  {
    TheoremReport d3{"3finite", 0, {}, ""};
    auto sys3 = [](const char* a, const char* b, const char* c) {
      return BraidSystem(3, {parse_word(a, 3), parse_word(b, 3), parse_word(c, 3)});
    };
    d3.merge(check_degree3_bounds(sys3("s1 s1", "s1", "s2")));
    d3.merge(check_degree3_bounds(sys3("s1 s2", "s1", "s2")));
    d3.merge(check_degree3_bounds(sys3("s2", "s1 s2", "s1")));
    d3.merge(check_degree3_bounds(sys3("s1", "s1 s1", "s2")));
    d3.merge(check_degree3_bounds(sys3("s1", "s2", "s1")));
    d3.merge(check_degree3_bounds(
        BraidSystem(3, {parse_word("s1", 3), parse_word("s1", 3), parse_word("s1", 3),
                        parse_word("s2", 3)})));
    std::mt19937 rng(20240815);
    for (int t = 0; t < 8; ++t) {
      BraidSystem s(3, {random_word(rng, 3, 3), random_word(rng, 3, 3), random_word(rng, 3, 3)});
      d3.merge(check_degree3_bounds(s, 400));
    }
    if (include_slow) {
      BraidSystem achieves(
          3, {parse_word("s1", 3), parse_word("D^2 s1", 3), parse_word("D^4 s1", 3),
              parse_word("D^6 s2", 3)});
      TheoremReport r{"3finite", 1, {}, ""};
      OrbitResult orb = orbit(achieves, Subgroup::Full, {});
      if (orb.outcome != OrbitResult::Outcome::Finite)
        r.violations.push_back("extremal length-4 orbit did not enumerate as finite");
      else if (orb.size != 648)
        r.violations.push_back("extremal length-4 orbit expected 648, got " +
                               std::to_string(orb.size));
      d3.merge(r);
    }
    reports.push_back(std::move(d3));
  }

  return reports;
}

std::string render_report(const TheoremReport& r) {
  std::string out;
  out += "theorem=" + r.theorem + "\n";
  out += "instances=" + std::to_string(r.instances) + "\n";
  out += "violations=" + std::to_string(r.violations.size()) + "\n";
  for (const std::string& v : r.violations) out += "violation=" + v + "\n";
  if (!r.notes.empty()) out += "notes=" + r.notes + "\n";
  return out;
}

}  // namespace braid
