#include <algorithm>
#include <random>
#include <set>

#include "braid/garside.hpp"
#include "braid/hurwitz.hpp"
#include "doctest.h"
#include "support/random_gen.hpp"

using namespace braid;

namespace {

BraidSystem sys(int degree, std::initializer_list<const char*> words) {
  std::vector<Word> entries;
  for (const char* w : words) entries.push_back(parse_word(w, degree));
  return BraidSystem(degree, std::move(entries));
}

// Half twist of the entry block i..j (generators sigma_i .. sigma_{j-1}).
Word block_half_twist(int n, int i, int j) {
  std::vector<Letter> ls;
  for (int top = j - 1; top >= i; --top)
    for (int t = i; t <= top; ++t) ls.push_back(Letter{t, 1});
  return Word(n, std::move(ls));
}

}  // namespace

TEST_CASE("hurwitz moves") {
  std::mt19937 rng(811);
  for (int t = 0; t < 50; ++t) {
    Word b1 = testsupport::random_word(rng, 3, 5), b2 = testsupport::random_word(rng, 3, 5);
    BraidSystem s(3, {b1, b2});
    BraidSystem moved = act_generator(s, 1, 1);
    CHECK(equal(moved.entry(0), b2));
    CHECK(equal(moved.entry(1), conjugate(b1, b2)));
    CHECK(act_generator(moved, 1, -1).key() == s.key());
    CHECK(act_generator(act_generator(s, 1, -1), 1, 1).key() == s.key());
  }
  // commuting entries just swap
  BraidSystem c = sys(4, {"s1", "s3"});
  BraidSystem cs = act_generator(c, 1, 1);
  CHECK(cs.entry_keys()[0] == normal_form(parse_word("s3", 4)).serialize());
  CHECK(cs.entry_keys()[1] == normal_form(parse_word("s1", 4)).serialize());
  // equal self-commuting entries give a fixed point
  BraidSystem f = sys(3, {"s1 s2", "s1 s2"});
  CHECK(act_generator(f, 1, 1).key() == f.key());
  CHECK_THROWS_AS(act_generator(c, 2, 1), std::invalid_argument);
}

TEST_CASE("act_word and system relations") {
  std::mt19937 rng(821);
  for (int t = 0; t < 120; ++t) {
    int n = 3 + static_cast<int>(rng() % 3);
    int m = 3 + static_cast<int>(rng() % 2);
    BraidSystem s = testsupport::random_system(rng, m, n, 3);
    CHECK(act_word(s, Word(n)).key() == s.key());
    int i = 1 + static_cast<int>(rng() % (n - 1));
    CHECK(act_word(s, Word(n, {Letter{i, 1}, Letter{i, -1}})).key() == s.key());
    if (i + 1 <= n - 1) {
      Word lhs(n, {Letter{i, 1}, Letter{i + 1, 1}, Letter{i, 1}});
      Word rhs(n, {Letter{i + 1, 1}, Letter{i, 1}, Letter{i + 1, 1}});
      CHECK(act_word(s, lhs).key() == act_word(s, rhs).key());
    }
    if (i + 2 <= n - 1) {
      Word lhs(n, {Letter{i, 1}, Letter{i + 2, 1}});
      Word rhs(n, {Letter{i + 2, 1}, Letter{i, 1}});
      CHECK(act_word(s, lhs).key() == act_word(s, rhs).key());
    }
  }
}

TEST_CASE("coxeter elements") {
  BraidSystem s = sys(3, {"s1", "s2"});
  CHECK(equal(coxeter(s), parse_word("s1 s2", 3)));
  BraidSystem t = sys(3, {"s1", "s1 s1 s2", "s2"});
  CHECK(equal(coxeter(t, {1, 2}), parse_word("s1 s1 s1 s2", 3)));
  CHECK_THROWS_AS(coxeter(t, {2, 1}), std::invalid_argument);
  CHECK_THROWS_AS(coxeter(t, {1, 4}), std::invalid_argument);

  std::mt19937 rng(823);
  for (int t2 = 0; t2 < 60; ++t2) {
    int n = 2 + static_cast<int>(rng() % 4);
    BraidSystem s2 = testsupport::random_system(rng, 3, n, 4);
    int i = 1 + static_cast<int>(rng() % (n - 1));
    int sign = rng() % 2 ? 1 : -1;
    CHECK(equal(coxeter(s2), coxeter(act_generator(s2, i, sign))));
  }
}

TEST_CASE("reducible systems") {
  auto p = reducible_partition(sys(4, {"s1", "s3"}));
  REQUIRE(p.has_value());
  CHECK(p->first == std::vector<int>{1});
  CHECK(p->second == std::vector<int>{2});
  CHECK_FALSE(reducible_partition(sys(3, {"s1", "s2"})).has_value());
  CHECK_FALSE(reducible_partition(sys(3, {"s1", "s2 s2", "s1"})).has_value());
  // fully commuting entries: the witness groups the first component alone
  auto q = reducible_partition(sys(4, {"s1", "s3", "s1 s1"}));
  REQUIRE(q.has_value());
  CHECK(q->first == std::vector<int>{1});
  CHECK(q->second == std::vector<int>{2, 3});
  auto r = reducible_partition(sys(4, {"s1", "D^2", "s1 s2"}));
  REQUIRE(r.has_value());
  CHECK(r->first == std::vector<int>{1, 3});
  CHECK(r->second == std::vector<int>{2});
}

TEST_CASE("pure generators are pure") {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i <= n - 1; ++i) CHECK(permutation(pure_c(n, i)).is_identity());
    for (int r = 1; r <= n - 1; ++r)
      for (int s = r + 1; s <= n; ++s) CHECK(permutation(pure_band(n, r, s)).is_identity());
  }
  CHECK(pure_c(3, 1) == parse_word("s1 s1", 3));
  CHECK(pure_c(3, 2) == parse_word("s1^-1 s2 s2 s1", 3));
  CHECK(pure_band(3, 1, 2) == parse_word("s1 s1", 3));
}

TEST_CASE("orbit sizes from the literature") {
  OrbitResult r6 = orbit(sys(3, {"s1^-1", "s1 s1 s2"}), Subgroup::Full);
  REQUIRE(r6.outcome == OrbitResult::Outcome::Finite);
  CHECK(r6.size == 6);
  CHECK(r6.keys.size() == 6);
  CHECK(std::is_sorted(r6.keys.begin(), r6.keys.end()));

  OrbitResult r8 = orbit(sys(4, {"s1", "s2 s3"}), Subgroup::Full);
  REQUIRE(r8.outcome == OrbitResult::Outcome::Finite);
  CHECK(r8.size == 8);

  OrbitResult r27 = orbit(sys(3, {"s1", "s1", "s1", "s2"}), Subgroup::Pure);
  REQUIRE(r27.outcome == OrbitResult::Outcome::Finite);
  CHECK(r27.size == 27);
}

TEST_CASE("orbit size regressions") {
  // frozen values computed by this enumerator and kept as regressions
  OrbitResult full27 = orbit(sys(3, {"s1", "s1", "s1", "s2"}), Subgroup::Full);
  REQUIRE(full27.outcome == OrbitResult::Outcome::Finite);
  CHECK(full27.size == 27);  // the full orbit coincides with the pure one here
  CHECK(full27.size <= 648);

  OrbitResult ese = orbit(sys(3, {"s1", "s2", "s1"}), Subgroup::Full);
  REQUIRE(ese.outcome == OrbitResult::Outcome::Finite);
  CHECK(ese.size == 8);
  CHECK(ese.size <= 162);

  OrbitResult pair = orbit(sys(3, {"s1", "s2"}), Subgroup::Full);
  REQUIRE(pair.outcome == OrbitResult::Outcome::Finite);
  CHECK(pair.size == 3);
  CHECK(pair.size <= 6);
}

TEST_CASE("orbit invariants across vertices") {
  std::mt19937 rng(829);
  OrbitOptions opts;
  opts.cap = 200;
  int enumerated = 0;
  for (int t = 0; t < 40; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    BraidSystem s = testsupport::random_system(rng, 3, n, 2);
    std::vector<BraidSystem> visited;
    orbit_with_systems(s, Subgroup::Full, opts, &visited);
    if (visited.empty()) continue;
    ++enumerated;
    std::string cox = normal_form(coxeter(s)).serialize();
    std::multiset<long> esums;
    std::multiset<std::vector<int>> ctypes;
    for (const Word& w : s.entries()) {
      esums.insert(w.exponent_sum());
      ctypes.insert(permutation(w).cycle_type());
    }
    for (const BraidSystem& v : visited) {
      CHECK(normal_form(coxeter(v)).serialize() == cox);
      std::multiset<long> es;
      std::multiset<std::vector<int>> ct;
      for (const Word& w : v.entries()) {
        es.insert(w.exponent_sum());
        ct.insert(permutation(w).cycle_type());
      }
      CHECK(es == esums);
      CHECK(ct == ctypes);
    }
  }
  CHECK(enumerated > 0);
}

TEST_CASE("closed formulas for pure generator actions") {
  std::mt19937 rng(839);
  for (int t = 0; t < 60; ++t) {
    int n = 3 + static_cast<int>(rng() % 3);
    BraidSystem s = testsupport::random_system(rng, 3, n, 3);
    long k = static_cast<long>(rng() % 7) - 3;

    // s . c_i^k conjugates the two ends by (b_1 b_{i+1})^k and the middle by
    // (b_{i+1} b_1)^-k (b_1 b_{i+1})^k
    {
      int i = 1 + static_cast<int>(rng() % (n - 1));
      BraidSystem direct = act_word(s, pure_c(n, i).pow(k));
      Word outer = compose(s.entry(0), s.entry(i)).pow(k);
      Word inner = compose(compose(s.entry(i), s.entry(0)).pow(-k), outer);
      for (int e = 0; e < n; ++e) {
        Word expected = (e == 0 || e == i) ? conjugate(s.entry(e), outer)
                        : e < i            ? conjugate(s.entry(e), inner)
                                           : s.entry(e);
        CHECK(equal(direct.entry(e), expected));
      }
    }
    // s . (c_1 ... c_j)^k conjugates entries 1..j+1
    {
      int j = 1 + static_cast<int>(rng() % (n - 1));
      Word prod(n);
      for (int q = 1; q <= j; ++q) prod = compose(prod, pure_c(n, q));
      BraidSystem direct = act_word(s, prod.pow(k));
      std::vector<int> I;
      for (int q = 1; q <= j + 1; ++q) I.push_back(q);
      Word cox = coxeter(s, I);
      Word ck = cox.pow(k);
      Word inner = compose(compose(s.entry(0).inverse(), cox).pow(-k), ck);
      for (int e = 0; e < n; ++e) {
        Word expected = e == 0   ? conjugate(s.entry(e), ck)
                        : e <= j ? conjugate(s.entry(e), inner)
                                 : s.entry(e);
        CHECK(equal(direct.entry(e), expected));
      }
    }
    // a full twist of the block i..j conjugates those entries by the block
    // product
    {
      int i = 1 + static_cast<int>(rng() % (n - 1));
      int j = std::min(n, i + 1 + static_cast<int>(rng() % (n - i)));
      long p = static_cast<long>(rng() % 7) - 3;
      BraidSystem direct = act_word(s, block_half_twist(n, i, j).pow(2 * p));
      Word blockprod(3);
      for (int e = i; e <= j; ++e) blockprod = compose(blockprod, s.entry(e - 1));
      Word cp = blockprod.pow(p);
      for (int e = 0; e < n; ++e) {
        Word expected = (e + 1 >= i && e + 1 <= j) ? conjugate(s.entry(e), cp) : s.entry(e);
        CHECK(equal(direct.entry(e), expected));
      }
    }
  }
}

TEST_CASE("infiniteness certificates") {
  SUBCASE("reducible coxeter element with incompatible curves") {
    auto cert = infiniteness_certificate(sys(3, {"s1", "s2 s2", "s1"}));
    REQUIRE(cert.has_value());
    CHECK(cert->rule == "R2");
  }
  SUBCASE("five-entry system with no shared curve") {
    // The full product s1^4 s2 is cyclically conjugate to s1^2 s2 s1^2,
    // which commutes with the twist s2^2, so it is reducible rather than
    // pseudo-Anosov; the common-curve rule certifies infiniteness.
    CHECK(commutes(parse_word("s1 s1 s2 s1 s1", 3), parse_word("s2 s2", 3)));
    CHECK(classify(parse_word("s1 s1 s1 s1 s2", 3)).is(NTType::Reducible));
    auto cert = infiniteness_certificate(sys(3, {"s1", "s1", "s1", "s1", "s2"}));
    REQUIRE(cert.has_value());
    CHECK(cert->rule == "R2");
  }
  SUBCASE("pseudo-anosov coxeter element with reducible entry") {
    CHECK(classify(parse_word("s1 s2^-1 s1", 3)).is(NTType::PseudoAnosov));
    auto cert = infiniteness_certificate(sys(3, {"s1 s2^-1", "s1"}));
    REQUIRE(cert.has_value());
    CHECK(cert->rule == "R1");
  }
  SUBCASE("pseudo-anosov coxeter element with non-commuting entries") {
    auto cert = infiniteness_certificate(sys(3, {"s1 s2^-1", "s2^-1 s1"}));
    REQUIRE(cert.has_value());
    CHECK(cert->rule == "R1");
  }
  SUBCASE("commuting system has no certificate") {
    CHECK_FALSE(infiniteness_certificate(sys(4, {"s1", "s3"})).has_value());
  }
  SUBCASE("finite paper systems have no certificate") {
    CHECK_FALSE(infiniteness_certificate(sys(3, {"s1^-1", "s1 s1 s2"})).has_value());
    CHECK_FALSE(infiniteness_certificate(sys(3, {"s1", "s2", "s1"})).has_value());
    CHECK_FALSE(infiniteness_certificate(
                    sys(3, {"s1", "D^2 s1", "D^4 s1", "D^6 s2"}))
                    .has_value());
  }
  SUBCASE("exponent sum restriction") {
    auto cert = infiniteness_certificate(sys(3, {"s1", "s1^-1", "s2"}));
    REQUIRE(cert.has_value());
    CHECK(cert->rule == "R3");
  }
  SUBCASE("length fallback when classification is unavailable") {
    // with the summit search crippled, R1/R2 go inconclusive and the
    // irreducible length rule takes over
    ClassifyOptions crippled;
    crippled.sss_cap = 1;
    std::vector<std::string> log;
    auto cert =
        infiniteness_certificate(sys(3, {"s1", "s1", "s1", "s1", "s2"}), &log, crippled);
    REQUIRE(cert.has_value());
    CHECK(cert->rule == "R4");
    CHECK(!log.empty());
  }
  SUBCASE("orbit consults certificates before searching") {
    OrbitOptions opts;
    opts.cap = 10;  // tiny cap: would otherwise cap out
    OrbitResult r = orbit(sys(3, {"s1", "s2 s2", "s1"}), Subgroup::Full, opts);
    CHECK(r.outcome == OrbitResult::Outcome::ProvablyInfinite);
    REQUIRE(r.certificate.has_value());
    CHECK(r.certificate->rule == "R2");
  }
}

TEST_CASE("reducible system orbit inequality") {
  auto binom = [](long n, long k) {
    long r = 1;
    for (long t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
  };
  std::mt19937 rng(853);
  const char* parts[] = {"s1", "s1 s1", "s1^-1", "e", "D^2"};
  int checked = 0;
  for (int t = 0; t < 30; ++t) {
    int n = 2 + static_cast<int>(rng() % 2);
    std::vector<Word> entries;
    for (int q = 0; q < n; ++q) entries.push_back(parse_word(parts[rng() % 5], 3));
    BraidSystem s(3, entries);
    auto part = reducible_partition(s);
    if (!part) continue;
    OrbitOptions opts;
    opts.cap = 5000;
    OrbitResult whole = orbit(s, Subgroup::Full, opts);
    if (whole.outcome != OrbitResult::Outcome::Finite) continue;
    std::vector<Word> se, te;
    for (int i : part->first) se.push_back(s.entry(i - 1));
    for (int i : part->second) te.push_back(s.entry(i - 1));
    OrbitResult rs = orbit(BraidSystem(3, se), Subgroup::Full, opts);
    OrbitResult rt = orbit(BraidSystem(3, te), Subgroup::Full, opts);
    if (rs.outcome != OrbitResult::Outcome::Finite ||
        rt.outcome != OrbitResult::Outcome::Finite)
      continue;
    ++checked;
    long bound = binom(n, static_cast<long>(part->first.size())) *
                 static_cast<long>(rs.size) * static_cast<long>(rt.size);
    CHECK(static_cast<long>(whole.size) <= bound);
  }
  CHECK(checked > 0);
}

TEST_CASE("orbit caps and guards") {
  OrbitOptions opts;
  opts.cap = 5;
  OrbitResult tiny = orbit(sys(4, {"s1", "s3"}), Subgroup::Full, opts);
  CHECK(tiny.outcome == OrbitResult::Outcome::Finite);
  CHECK(tiny.size == 2);
  OrbitResult capped = orbit(sys(3, {"s1", "D^2 s1", "D^4 s1", "D^6 s2"}), Subgroup::Full, opts);
  CHECK(capped.outcome == OrbitResult::Outcome::CapExceeded);
  CHECK(capped.visited >= 5);
}

TEST_CASE("free subgroup orbits") {
  OrbitResult r = orbit(sys(3, {"s1", "s2", "s1"}), Subgroup::FreeF);
  REQUIRE(r.outcome == OrbitResult::Outcome::Finite);
  CHECK(r.size <= 9);
  CHECK_THROWS_AS(orbit(sys(3, {"s1", "s2"}), Subgroup::FreeF), std::invalid_argument);
}

TEST_CASE("length-1 systems are fixed points") {
  BraidSystem s(3, {parse_word("s1 s2", 3)});
  OrbitResult r = orbit(s, Subgroup::Full);
  REQUIRE(r.outcome == OrbitResult::Outcome::Finite);
  CHECK(r.size == 1);
  CHECK(equal(coxeter(s), parse_word("s1 s2", 3)));
  CHECK_FALSE(reducible_partition(s).has_value());
}
