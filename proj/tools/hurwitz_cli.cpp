#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "braid/dual3.hpp"
#include "braid/garside.hpp"
#include "braid/hurwitz.hpp"
#include "braid/nthurston.hpp"
#include "braid/orbitgraph.hpp"
#include "braid/verify.hpp"
#include "braid/word.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCapExceeded = 3;

std::size_t default_cap() {
  if (const char* env = std::getenv("HURWITZ_CAP")) {
    char* end = nullptr;
    unsigned long v = std::strtoul(env, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 100000;
}

braid::BraidSystem make_system(int degree, const std::vector<std::string>& words) {
  std::vector<braid::Word> entries;
  for (const std::string& w : words) entries.push_back(braid::parse_word(w, degree));
  return braid::BraidSystem(degree, std::move(entries));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hurwitz actions on braid systems: normal forms, classification, orbits"};
  app.require_subcommand(1);

  int degree = 3;
  std::size_t cap = default_cap();
  std::string subgroup_name = "full";
  std::string dot_path;
  std::string first_word;
  std::vector<std::string> system_words;
  bool expect_finite = false;

  auto* nf_cmd = app.add_subcommand("nf", "left-weighted Garside normal form of a word");
  nf_cmd->add_option("--degree", degree, "number of strands")->required();
  nf_cmd->add_option("word", first_word, "braid word")->required();

  auto* dual_cmd = app.add_subcommand("dual-nf", "band-generator normal form (degree 3)");
  dual_cmd->add_option("word", first_word, "braid word")->required();

  auto* cls_cmd = app.add_subcommand("classify", "Nielsen-Thurston type of a braid word");
  cls_cmd->add_option("--degree", degree, "number of strands")->required();
  cls_cmd->add_option("word", first_word, "braid word")->required();

  auto* orbit_cmd = app.add_subcommand("orbit", "Hurwitz orbit closure of a braid system");
  orbit_cmd->add_option("--degree", degree, "degree of the entries")->required();
  orbit_cmd->add_option("--cap", cap, "visited-systems cap");
  orbit_cmd->add_option("--subgroup", subgroup_name, "full|pure|free")
      ->check(CLI::IsMember({"full", "pure", "free"}));
  orbit_cmd->add_flag("--expect-finite", expect_finite,
                      "exit nonzero unless the orbit is enumerated as finite");
  orbit_cmd->add_option("words", system_words, "one quoted word per entry")->required();

  auto* graph_cmd = app.add_subcommand("orbit-graph", "orbit graph of the <c1,c2> action");
  graph_cmd->add_option("--degree", degree, "degree (must be 3)")->required();
  graph_cmd->add_option("--cap", cap, "visited-systems cap");
  graph_cmd->add_option("--dot", dot_path, "write DOT output to this file");
  graph_cmd->add_option("words", system_words, "three quoted words")->required();

  auto* verify_cmd = app.add_subcommand("verify-paper", "run the theorem instance corpus");
  bool skip_slow = false;
  verify_cmd->add_flag("--skip-slow", skip_slow, "skip the largest orbit computation");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*nf_cmd) {
      std::cout << braid::normal_form(braid::parse_word(first_word, degree)).serialize() << "\n";
      return kExitOk;
    }
    if (*dual_cmd) {
      std::cout << braid::dual_nf(braid::parse_word(first_word, 3)).serialize() << "\n";
      return kExitOk;
    }
    if (*cls_cmd) {
      braid::ClassifyResult r = braid::classify(braid::parse_word(first_word, degree));
      std::cout << braid::nt_token(r) << "\n";
      if (!r.type) {
        std::cerr << r.note << "\n";
        return kExitCapExceeded;
      }
      return kExitOk;
    }
    if (*orbit_cmd) {
      braid::Subgroup g = subgroup_name == "full"   ? braid::Subgroup::Full
                          : subgroup_name == "pure" ? braid::Subgroup::Pure
                                                    : braid::Subgroup::FreeF;
      braid::BraidSystem s = make_system(degree, system_words);
      braid::OrbitOptions opts;
      opts.cap = cap;
      braid::OrbitResult r = braid::orbit(s, g, opts);
      switch (r.outcome) {
        case braid::OrbitResult::Outcome::Finite:
          std::cout << "outcome=finite\nsize=" << r.size << "\n";
          break;
        case braid::OrbitResult::Outcome::CapExceeded:
          std::cout << "outcome=cap-exceeded\nvisited=" << r.visited << "\n";
          break;
        case braid::OrbitResult::Outcome::ProvablyInfinite:
          std::cout << "outcome=provably-infinite\nrule=" << r.certificate->rule
                    << "\nwitness=" << r.certificate->witness << "\n";
          break;
      }
      std::cout << "generator_set=" << braid::subgroup_name(g) << "\ncap=" << cap << "\n";
      for (const std::string& k : r.keys) std::cout << "vertex=" << k << "\n";
      if (r.outcome == braid::OrbitResult::Outcome::CapExceeded) return kExitCapExceeded;
      if (expect_finite && r.outcome != braid::OrbitResult::Outcome::Finite)
        return kExitViolation;
      return kExitOk;
    }
    if (*graph_cmd) {
      if (degree != 3) {
        std::cerr << "orbit-graph requires --degree 3\n";
        return kExitUsage;
      }
      braid::BraidSystem s = make_system(3, system_words);
      braid::OrbitGraph g = braid::build_orbit_graph(s, cap);
      if (!g.complete) {
        std::cerr << "orbit graph incomplete: cap exceeded after " << g.visited << " systems\n";
        return kExitCapExceeded;
      }
      std::string dot = braid::to_dot(g);
      if (!dot_path.empty()) {
        std::ofstream out(dot_path);
        if (!out) {
          std::cerr << "cannot open " << dot_path << "\n";
          return kExitUsage;
        }
        out << dot;
      } else {
        std::cout << dot;
      }
      std::cout << braid::feature_report(g);
      braid::StructureReport rep = braid::check_structure(g);
      for (const auto& c : rep.checks)
        std::cout << "check=" << c.rule << " " << (c.pass ? "pass" : "FAIL " + c.witness) << "\n";
      return rep.all_pass() ? kExitOk : kExitViolation;
    }
    if (*verify_cmd) {
      bool ok = true;
      for (const braid::TheoremReport& r : braid::verify_paper_corpus(!skip_slow)) {
        std::cout << braid::render_report(r) << "\n";
        ok = ok && r.ok();
      }
      return ok ? kExitOk : kExitViolation;
    }
  } catch (const braid::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return kExitUsage;
}
