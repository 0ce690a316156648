#include "braid/orbitgraph.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "braid/check.hpp"
#include "braid/garside.hpp"

namespace braid {

OrbitGraph build_orbit_graph(const BraidSystem& s, std::size_t cap) {
  if (s.degree() != 3 || s.length() != 3)
    throw std::invalid_argument("orbit graph requires a degree-3 length-3 system");
  if (cap == 0) throw std::invalid_argument("orbit graph cap must be positive");
  const Word c1 = pure_c(3, 1), c2 = pure_c(3, 2);
  const Word gens[4] = {c1, c1.inverse(), c2, c2.inverse()};

  std::map<std::string, BraidSystem> found;
  std::deque<std::string> queue;
  found.emplace(s.key(), s);
  queue.push_back(s.key());
  bool complete = true;
  while (!queue.empty()) {
    BraidSystem cur = found.at(queue.front());
    queue.pop_front();
    for (const Word& g : gens) {
      BraidSystem next = act_word(cur, g);
      if (found.count(next.key())) continue;
      if (found.size() >= cap) {
        complete = false;
        queue.clear();
        break;
      }
      queue.push_back(next.key());
      found.emplace(next.key(), std::move(next));
    }
  }

  OrbitGraph g;
  g.complete = complete;
  g.visited = found.size();
  if (!complete) return g;
  for (auto& [k, sys] : found) {
    g.keys.push_back(k);
    g.systems.push_back(sys);
  }
  auto index_of = [&](const std::string& k) {
    return static_cast<int>(std::lower_bound(g.keys.begin(), g.keys.end(), k) - g.keys.begin());
  };
  g.edge1.resize(g.keys.size());
  g.edge2.resize(g.keys.size());
  for (std::size_t v = 0; v < g.systems.size(); ++v) {
    g.edge1[v] = index_of(act_word(g.systems[v], c1).key());
    g.edge2[v] = index_of(act_word(g.systems[v], c2).key());
  }
  // both edge maps are bijections of the closed orbit
  for (const auto* e : {&g.edge1, &g.edge2}) {
    std::vector<bool> hit(g.keys.size(), false);
    for (int t : *e) {
      BRAID_CHECK(!hit[static_cast<std::size_t>(t)], "orbit edge map is not a bijection");
      hit[static_cast<std::size_t>(t)] = true;
    }
  }
  return g;
}

namespace {

std::vector<std::vector<int>> cycles_of(const std::vector<int>& edge) {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(edge.size(), false);
  for (std::size_t v = 0; v < edge.size(); ++v) {
    if (seen[v]) continue;
    std::vector<int> cyc;
    int x = static_cast<int>(v);
    while (!seen[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      cyc.push_back(x);
      x = edge[static_cast<std::size_t>(x)];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

int alt_loop_length(const OrbitGraph& g, int v) {
  int x = v;
  for (int t = 1; t <= static_cast<int>(g.keys.size()) + 1; ++t) {
    x = g.edge2[static_cast<std::size_t>(g.edge1[static_cast<std::size_t>(x)])];
    if (x == v) return 2 * t;
  }
  return -1;
}

}  // namespace

GraphFeatures graph_features(const OrbitGraph& g) {
  GraphFeatures f;
  std::vector<bool> simple(g.keys.size(), false);
  for (std::size_t v = 0; v < g.keys.size(); ++v) {
    int vi = static_cast<int>(v);
    if (g.edge1[v] == vi || g.edge2[v] == vi) {
      simple[v] = true;
      f.simple_vertices.push_back(vi);
    }
  }
  std::set<int> l1, l2;
  for (int label = 1; label <= 2; ++label) {
    const auto& edge = label == 1 ? g.edge1 : g.edge2;
    for (const auto& cyc : cycles_of(edge)) {
      (label == 1 ? l1 : l2).insert(static_cast<int>(cyc.size()));
      if (cyc.size() == 3) {
        bool special = !simple[static_cast<std::size_t>(cyc[0])] &&
                       !simple[static_cast<std::size_t>(cyc[1])] &&
                       !simple[static_cast<std::size_t>(cyc[2])];
        f.triangles.push_back(LabeledTriangle{label, cyc, special});
      }
    }
  }
  f.ipath_lengths_1.assign(l1.begin(), l1.end());
  f.ipath_lengths_2.assign(l2.begin(), l2.end());
  for (std::size_t v = 0; v < g.keys.size(); ++v)
    f.alternate_loop_length.push_back(alt_loop_length(g, static_cast<int>(v)));
  return f;
}

bool StructureReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

namespace {

long mod6(long e) { return ((e % 6) + 6) % 6; }

// Residue type of the pair sums: 3 mod 6 gives short (period-2) closed
// paths for that label, +-2 mod 6 gives triangles.
int label_period(long pair_sum) {
  long r = mod6(pair_sum);
  if (r == 3) return 2;
  if (r == 2 || r == 4) return 3;
  return 0;  // outside the finite-orbit residue classes
}

}  // namespace

StructureReport check_structure(const OrbitGraph& g) {
  StructureReport rep;
  if (!g.complete) {
    rep.checks.push_back({"complete-graph", false, "orbit construction hit the cap"});
    return rep;
  }
  const int n = static_cast<int>(g.keys.size());
  GraphFeatures f = graph_features(g);

  auto add = [&](const std::string& rule, bool pass, const std::string& wit) {
    rep.checks.push_back({rule, pass, pass ? "" : wit});
  };

  for (int label = 1; label <= 2; ++label) {
    const auto& lens = label == 1 ? f.ipath_lengths_1 : f.ipath_lengths_2;
    bool ok_len = true;
    for (int L : lens)
      if (L > 3) ok_len = false;
    add("i-path-length-at-most-3 (label " + std::to_string(label) + ")", ok_len,
        "cycle longer than 3 present");
    bool has2 = std::find(lens.begin(), lens.end(), 2) != lens.end();
    bool has3 = std::find(lens.begin(), lens.end(), 3) != lens.end();
    add("no-coexisting-2-and-3-paths (label " + std::to_string(label) + ")", !(has2 && has3),
        "lengths 2 and 3 both present");
  }

  {
    bool ok = true;
    int bad = -1;
    for (int v = 0; v < n; ++v) {
      int L = f.alternate_loop_length[static_cast<std::size_t>(v)];
      if (L < 0 || 12 % L != 0) {
        ok = false;
        bad = v;
        break;
      }
    }
    add("alternate-path-of-length-12-is-loop", ok, "vertex v" + std::to_string(bad));
  }
  {
    bool ok = true;
    int bad = -1;
    for (int v = 0; v < n; ++v)
      if (f.alternate_loop_length[static_cast<std::size_t>(v)] == 2) {
        ok = false;
        bad = v;
        break;
      }
    add("no-fixed-point-of-c1c2 (F1)", ok, "vertex v" + std::to_string(bad));
  }

  const BraidSystem& s0 = g.systems.front();
  long e1 = s0.entry(0).exponent_sum();
  long e2 = s0.entry(1).exponent_sum();
  long e3 = s0.entry(2).exponent_sum();
  int p1 = label_period(e1 + e2);
  int p2 = label_period(e1 + e3);

  if (p1 == 2 && p2 == 2) {
    bool ok = true;
    int bad = -1;
    for (int v = 0; v < n; ++v) {
      int L = f.alternate_loop_length[static_cast<std::size_t>(v)];
      if (6 % L != 0) {
        ok = false;
        bad = v;
        break;
      }
    }
    add("(2,2): alternate-path-of-length-6-is-loop", ok, "vertex v" + std::to_string(bad));
  }
  if ((p1 == 2 && p2 == 3) || (p1 == 3 && p2 == 2)) {
    bool ok = true;
    int bad = -1;
    for (int v = 0; v < n; ++v) {
      int x = g.edge2[static_cast<std::size_t>(g.edge1[static_cast<std::size_t>(v)])];
      x = g.edge2[static_cast<std::size_t>(g.edge1[static_cast<std::size_t>(x)])];
      if (x == v) {
        ok = false;
        bad = v;
        break;
      }
    }
    add("(2,3): no-fixed-point-of-(c1c2)^2", ok, "vertex v" + std::to_string(bad));
  }
  if (p1 == 3 && p2 == 3) {
    bool resid_ok = mod6(e1) % 2 == 1 && mod6(e2) % 2 == 1 && mod6(e3) % 2 == 1 &&
                    mod6(e1) != 3 && mod6(e2) != 3 && mod6(e3) != 3;
    add("(3,3): entry-exponents-are-+-1-mod-6", resid_ok, "entry exponent sums " +
            std::to_string(e1) + "," + std::to_string(e2) + "," + std::to_string(e3));
    bool ok = true;
    int bad = -1;
    for (int v = 0; v < n; ++v) {
      int x = v;
      for (int t = 0; t < 3; ++t)
        x = g.edge2[static_cast<std::size_t>(g.edge1[static_cast<std::size_t>(x)])];
      bool sv = g.edge1[static_cast<std::size_t>(v)] == v || g.edge2[static_cast<std::size_t>(v)] == v;
      bool sx = g.edge1[static_cast<std::size_t>(x)] == x || g.edge2[static_cast<std::size_t>(x)] == x;
      if (sv != sx) {
        ok = false;
        bad = v;
        break;
      }
    }
    add("(3,3): (c1c2)^3-preserves-simplicity", ok, "vertex v" + std::to_string(bad));
  }
  // The remaining forbidden subgraphs (F2)-(F4) are figure-only shapes with
  // no textual description; they are not checked here.
  return rep;
}

std::string canonical_graph_form(const OrbitGraph& g) {
  const int n = static_cast<int>(g.keys.size());
  std::string best;
  for (int start = 0; start < n; ++start) {
    std::vector<int> name(static_cast<std::size_t>(n), -1);
    std::vector<int> order;
    name[static_cast<std::size_t>(start)] = 0;
    order.push_back(start);
    for (std::size_t t = 0; t < order.size(); ++t) {
      for (const auto* e : {&g.edge1, &g.edge2}) {
        int w = (*e)[static_cast<std::size_t>(order[t])];
        if (name[static_cast<std::size_t>(w)] < 0) {
          name[static_cast<std::size_t>(w)] = static_cast<int>(order.size());
          order.push_back(w);
        }
      }
    }
    if (static_cast<int>(order.size()) != n) continue;  // forward maps span the orbit
    std::string sig;
    for (int v : order) {
      sig += std::to_string(name[static_cast<std::size_t>(g.edge1[static_cast<std::size_t>(v)])]);
      sig += ',';
      sig += std::to_string(name[static_cast<std::size_t>(g.edge2[static_cast<std::size_t>(v)])]);
      sig += ';';
    }
    if (best.empty() || sig < best) best = sig;
  }
  return std::to_string(n) + "|" + best;
}

namespace {

const std::vector<std::pair<Pattern, const char*>>& pattern_exemplars() {
  static const std::vector<std::pair<Pattern, const char*>> ex = {
      {Pattern::A, "s1 s1 / s1 / s2"},
      {Pattern::B, "s1 s2 / s1 / s2"},
      {Pattern::C, "s2 / s1 s2 / s1"},
      {Pattern::D, "s1 / s1 s1 / s2"},
      {Pattern::E, "s1 / s2 / s1"},
  };
  return ex;
}

BraidSystem parse_exemplar(const char* text) {
  std::string s(text);
  std::vector<Word> entries;
  std::size_t pos = 0;
  while (true) {
    std::size_t bar = s.find('/', pos);
    std::string part = s.substr(pos, bar == std::string::npos ? std::string::npos : bar - pos);
    entries.push_back(parse_word(part, 3));
    if (bar == std::string::npos) break;
    pos = bar + 1;
  }
  return BraidSystem(3, std::move(entries));
}

}  // namespace

Pattern classify_pattern(const OrbitGraph& g) {
  if (!g.complete || g.keys.empty()) return Pattern::Unknown;
  static std::vector<std::pair<Pattern, std::string>> reference = [] {
    std::vector<std::pair<Pattern, std::string>> out;
    for (const auto& [p, text] : pattern_exemplars()) {
      OrbitGraph eg = build_orbit_graph(parse_exemplar(text), 1000);
      BRAID_CHECK(eg.complete, "pattern exemplar orbit must be finite");
      out.emplace_back(p, canonical_graph_form(eg));
    }
    return out;
  }();
  std::string form = canonical_graph_form(g);
  for (const auto& [p, ref] : reference)
    if (ref == form) return p;
  return Pattern::Unknown;
}

std::string pattern_name(Pattern p) {
  switch (p) {
    case Pattern::A: return "A";
    case Pattern::B: return "B";
    case Pattern::C: return "C";
    case Pattern::D: return "D";
    case Pattern::E: return "E";
    default: return "Unknown";
  }
}

std::string to_dot(const OrbitGraph& g) {
  std::string out = "digraph orbit {\n";
  for (std::size_t v = 0; v < g.keys.size(); ++v)
    out += "  v" + std::to_string(v) + " [label=\"" + g.keys[v] + "\"];\n";
  for (std::size_t v = 0; v < g.keys.size(); ++v) {
    out += "  v" + std::to_string(v) + " -> v" + std::to_string(g.edge1[v]) + " [label=\"1\"];\n";
    out += "  v" + std::to_string(v) + " -> v" + std::to_string(g.edge2[v]) + " [label=\"2\"];\n";
  }
  out += "}\n";
  return out;
}

namespace {

std::string join_ints(const std::vector<int>& v) {
  std::string s;
  for (std::size_t t = 0; t < v.size(); ++t) {
    if (t) s += ',';
    s += std::to_string(v[t]);
  }
  return s;
}

}  // namespace

std::string feature_report(const OrbitGraph& g) {
  GraphFeatures f = graph_features(g);
  std::string out;
  out += "vertices=" + std::to_string(g.keys.size()) + "\n";
  out += "simple_vertices=" + join_ints(f.simple_vertices) + "\n";
  out += "i_path_lengths_1=" + join_ints(f.ipath_lengths_1) + "\n";
  out += "i_path_lengths_2=" + join_ints(f.ipath_lengths_2) + "\n";
  std::string tri, stri;
  for (const auto& t : f.triangles) {
    std::string item = "(" + std::to_string(t.label) + ":" + join_ints(t.vertices) + ")";
    tri += tri.empty() ? item : " " + item;
    if (t.special) stri += stri.empty() ? item : " " + item;
  }
  out += "triangles=" + tri + "\n";
  out += "special_triangles=" + stri + "\n";
  std::set<int> lens(f.alternate_loop_length.begin(), f.alternate_loop_length.end());
  out += "alternate_loop_length=" + join_ints(std::vector<int>(lens.begin(), lens.end())) + "\n";
  out += "pattern=" + pattern_name(classify_pattern(g)) + "\n";
  return out;
}

}  // namespace braid
