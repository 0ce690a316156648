#ifndef BRAID_ORBITGRAPH_HPP
#define BRAID_ORBITGRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "braid/hurwitz.hpp"

namespace braid {

// Labeled orbit graph of the rank-two free group <c1, c2> acting on
// length-3 degree-3 systems.  Vertices are canonical system keys in sorted
// order; edge1/edge2 give the images under c1/c2 and are permutations of
// the vertex set.
struct OrbitGraph {
  std::vector<std::string> keys;
  std::vector<BraidSystem> systems;  // aligned with keys
  std::vector<int> edge1, edge2;
  bool complete = false;
  std::size_t visited = 0;
};

OrbitGraph build_orbit_graph(const BraidSystem& s, std::size_t cap = 100000);

struct LabeledTriangle {
  int label;
  std::vector<int> vertices;
  bool special;
};

struct GraphFeatures {
  std::vector<int> simple_vertices;        // fixed by c1 or c2
  std::vector<int> ipath_lengths_1;        // closed 1-path lengths present
  std::vector<int> ipath_lengths_2;
  std::vector<LabeledTriangle> triangles;  // closed i-paths of length 3
  std::vector<int> alternate_loop_length;  // per vertex, minimal (c1 c2)-loop length in edges
};

GraphFeatures graph_features(const OrbitGraph& g);

struct StructureCheck {
  std::string rule;
  bool pass;
  std::string witness;
};
struct StructureReport {
  std::vector<StructureCheck> checks;
  bool all_pass() const;
};

// The orbit-graph constraints satisfied by every irreducible finite-orbit
// system: i-path lengths, the alternate-loop laws, no fixed point of c1c2,
// and the residue-type specific laws.
StructureReport check_structure(const OrbitGraph& g);

enum class Pattern { A, B, C, D, E, Unknown };
Pattern classify_pattern(const OrbitGraph& g);
std::string pattern_name(Pattern p);

// Canonical invariant for label-preserving digraph isomorphism.
std::string canonical_graph_form(const OrbitGraph& g);

std::string to_dot(const OrbitGraph& g);
std::string feature_report(const OrbitGraph& g);

}  // namespace braid

#endif
