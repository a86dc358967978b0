#pragma once

#include <unordered_set>
#include <vector>

#include "ccx/canonical.hpp"
#include "ccx/triangulation.hpp"

namespace ccx {

// Diagonal flip of edge (u,v): replace it by the opposite diagonal of the
// two incident triangles. NonFlippable when the quad is degenerate or the
// new diagonal already exists.
Triangulation flip_edge(const Triangulation& t, int u, int v);

// Isomorphism-class membership set keyed by canonical code.
struct SeenSet {
  std::unordered_set<std::string> codes;
  bool insert(const CanonicalCode& c) { return codes.insert(c.bytes).second; }
  bool contains(const CanonicalCode& c) const { return codes.count(c.bytes) > 0; }
  size_t size() const { return codes.size(); }
};

// All sphere triangulations on n vertices (4 <= n <= 14), one per
// isomorphism class, sorted by canonical code: breadth-first closure of the
// stacked tetrahedron under diagonal flips.
std::vector<Triangulation> enumerate_triangulations(int n);

}  // namespace ccx
