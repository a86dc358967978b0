#pragma once

#include <compare>
#include <string>

#include "ccx/triangulation.hpp"

namespace ccx {

// Canonical form of the embedded graph: the lexicographically minimal byte
// string over all starting directed edges and both orientations of a BFS
// traversal of the map. Equal codes iff the maps are isomorphic (reflections
// identified); for sphere triangulations this coincides with graph
// isomorphism.
struct CanonicalCode {
  std::string bytes;

  auto operator<=>(const CanonicalCode&) const = default;
  std::string hex() const;
};

CanonicalCode canonical_code(const Triangulation& t);

}  // namespace ccx
