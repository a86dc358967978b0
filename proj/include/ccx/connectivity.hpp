#pragma once

#include "ccx/triangulation.hpp"

namespace ccx {

// Vertex connectivity by exhaustive search over small cut sets, capped:
// returns min(cap, kappa). cap must lie in 1..6; the graphs we scan are
// small enough that subsets up to size 5 stay cheap.
int vertex_connectivity(const Triangulation& t, int cap);

}  // namespace ccx
