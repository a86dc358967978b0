#include "ccx/enumerate.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "ccx/constructions.hpp"

namespace ccx {

Triangulation flip_edge(const Triangulation& t, int u, int v) {
  if (u < 0 || u >= t.n() || v < 0 || v >= t.n() || !t.adjacent(u, v))
    fail(ErrorKind::OutOfRange, "not an edge: (" + std::to_string(u) + "," + std::to_string(v) + ")");
  // third vertices of the faces on either side of u-v
  int x = -1, y = -1, fi_uv = -1, fi_vu = -1;
  for (int i = 0; i < t.num_faces(); ++i) {
    const Face& f = t.faces()[i];
    for (int s = 0; s < 3; ++s) {
      if (f[s] == u && f[(s + 1) % 3] == v) {
        x = f[(s + 2) % 3];
        fi_uv = i;
      }
      if (f[s] == v && f[(s + 1) % 3] == u) {
        y = f[(s + 2) % 3];
        fi_vu = i;
      }
    }
  }
  if (x == y) fail(ErrorKind::NonFlippable, "degenerate quad around the edge");
  if (t.adjacent(x, y)) fail(ErrorKind::NonFlippable, "replacement diagonal already present");
  std::vector<Face> fs;
  fs.reserve(t.num_faces());
  for (int i = 0; i < t.num_faces(); ++i)
    if (i != fi_uv && i != fi_vu) fs.push_back(t.faces()[i]);
  fs.push_back({u, y, x});
  fs.push_back({v, x, y});
  return Triangulation::from_faces(t.n(), fs);
}

std::vector<Triangulation> enumerate_triangulations(int n) {
  if (n < 4 || n > 14) fail(ErrorKind::OutOfRange, "supported range is 4..14 vertices");
  Triangulation seed = builtin("k4");
  while (seed.n() < n) seed = stack_vertex(seed, 0);

  std::map<std::string, Triangulation> out;  // canonical code -> representative
  SeenSet seen;
  CanonicalCode c0 = canonical_code(seed);
  seen.insert(c0);
  out.emplace(c0.bytes, seed);
  std::vector<const Triangulation*> frontier{&out.at(c0.bytes)};

  while (!frontier.empty()) {
    // expand one level; results gathered per frontier graph, merged in order
    std::vector<std::vector<std::pair<CanonicalCode, Triangulation>>> found(frontier.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (size_t i = 0; i < frontier.size(); ++i) {
      const Triangulation& t = *frontier[i];
      for (auto [u, v] : t.edges()) {
        try {
          Triangulation t2 = flip_edge(t, u, v);
          found[i].emplace_back(canonical_code(t2), std::move(t2));
        } catch (const GraphError& e) {
          if (e.kind() != ErrorKind::NonFlippable) throw;
        }
      }
    }
    std::vector<std::string> fresh;
    for (auto& batch : found)
      for (auto& [code, t2] : batch)
        if (seen.insert(code)) {
          fresh.push_back(code.bytes);
          out.emplace(code.bytes, std::move(t2));
        }
    frontier.clear();
    for (const std::string& code : fresh) frontier.push_back(&out.at(code));
  }

  std::vector<Triangulation> result;
  result.reserve(out.size());
  for (auto& [code, t] : out) result.push_back(std::move(t));
  return result;
}

}  // namespace ccx
