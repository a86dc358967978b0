#pragma once

#include <array>
#include <string>

#include "ccx/triangulation.hpp"

namespace ccx {

// Vertex ids of the nested rings in the q_k family: ring i holds
// (a,b,c,d) = 4i .. 4i+3 for i = 0..k+1.
struct RingLabeling {
  int k = 0;
  int a(int i) const { return 4 * i; }
  int b(int i) const { return 4 * i + 1; }
  int c(int i) const { return 4 * i + 2; }
  int d(int i) const { return 4 * i + 3; }
  int rings() const { return k + 2; }
};

struct RingedTriangulation {
  Triangulation t;
  RingLabeling rings;
};

// Sphere triangulation on k+2 nested 4-rings: consecutive rings are joined
// by an antiprism-like band (verticals plus one fixed-chirality diagonal per
// band quad), and both end rings are capped by an a-c diagonal.
RingedTriangulation q_k(int k);

// Same family with the outer cap rotated: the last ring is capped by its
// b-d diagonal instead.
RingedTriangulation q_k_prime(int k);

// Glue g and h along one face each, identifying faceH's vertices with
// corr[0..2] (a permutation of faceG's vertices). The identified triangle
// stays an edge cycle but is no longer a face.
Triangulation triangle_sum(const Triangulation& g, int face_g, const Triangulation& h, int face_h,
                           const std::array<int, 3>& corr);

// Subdivide a face with one new vertex of degree 3 (the new vertex gets id n).
Triangulation stack_vertex(const Triangulation& t, int face);

// Named examples: k4, octahedron, icosahedron, example1 (= q_k(1)),
// example2 (= q_k_prime(1)), torus_grid:P,Q (e.g. "torus_grid:4,4").
Triangulation builtin(const std::string& name);

Triangulation torus_grid(int p, int q);

}  // namespace ccx
