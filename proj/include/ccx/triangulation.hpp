#pragma once

#include <array>
#include <span>
#include <utility>
#include <vector>

#include "ccx/errors.hpp"

namespace ccx {

// Oriented face, stored with its minimum vertex first; (a,b,c) and (b,c,a)
// are the same face, (a,c,b) is its mirror.
using Face = std::array<int, 3>;

// Triangulation of a closed orientable surface, represented by a rotation
// system (cyclic neighbor order around every vertex). Immutable once built;
// all derived data (edges, faces, genus) is computed at construction.
class Triangulation {
 public:
  // Validates: simple, symmetric, connected, every traced face a triangle,
  // n >= 4. Face tracing rule: the directed edge u->v is followed by v->w
  // where w is the cyclic successor of u in the rotation of v.
  static Triangulation from_rotation_system(const std::vector<std::vector<int>>& rot);

  // Assembles the rotation system realizing the given oriented face set.
  // Each directed edge must appear in exactly one face. Throws
  // std::invalid_argument when the faces do not stitch into a surface.
  static Triangulation from_faces(int n, const std::vector<Face>& faces);

  int n() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  // Euler genus 2 - n + |E| - |F|; always even and nonnegative here.
  int euler_genus() const { return genus_; }

  int degree(int v) const { return off_[v + 1] - off_[v]; }
  std::span<const int> neighbors(int v) const {
    return {nbr_.data() + off_[v], static_cast<size_t>(degree(v))};
  }
  bool adjacent(int u, int v) const;

  const std::vector<Face>& faces() const { return faces_; }              // sorted
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }  // u<v, sorted

 private:
  Triangulation() = default;
  void finish_and_validate();

  int n_ = 0;
  std::vector<int> off_;  // n+1 offsets into nbr_
  std::vector<int> nbr_;  // rotations, flattened
  std::vector<std::pair<int, int>> edges_;
  std::vector<Face> faces_;
  int genus_ = 0;
};

// Same surface with reversed orientation (every rotation reversed).
Triangulation mirrored(const Triangulation& t);

int class_degree_sum(const Triangulation& t, std::span<const int> vertices);

}  // namespace ccx
