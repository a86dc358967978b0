#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "ccx/triangulation.hpp"

namespace ccx {

enum class Parity { Even, Odd };

inline const char* to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

// Proper 4-coloring as an unordered partition into color classes. Stored in
// canonical form: classes are numbered by first appearance along the vertex
// order, so two partitions are equal iff their assignment vectors are equal.
// Colorings produced by enumerate_colorings always use four nonempty
// classes; a Kempe change can drain a singleton class, leaving a partition
// with three classes (four_classes() distinguishes the two).
class Coloring {
 public:
  explicit Coloring(std::vector<uint8_t> colors);

  int n() const { return static_cast<int>(color_.size()); }
  uint8_t color_of(int v) const { return color_[v]; }
  const std::vector<uint8_t>& assignment() const { return color_; }
  int class_size(int c) const { return size_[c]; }
  int classes_used() const;
  bool four_classes() const { return size_[3] > 0; }
  std::vector<int> class_vertices(int c) const;
  std::array<std::vector<int>, 4> classes() const;

  auto operator<=>(const Coloring&) const = default;

 private:
  std::vector<uint8_t> color_;
  std::array<int, 4> size_{};
};

// All proper 4-colorings of t with four nonempty classes, each partition
// exactly once, sorted by assignment vector. Enumeration pins the first
// face's vertices to classes 0,1,2 which already selects one labeled
// representative per partition.
std::vector<Coloring> enumerate_colorings(const Triangulation& t);

bool is_proper(const Triangulation& t, const Coloring& f);

// Kempe chains between classes x and y: the connected components of the
// subgraph induced on the union of the two classes.
struct KempeChainSet {
  int x, y;
  std::vector<std::vector<int>> chains;  // each sorted; list sorted by min vertex
  int edge_count;                        // e(x,y)
  int p() const { return static_cast<int>(chains.size()); }
};

KempeChainSet kempe_chains(const Triangulation& t, const Coloring& f, int x, int y);

// Swap the two colors on the selected chains. Any selection yields a proper
// coloring; selecting all chains (or none) reproduces the partition.
Coloring kempe_change(const Coloring& f, const KempeChainSet& chains, std::span<const int> selected);

// Chain-count functional evaluated at class x against the other three
// classes: sum of chain counts through x minus the chain counts among the
// rest. Sphere triangulations only.
int j_kempe(const Triangulation& t, const Coloring& f, int x);

// Degree form of the same functional: 2|X| - deg(X) + n - 3 + g.
int j_formula(const Triangulation& t, const Coloring& f, int x);

// Parity of the functional; independent of the class chosen.
Parity parity(const Triangulation& t, const Coloring& f);

// Degree of the coloring as a simplicial map onto the tetrahedron: signed
// count of faces landing on one fixed target triangle. Independent of the
// triangle; the default uses color triple {1,2,3}.
int homology_degree(const Triangulation& t, const Coloring& f);
int homology_degree_on_triple(const Triangulation& t, const Coloring& f, int i, int j, int l);

}  // namespace ccx
