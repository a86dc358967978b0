#pragma once

#include <array>
#include <string>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "ccx/coloring.hpp"
#include "ccx/triangulation.hpp"

namespace ccx {

// The coloring complex of a triangulation: one node per distinct color
// class, one 4-clique per coloring. An uncolorable graph yields the empty
// complex (no error; exports mark it explicitly).
struct ColoringComplex {
  int graph_n = 0;
  std::vector<std::vector<int>> classes;     // deduplicated, each sorted
  std::vector<std::array<int, 4>> cliques;   // per coloring, sorted class ids
  std::vector<Coloring> colorings;           // aligned with cliques

  bool empty() const { return cliques.empty(); }
  int num_classes() const { return static_cast<int>(classes.size()); }
  int num_colorings() const { return static_cast<int>(cliques.size()); }
  std::vector<std::pair<int, int>> edges() const;  // dedup, sorted
};

ColoringComplex build_complex(const Triangulation& t);
ColoringComplex build_complex(const Triangulation& t, std::vector<Coloring> colorings);

struct Component {
  std::vector<int> class_ids;     // sorted
  std::vector<int> coloring_ids;  // sorted
  Parity parity;
};

// Connected components; verifies that parity is constant on each component.
std::vector<Component> components(const Triangulation& t, const ColoringComplex& b);

// Order-free summary: parity counts plus the sorted multiset of
// (coloring count, class count, parity) over components.
struct Signature {
  int even_components = 0;
  int odd_components = 0;
  std::vector<std::tuple<int, int, Parity>> component_summary;

  bool operator==(const Signature&) const = default;
};

Signature signature(const Triangulation& t, const ColoringComplex& b);
Signature signature_of(const std::vector<Component>& comps);

// Equivalence classes of colorings under Kempe changes (any class pair, any
// chain subset). Returned as sorted lists of indices into `colorings`.
std::vector<std::vector<int>> kempe_classes(const Triangulation& t, const std::vector<Coloring>& colorings);

std::string export_complex_dot(const Triangulation& t, const ColoringComplex& b);
nlohmann::ordered_json export_complex_json(const Triangulation& t, const ColoringComplex& b);
Signature signature_from_json(const nlohmann::json& doc);

}  // namespace ccx
