#include "ccx/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace ccx {

namespace {

struct UnionFind {
  std::vector<int> up;
  explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
  int find(int v) {
    while (up[v] != v) v = up[v] = up[up[v]];
    return v;
  }
  void unite(int a, int b) { up[find(a)] = find(b); }
};

}  // namespace

std::vector<std::pair<int, int>> ColoringComplex::edges() const {
  std::set<std::pair<int, int>> es;
  for (const auto& q : cliques)
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) es.emplace(std::min(q[i], q[j]), std::max(q[i], q[j]));
  return {es.begin(), es.end()};
}

ColoringComplex build_complex(const Triangulation& t) {
  return build_complex(t, enumerate_colorings(t));
}

ColoringComplex build_complex(const Triangulation& t, std::vector<Coloring> colorings) {
  ColoringComplex b;
  b.graph_n = t.n();
  std::map<std::vector<int>, int> class_id;
  for (const Coloring& f : colorings) {
    std::array<int, 4> q{};
    for (int c = 0; c < 4; ++c) {
      auto verts = f.class_vertices(c);
      auto [it, fresh] = class_id.emplace(std::move(verts), b.num_classes());
      if (fresh) b.classes.push_back(it->first);
      q[c] = it->second;
    }
    std::sort(q.begin(), q.end());
    b.cliques.push_back(q);
  }
  b.colorings = std::move(colorings);
  return b;
}

std::vector<Component> components(const Triangulation& t, const ColoringComplex& b) {
  UnionFind uf(b.num_classes());
  for (const auto& q : b.cliques)
    for (int i = 1; i < 4; ++i) uf.unite(q[0], q[i]);

  std::map<int, int> comp_of_root;
  std::vector<Component> out;
  for (int c = 0; c < b.num_classes(); ++c) {
    int r = uf.find(c);
    auto [it, fresh] = comp_of_root.emplace(r, static_cast<int>(out.size()));
    if (fresh) out.emplace_back();
    out[it->second].class_ids.push_back(c);
  }
  std::vector<char> parity_seen(out.size(), 0);
  for (int i = 0; i < b.num_colorings(); ++i) {
    int comp = comp_of_root.at(uf.find(b.cliques[i][0]));
    out[comp].coloring_ids.push_back(i);
    Parity p = parity(t, b.colorings[i]);
    if (!parity_seen[comp]) {
      parity_seen[comp] = 1;
      out[comp].parity = p;
    } else if (out[comp].parity != p) {
      fail(ErrorKind::MixedParityComponent, "component " + std::to_string(comp) + " mixes parities");
    }
  }
  for (auto& comp : out)
    if (comp.coloring_ids.empty())
      throw std::logic_error("component without colorings");  // every class comes from a clique
  return out;
}

Signature signature_of(const std::vector<Component>& comps) {
  Signature s;
  for (const auto& c : comps) {
    (c.parity == Parity::Even ? s.even_components : s.odd_components)++;
    s.component_summary.emplace_back(static_cast<int>(c.coloring_ids.size()),
                                     static_cast<int>(c.class_ids.size()), c.parity);
  }
  std::sort(s.component_summary.begin(), s.component_summary.end());
  return s;
}

Signature signature(const Triangulation& t, const ColoringComplex& b) {
  return signature_of(components(t, b));
}

std::vector<std::vector<int>> kempe_classes(const Triangulation& t, const std::vector<Coloring>& colorings) {
  std::map<Coloring, int> index;
  for (int i = 0; i < static_cast<int>(colorings.size()); ++i) index.emplace(colorings[i], i);
  UnionFind uf(static_cast<int>(colorings.size()));
  // Single-chain swaps generate all subset swaps: a subset move can always be
  // ordered chain by chain with all four classes nonempty along the way.
  for (int i = 0; i < static_cast<int>(colorings.size()); ++i) {
    for (int x = 0; x < 4; ++x)
      for (int y = x + 1; y < 4; ++y) {
        KempeChainSet ks = kempe_chains(t, colorings[i], x, y);
        for (int c = 0; c < ks.p(); ++c) {
          int sel[1] = {c};
          Coloring g = kempe_change(colorings[i], ks, sel);
          if (!g.four_classes()) continue;
          auto it = index.find(g);
          if (it == index.end()) throw std::logic_error("kempe change left the enumerated universe");
          uf.unite(i, it->second);
        }
      }
  }
  std::map<int, std::vector<int>> by_root;
  for (int i = 0; i < static_cast<int>(colorings.size()); ++i) by_root[uf.find(i)].push_back(i);
  std::vector<std::vector<int>> out;
  for (auto& [root, ids] : by_root) out.push_back(std::move(ids));
  std::sort(out.begin(), out.end());
  return out;
}

std::string export_complex_dot(const Triangulation& t, const ColoringComplex& b) {
  std::ostringstream os;
  os << "graph coloring_complex {\n";
  os << "  // n=" << b.graph_n << " classes=" << b.num_classes() << " colorings=" << b.num_colorings() << "\n";
  if (b.empty()) {
    os << "  empty [label=\"no 4-colorings\", shape=box];\n}\n";
    return os.str();
  }
  os << "  node [style=filled];\n";
  auto comps = components(t, b);
  for (size_t k = 0; k < comps.size(); ++k) {
    const char* fill = comps[k].parity == Parity::Even ? "lightblue" : "lightsalmon";
    os << "  subgraph cluster_" << k << " {\n";
    os << "    label=\"component " << k << " (" << to_string(comps[k].parity) << ", "
       << comps[k].coloring_ids.size() << " colorings)\";\n";
    for (int c : comps[k].class_ids) {
      os << "    c" << c << " [label=\"{";
      for (size_t i = 0; i < b.classes[c].size(); ++i) os << (i ? "," : "") << b.classes[c][i];
      os << "}\", fillcolor=" << fill << "];\n";
    }
    os << "  }\n";
  }
  for (auto [a, c] : b.edges()) os << "  c" << a << " -- c" << c << ";\n";
  os << "}\n";
  return os.str();
}

nlohmann::ordered_json export_complex_json(const Triangulation& t, const ColoringComplex& b) {
  nlohmann::ordered_json doc;
  doc["n"] = b.graph_n;
  doc["empty"] = b.empty();
  doc["num_classes"] = b.num_classes();
  doc["num_colorings"] = b.num_colorings();
  doc["classes"] = b.classes;
  doc["cliques"] = b.cliques;
  doc["edges"] = b.edges();
  doc["components"] = nlohmann::ordered_json::array();
  if (!b.empty()) {
    for (const auto& comp : components(t, b)) {
      nlohmann::ordered_json jc;
      jc["parity"] = to_string(comp.parity);
      jc["num_colorings"] = comp.coloring_ids.size();
      jc["num_classes"] = comp.class_ids.size();
      jc["classes"] = comp.class_ids;
      jc["colorings"] = comp.coloring_ids;
      doc["components"].push_back(std::move(jc));
    }
  }
  return doc;
}

Signature signature_from_json(const nlohmann::json& doc) {
  Signature s;
  for (const auto& jc : doc.at("components")) {
    Parity p = jc.at("parity").get<std::string>() == "even" ? Parity::Even : Parity::Odd;
    (p == Parity::Even ? s.even_components : s.odd_components)++;
    s.component_summary.emplace_back(jc.at("num_colorings").get<int>(), jc.at("num_classes").get<int>(), p);
  }
  std::sort(s.component_summary.begin(), s.component_summary.end());
  return s;
}

}  // namespace ccx
