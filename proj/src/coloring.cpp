#include "ccx/coloring.hpp"

#include <algorithm>
#include <string>

namespace ccx {

namespace {

std::vector<uint8_t> canonicalize(std::vector<uint8_t> colors) {
  std::array<int, 256> relabel;  // raw color byte -> canonical class
  relabel.fill(-1);
  int next = 0;
  for (uint8_t& c : colors) {
    if (relabel[c] < 0) relabel[c] = next++;
    c = static_cast<uint8_t>(relabel[c]);
  }
  return colors;
}

}  // namespace

Coloring::Coloring(std::vector<uint8_t> colors) : color_(canonicalize(std::move(colors))) {
  for (uint8_t c : color_) {
    if (c > 3) throw std::invalid_argument("more than four color classes");
    ++size_[c];
  }
}

int Coloring::classes_used() const {
  int k = 0;
  while (k < 4 && size_[k] > 0) ++k;
  return k;
}

std::vector<int> Coloring::class_vertices(int c) const {
  std::vector<int> out;
  out.reserve(size_[c]);
  for (int v = 0; v < n(); ++v)
    if (color_[v] == c) out.push_back(v);
  return out;
}

std::array<std::vector<int>, 4> Coloring::classes() const {
  std::array<std::vector<int>, 4> out;
  for (int c = 0; c < 4; ++c) out[c] = class_vertices(c);
  return out;
}

bool is_proper(const Triangulation& t, const Coloring& f) {
  for (auto [u, v] : t.edges())
    if (f.color_of(u) == f.color_of(v)) return false;
  return true;
}

std::vector<Coloring> enumerate_colorings(const Triangulation& t) {
  int n = t.n();
  // BFS order seeded by the first face, so every later vertex has a colored
  // neighbor when reached.
  std::vector<int> order;
  order.reserve(n);
  std::vector<char> inq(n, 0);
  const Face& f0 = t.faces().front();
  for (int v : f0) {
    order.push_back(v);
    inq[v] = 1;
  }
  for (size_t qi = 0; qi < order.size(); ++qi)
    for (int w : t.neighbors(order[qi]))
      if (!inq[w]) {
        inq[w] = 1;
        order.push_back(w);
      }

  // earlier-in-order neighbors of each vertex
  std::vector<int> pos(n);
  for (int i = 0; i < n; ++i) pos[order[i]] = i;
  std::vector<std::vector<int>> earlier(n);
  for (int v = 0; v < n; ++v)
    for (int w : t.neighbors(v))
      if (pos[w] < pos[v]) earlier[v].push_back(w);

  std::vector<uint8_t> color(n, 0);
  color[order[0]] = 0;
  color[order[1]] = 1;
  color[order[2]] = 2;
  std::vector<Coloring> out;
  std::vector<int> depth_stack;

  // iterative backtracking over order[3..]; tri[i] = color tried at depth i
  std::vector<int> tri(n, -1);
  int d = 3;
  if (n == 3) d = n;  // unreachable: triangulations have n >= 4
  while (d >= 3) {
    if (d == n) {
      bool used[4] = {false, false, false, false};
      for (int v = 0; v < n; ++v) used[color[v]] = true;
      if (used[3]) out.emplace_back(color);
      --d;
      continue;
    }
    int v = order[d];
    int forbidden = 0;
    for (int w : earlier[v]) forbidden |= 1 << color[w];
    int c = tri[d] + 1;
    while (c < 4 && (forbidden & (1 << c))) ++c;
    if (c >= 4) {
      tri[d] = -1;
      --d;
      continue;
    }
    tri[d] = c;
    color[v] = static_cast<uint8_t>(c);
    ++d;
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

KempeChainSet kempe_chains(const Triangulation& t, const Coloring& f, int x, int y) {
  if (x == y) fail(ErrorKind::SameClass, "chains need two distinct classes");
  if (x < 0 || x > 3 || y < 0 || y > 3) fail(ErrorKind::OutOfRange, "class index");
  KempeChainSet ks{x, y, {}, 0};
  int n = t.n();
  std::vector<char> vis(n, 0);
  auto in_pair = [&](int v) { return f.color_of(v) == x || f.color_of(v) == y; };
  for (int s = 0; s < n; ++s) {
    if (!in_pair(s) || vis[s]) continue;
    std::vector<int> chain, stack{s};
    vis[s] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      chain.push_back(v);
      for (int w : t.neighbors(v))
        if (in_pair(w) && !vis[w]) {
          vis[w] = 1;
          stack.push_back(w);
        }
    }
    std::sort(chain.begin(), chain.end());
    ks.chains.push_back(std::move(chain));
  }
  std::sort(ks.chains.begin(), ks.chains.end());
  for (auto [u, v] : t.edges())
    if (in_pair(u) && in_pair(v)) ++ks.edge_count;
  return ks;
}

Coloring kempe_change(const Coloring& f, const KempeChainSet& chains, std::span<const int> selected) {
  std::vector<uint8_t> colors = f.assignment();
  for (int idx : selected) {
    if (idx < 0 || idx >= chains.p())
      fail(ErrorKind::UnknownChain, "chain index " + std::to_string(idx) + " of " + std::to_string(chains.p()));
    for (int v : chains.chains[idx])
      colors[v] = static_cast<uint8_t>(colors[v] == chains.x ? chains.y : chains.x);
  }
  return Coloring(std::move(colors));
}

int j_kempe(const Triangulation& t, const Coloring& f, int x) {
  if (t.euler_genus() != 0) fail(ErrorKind::NotPlanar, "chain-count functional needs a sphere triangulation");
  if (x < 0 || x > 3) fail(ErrorKind::OutOfRange, "class index");
  int others[3], k = 0;
  for (int c = 0; c < 4; ++c)
    if (c != x) others[k++] = c;
  int j = 0;
  for (int i = 0; i < 3; ++i) j += kempe_chains(t, f, x, others[i]).p();
  for (int i = 0; i < 3; ++i)
    for (int l = i + 1; l < 3; ++l) j -= kempe_chains(t, f, others[i], others[l]).p();
  return j;
}

int j_formula(const Triangulation& t, const Coloring& f, int x) {
  if (x < 0 || x > 3) fail(ErrorKind::OutOfRange, "class index");
  int size = f.class_size(x);
  int deg = 0;
  for (int v = 0; v < t.n(); ++v)
    if (f.color_of(v) == x) deg += t.degree(v);
  return 2 * size - deg + t.n() - 3 + t.euler_genus();
}

Parity parity(const Triangulation& t, const Coloring& f) {
  int j = j_formula(t, f, 0);  // class 0 is nonempty in canonical form
  return (j % 2 + 2) % 2 == 0 ? Parity::Even : Parity::Odd;
}

namespace {

// Oriented boundary of the target tetrahedron on vertices {0,1,2,3}: the
// reference cycles below are its traced faces, so signed face counts agree
// across all four color triples.
constexpr int kRefCycle[4][3] = {
    {1, 2, 3},  // triple without color 0
    {0, 3, 2},  // without 1
    {0, 1, 3},  // without 2
    {0, 2, 1},  // without 3
};

}  // namespace

int homology_degree_on_triple(const Triangulation& t, const Coloring& f, int i, int j, int l) {
  int triple = (0 + 1 + 2 + 3) - i - j - l;  // identify by missing color
  if (i == j || j == l || i == l || i < 0 || l > 3 || j < 0 || i > 3 || j > 3 || l < 0)
    fail(ErrorKind::OutOfRange, "need three distinct colors in 0..3");
  const int* ref = kRefCycle[triple];
  int deg = 0;
  for (const Face& face : t.faces()) {
    int a = f.color_of(face[0]), b = f.color_of(face[1]), c = f.color_of(face[2]);
    if (a == b || b == c || a == c) continue;
    if (a + b + c != ref[0] + ref[1] + ref[2] || a == triple || b == triple || c == triple) continue;
    // rotate so the cycle starts at ref[0]
    int cyc[3] = {a, b, c};
    while (cyc[0] != ref[0]) {
      int t0 = cyc[0];
      cyc[0] = cyc[1];
      cyc[1] = cyc[2];
      cyc[2] = t0;
    }
    deg += (cyc[1] == ref[1]) ? 1 : -1;
  }
  return deg;
}

int homology_degree(const Triangulation& t, const Coloring& f) {
  return homology_degree_on_triple(t, f, 1, 2, 3);
}

}  // namespace ccx
