#include "ccx/triangulation.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace ccx {

namespace {

std::string edge_str(int u, int v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

bool Triangulation::adjacent(int u, int v) const {
  auto nb = neighbors(u);
  return std::find(nb.begin(), nb.end(), v) != nb.end();
}

Triangulation Triangulation::from_rotation_system(const std::vector<std::vector<int>>& rot) {
  Triangulation t;
  t.n_ = static_cast<int>(rot.size());
  if (t.n_ < 4) fail(ErrorKind::TooSmall, "need at least 4 vertices, got " + std::to_string(t.n_));
  t.off_.assign(t.n_ + 1, 0);
  for (int v = 0; v < t.n_; ++v) t.off_[v + 1] = t.off_[v] + static_cast<int>(rot[v].size());
  t.nbr_.reserve(t.off_[t.n_]);
  for (int v = 0; v < t.n_; ++v)
    for (int w : rot[v]) {
      if (w < 0 || w >= t.n_)
        fail(ErrorKind::OutOfRange, "neighbor " + std::to_string(w) + " of vertex " + std::to_string(v));
      t.nbr_.push_back(w);
    }
  t.finish_and_validate();
  return t;
}

void Triangulation::finish_and_validate() {
  // simple: no loops, no repeated neighbor in any rotation
  std::vector<int> seen;
  for (int v = 0; v < n_; ++v) {
    auto nb = neighbors(v);
    if (nb.empty()) fail(ErrorKind::NotSimple, "isolated vertex " + std::to_string(v));
    seen.assign(nb.begin(), nb.end());
    std::sort(seen.begin(), seen.end());
    for (size_t i = 0; i < seen.size(); ++i) {
      if (seen[i] == v) fail(ErrorKind::NotSimple, "loop at vertex " + std::to_string(v));
      if (i + 1 < seen.size() && seen[i] == seen[i + 1])
        fail(ErrorKind::NotSimple, "parallel edge " + edge_str(v, seen[i]));
    }
  }
  // symmetric adjacency
  for (int v = 0; v < n_; ++v)
    for (int w : neighbors(v))
      if (!adjacent(w, v)) fail(ErrorKind::AsymmetricAdjacency, "edge " + edge_str(v, w) + " has no reverse");

  // connected
  {
    std::vector<char> vis(n_, 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int w : neighbors(v))
        if (!vis[w]) {
          vis[w] = 1;
          ++cnt;
          stack.push_back(w);
        }
    }
    if (cnt != n_) fail(ErrorKind::Disconnected, std::to_string(n_ - cnt) + " vertices unreachable");
  }

  edges_.clear();
  for (int v = 0; v < n_; ++v)
    for (int w : neighbors(v))
      if (v < w) edges_.emplace_back(v, w);
  std::sort(edges_.begin(), edges_.end());

  // trace faces: next(u->v) = (v, successor of u in rot(v))
  faces_.clear();
  std::vector<char> used(nbr_.size(), 0);  // directed edge v->nbr_[i] at flat index i
  auto dir_index = [&](int u, int v) {
    for (int i = off_[u]; i < off_[u + 1]; ++i)
      if (nbr_[i] == v) return i;
    return -1;
  };
  auto next_dir = [&](int u, int v) {
    // successor of u in rot(v)
    int d = degree(v);
    int base = off_[v];
    for (int i = 0; i < d; ++i)
      if (nbr_[base + i] == u) return std::pair<int, int>(v, nbr_[base + (i + 1) % d]);
    return std::pair<int, int>(-1, -1);
  };
  for (int u = 0; u < n_; ++u) {
    for (int i = off_[u]; i < off_[u + 1]; ++i) {
      if (used[i]) continue;
      int a = u, b = nbr_[i];
      int walk[4] = {a, b, -1, -1};
      int len = 1;
      int cu = a, cv = b;
      used[i] = 1;
      while (true) {
        auto [nu, nv] = next_dir(cu, cv);
        cu = nu;
        cv = nv;
        if (cu == a && cv == b) break;
        if (len >= 3)
          fail(ErrorKind::NonTriangularFace, "face through " + edge_str(a, b) + " has length > 3");
        walk[++len] = cv;
        used[dir_index(cu, cv)] = 1;
      }
      if (len != 3)
        fail(ErrorKind::NonTriangularFace, "face through " + edge_str(a, b) + " has length " + std::to_string(len));
      Face f{walk[0], walk[1], walk[2]};
      if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2])
        fail(ErrorKind::NonTriangularFace, "degenerate face through " + edge_str(a, b));
      int m = static_cast<int>(std::min_element(f.begin(), f.end()) - f.begin());
      faces_.push_back({f[m], f[(m + 1) % 3], f[(m + 2) % 3]});
    }
  }
  std::sort(faces_.begin(), faces_.end());

  genus_ = 2 - n_ + num_edges() - num_faces();
  if (genus_ < 0 || genus_ % 2 != 0)
    throw std::logic_error("euler genus " + std::to_string(genus_) + " from face tracing");
}

Triangulation Triangulation::from_faces(int n, const std::vector<Face>& faces) {
  // face (a,b,c) induces successor constraints: succ_b(a)=c, succ_c(b)=a, succ_a(c)=b
  std::vector<std::map<int, int>> succ(n);
  auto put = [&](int v, int from, int to) {
    if (v < 0 || v >= n || from < 0 || from >= n)
      throw std::invalid_argument("face vertex out of range");
    auto [it, fresh] = succ[v].emplace(from, to);
    (void)it;
    if (!fresh) throw std::invalid_argument("directed edge used by two faces");
  };
  for (const Face& f : faces) {
    put(f[1], f[0], f[2]);
    put(f[2], f[1], f[0]);
    put(f[0], f[2], f[1]);
  }
  std::vector<std::vector<int>> rot(n);
  for (int v = 0; v < n; ++v) {
    if (succ[v].empty()) throw std::invalid_argument("vertex " + std::to_string(v) + " lies on no face");
    int start = succ[v].begin()->first;
    int cur = start;
    do {
      rot[v].push_back(cur);
      auto it = succ[v].find(cur);
      if (it == succ[v].end()) throw std::invalid_argument("open rotation at vertex " + std::to_string(v));
      cur = it->second;
    } while (cur != start && rot[v].size() <= succ[v].size());
    if (rot[v].size() != succ[v].size())
      throw std::invalid_argument("faces at vertex " + std::to_string(v) + " do not form a single disk");
  }
  return from_rotation_system(rot);
}

Triangulation mirrored(const Triangulation& t) {
  std::vector<std::vector<int>> rot(t.n());
  for (int v = 0; v < t.n(); ++v) {
    auto nb = t.neighbors(v);
    rot[v].assign(nb.rbegin(), nb.rend());
  }
  return Triangulation::from_rotation_system(rot);
}

int class_degree_sum(const Triangulation& t, std::span<const int> vertices) {
  int s = 0;
  for (int v : vertices) {
    if (v < 0 || v >= t.n()) fail(ErrorKind::OutOfRange, "vertex " + std::to_string(v));
    s += t.degree(v);
  }
  return s;
}

}  // namespace ccx
