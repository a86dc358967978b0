#include "ccx/constructions.hpp"

#include <algorithm>
#include <vector>

namespace ccx {

namespace {

std::vector<Face> q_k_faces(int k, bool prime) {
  RingLabeling r{k};
  std::vector<Face> fs;
  // inner cap: ring 0 traversed against the bands' direction
  fs.push_back({r.c(0), r.b(0), r.a(0)});
  fs.push_back({r.a(0), r.d(0), r.c(0)});
  for (int i = 0; i <= k; ++i) {
    int a = r.a(i), b = r.b(i), c = r.c(i), d = r.d(i);
    int A = r.a(i + 1), B = r.b(i + 1), C = r.c(i + 1), D = r.d(i + 1);
    fs.push_back({a, b, A});
    fs.push_back({b, B, A});
    fs.push_back({b, c, B});
    fs.push_back({c, C, B});
    fs.push_back({c, d, C});
    fs.push_back({d, D, C});
    fs.push_back({d, a, D});
    fs.push_back({a, A, D});
  }
  int m = k + 1;
  if (!prime) {
    fs.push_back({r.a(m), r.b(m), r.c(m)});
    fs.push_back({r.c(m), r.d(m), r.a(m)});
  } else {
    fs.push_back({r.a(m), r.b(m), r.d(m)});
    fs.push_back({r.b(m), r.c(m), r.d(m)});
  }
  for (Face& f : fs) {
    int mi = static_cast<int>(std::min_element(f.begin(), f.end()) - f.begin());
    f = {f[mi], f[(mi + 1) % 3], f[(mi + 2) % 3]};
  }
  return fs;
}

RingedTriangulation make_q(int k, bool prime) {
  if (k < 0) fail(ErrorKind::OutOfRange, "ring parameter must be nonnegative");
  RingLabeling r{k};
  return {Triangulation::from_faces(4 * r.rings(), q_k_faces(k, prime)), r};
}

}  // namespace

RingedTriangulation q_k(int k) { return make_q(k, false); }
RingedTriangulation q_k_prime(int k) { return make_q(k, true); }

Triangulation triangle_sum(const Triangulation& g, int face_g, const Triangulation& h, int face_h,
                           const std::array<int, 3>& corr) {
  if (face_g < 0 || face_g >= g.num_faces() || face_h < 0 || face_h >= h.num_faces())
    fail(ErrorKind::OutOfRange, "face index");
  const Face& fg = g.faces()[face_g];
  const Face& fh = h.faces()[face_h];
  // corr[i] is the g-vertex identified with fh[i]; it must hit fg exactly
  bool onto[3] = {false, false, false};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (corr[i] == fg[j]) onto[j] = true;
  if (!(onto[0] && onto[1] && onto[2]))
    fail(ErrorKind::DegenerateIdentification, "correspondence is not a bijection onto the glued face");

  // Does corr map the oriented cycle fh onto the oriented cycle fg? If so the
  // two surfaces face the same way and h must be mirrored to glue.
  std::array<int, 3> image{corr[0], corr[1], corr[2]};
  bool same_orientation = false;
  for (int s = 0; s < 3; ++s)
    if (image[s] == fg[0] && image[(s + 1) % 3] == fg[1] && image[(s + 2) % 3] == fg[2])
      same_orientation = true;

  std::vector<int> map_h(h.n(), -1);
  for (int i = 0; i < 3; ++i) map_h[fh[i]] = corr[i];
  int next = g.n();
  for (int v = 0; v < h.n(); ++v)
    if (map_h[v] < 0) map_h[v] = next++;

  std::vector<Face> fs;
  for (int i = 0; i < g.num_faces(); ++i)
    if (i != face_g) fs.push_back(g.faces()[i]);
  for (int i = 0; i < h.num_faces(); ++i) {
    if (i == face_h) continue;
    const Face& f = h.faces()[i];
    Face m = same_orientation ? Face{map_h[f[2]], map_h[f[1]], map_h[f[0]]}
                              : Face{map_h[f[0]], map_h[f[1]], map_h[f[2]]};
    fs.push_back(m);
  }
  try {
    return Triangulation::from_faces(g.n() + h.n() - 3, fs);
  } catch (const std::invalid_argument& e) {
    fail(ErrorKind::DegenerateIdentification, e.what());
  }
}

Triangulation stack_vertex(const Triangulation& t, int face) {
  if (face < 0 || face >= t.num_faces()) fail(ErrorKind::OutOfRange, "face index");
  const Face f = t.faces()[face];
  int w = t.n();
  std::vector<Face> fs;
  for (int i = 0; i < t.num_faces(); ++i)
    if (i != face) fs.push_back(t.faces()[i]);
  fs.push_back({f[0], f[1], w});
  fs.push_back({f[1], f[2], w});
  fs.push_back({f[2], f[0], w});
  return Triangulation::from_faces(t.n() + 1, fs);
}

Triangulation torus_grid(int p, int q) {
  if (p < 3 || q < 3) fail(ErrorKind::TorusTooSmall, "torus grid needs both sides >= 3");
  auto id = [&](int i, int j) { return ((i % p + p) % p) * q + ((j % q + q) % q); };
  std::vector<Face> fs;
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < q; ++j) {
      fs.push_back({id(i, j), id(i + 1, j), id(i + 1, j + 1)});
      fs.push_back({id(i, j), id(i + 1, j + 1), id(i, j + 1)});
    }
  return Triangulation::from_faces(p * q, fs);
}

Triangulation builtin(const std::string& name) {
  if (name == "k4")
    return Triangulation::from_faces(4, {{0, 1, 3}, {0, 2, 1}, {0, 3, 2}, {1, 2, 3}});
  if (name == "octahedron")
    return Triangulation::from_faces(6, {{0, 1, 2},
                                         {0, 2, 3},
                                         {0, 3, 4},
                                         {0, 4, 1},
                                         {5, 2, 1},
                                         {5, 3, 2},
                                         {5, 4, 3},
                                         {5, 1, 4}});
  if (name == "icosahedron") {
    std::vector<Face> fs;
    auto A = [](int i) { return 1 + (i % 5); };      // upper ring
    auto B = [](int i) { return 6 + (i % 5); };      // lower ring
    for (int i = 0; i < 5; ++i) {
      fs.push_back({0, A(i), A(i + 1)});
      fs.push_back({A(i), B(i), A(i + 1)});
      fs.push_back({A(i + 1), B(i), B(i + 1)});
      fs.push_back({11, B(i + 1), B(i)});
    }
    return Triangulation::from_faces(12, fs);
  }
  if (name == "example1") return q_k(1).t;
  if (name == "example2") return q_k_prime(1).t;
  if (name.rfind("torus_grid:", 0) == 0) {
    std::string dims = name.substr(11);
    size_t comma = dims.find(',');
    if (comma == std::string::npos) fail(ErrorKind::UnknownName, "expected torus_grid:P,Q");
    try {
      int p = std::stoi(dims.substr(0, comma));
      int q = std::stoi(dims.substr(comma + 1));
      return torus_grid(p, q);
    } catch (const std::logic_error&) {
      fail(ErrorKind::UnknownName, "expected torus_grid:P,Q, got " + name);
    }
  }
  fail(ErrorKind::UnknownName, name);
}

}  // namespace ccx
