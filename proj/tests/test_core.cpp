#include <doctest.h>

#include <random>
#include <sstream>

#include "ccx/canonical.hpp"
#include "ccx/connectivity.hpp"
#include "ccx/constructions.hpp"
#include "ccx/planar_code.hpp"
#include "ccx/triangulation.hpp"

using namespace ccx;

// expr must throw GraphError with the given kind
#define CHECK_KIND(expr, k)                            \
  do {                                                 \
    try {                                              \
      (void)(expr);                                    \
      CHECK_MESSAGE(false, "expected a throw: " #expr); \
    } catch (const GraphError& e) {                    \
      CHECK(e.kind() == (k));                          \
    }                                                  \
  } while (0)

namespace {

const std::vector<std::vector<int>> kK4Rot = {{1, 2, 3}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}};

Triangulation permuted(const Triangulation& t, const std::vector<int>& p) {
  std::vector<std::vector<int>> rot(t.n());
  for (int v = 0; v < t.n(); ++v) {
    std::vector<int>& row = rot[p[v]];
    for (int w : t.neighbors(v)) row.push_back(p[w]);
  }
  return Triangulation::from_rotation_system(rot);
}

std::vector<int> neighbor_vec(const Triangulation& t, int v) {
  auto nb = t.neighbors(v);
  return {nb.begin(), nb.end()};
}

}  // namespace

TEST_CASE("rotation system validation") {
  CHECK_KIND(Triangulation::from_rotation_system({{1, 2}, {0, 2}, {0, 1}}), ErrorKind::TooSmall);
  CHECK_KIND(Triangulation::from_rotation_system({{1, 2, 9}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}),
             ErrorKind::OutOfRange);
  CHECK_KIND(Triangulation::from_rotation_system({{1, 2, 3, 0}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}),
             ErrorKind::NotSimple);
  CHECK_KIND(Triangulation::from_rotation_system({{1, 2, 3, 1}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}),
             ErrorKind::NotSimple);
  CHECK_KIND(Triangulation::from_rotation_system({{1, 2, 3}, {0, 2}, {0, 1}, {0, 1}}),
             ErrorKind::AsymmetricAdjacency);
  // two disjoint tetrahedra
  CHECK_KIND(Triangulation::from_rotation_system({{1, 2, 3},
                                                  {0, 3, 2},
                                                  {0, 1, 3},
                                                  {0, 2, 1},
                                                  {5, 6, 7},
                                                  {4, 7, 6},
                                                  {4, 5, 7},
                                                  {4, 6, 5}}),
             ErrorKind::Disconnected);
  // one reversed rotation breaks the face tracing
  CHECK_KIND(Triangulation::from_rotation_system({{1, 3, 2}, {0, 3, 2}, {0, 1, 3}, {0, 2, 1}}),
             ErrorKind::NonTriangularFace);
}

TEST_CASE("tetrahedron structure") {
  Triangulation t = builtin("k4");
  CHECK(t.n() == 4);
  CHECK(t.num_edges() == 6);
  CHECK(t.num_faces() == 4);
  CHECK(t.euler_genus() == 0);
  for (int v = 0; v < 4; ++v) CHECK(t.degree(v) == 3);
  CHECK(t.adjacent(0, 3));
  CHECK(!t.adjacent(0, 0));
  CHECK(t.faces() == std::vector<Face>{{0, 1, 3}, {0, 2, 1}, {0, 3, 2}, {1, 2, 3}});
  CHECK(t.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

TEST_CASE("octahedron and icosahedron structure") {
  Triangulation oct = builtin("octahedron");
  CHECK(oct.n() == 6);
  CHECK(oct.num_edges() == 12);
  CHECK(oct.num_faces() == 8);
  CHECK(oct.euler_genus() == 0);
  for (int v = 0; v < 6; ++v) CHECK(oct.degree(v) == 4);
  CHECK(!oct.adjacent(0, 5));  // antipodal apexes
  CHECK(!oct.adjacent(1, 3));
  CHECK(!oct.adjacent(2, 4));

  Triangulation ico = builtin("icosahedron");
  CHECK(ico.n() == 12);
  CHECK(ico.num_edges() == 30);
  CHECK(ico.num_faces() == 20);
  CHECK(ico.euler_genus() == 0);
  for (int v = 0; v < 12; ++v) CHECK(ico.degree(v) == 5);
}

TEST_CASE("torus grids") {
  Triangulation t33 = torus_grid(3, 3);
  CHECK(t33.n() == 9);
  CHECK(t33.num_edges() == 27);
  CHECK(t33.num_faces() == 18);
  CHECK(t33.euler_genus() == 2);
  for (int v = 0; v < 9; ++v) CHECK(t33.degree(v) == 6);

  Triangulation t44 = builtin("torus_grid:4,4");
  CHECK(t44.n() == 16);
  CHECK(t44.num_edges() == 48);
  CHECK(t44.num_faces() == 32);
  CHECK(t44.euler_genus() == 2);

  CHECK_KIND(torus_grid(2, 5), ErrorKind::TorusTooSmall);
  CHECK_KIND(torus_grid(5, 2), ErrorKind::TorusTooSmall);
  CHECK_KIND(builtin("torus_grid:4x4"), ErrorKind::UnknownName);
  CHECK_KIND(builtin("nonesuch"), ErrorKind::UnknownName);
}

TEST_CASE("face list round trip") {
  Triangulation t = builtin("k4");
  Triangulation u = Triangulation::from_faces(4, t.faces());
  CHECK(u.faces() == t.faces());
  CHECK(u.edges() == t.edges());

  Triangulation ico = builtin("icosahedron");
  Triangulation ico2 = Triangulation::from_faces(12, ico.faces());
  CHECK(ico2.faces() == ico.faces());

  // same directed edge in two faces
  CHECK_THROWS_AS(Triangulation::from_faces(4, {{0, 1, 3}, {0, 1, 2}, {0, 3, 2}, {1, 2, 3}}),
                  std::invalid_argument);
  // two tetrahedra sharing only vertex 0: its faces form two disks
  CHECK_THROWS_AS(Triangulation::from_faces(
                      7, {{0, 1, 3}, {0, 2, 1}, {0, 3, 2}, {1, 2, 3}, {0, 4, 6}, {0, 5, 4}, {0, 6, 5}, {4, 5, 6}}),
                  std::invalid_argument);
}

TEST_CASE("planar code bytes") {
  Triangulation k4 = Triangulation::from_rotation_system(kK4Rot);
  std::ostringstream os;
  write_planar_code(os, {k4});
  std::string expect = std::string(kPlanarCodeHeader) +
                       std::string("\x04\x02\x03\x04\x00\x01\x04\x03\x00\x01\x02\x04\x00\x01\x03\x02\x00", 17);
  CHECK(os.str() == expect);

  // builtin k4 assembles the same rotations
  std::ostringstream os2;
  write_planar_code(os2, {builtin("k4")});
  CHECK(os2.str() == expect);
}

TEST_CASE("planar code round trip") {
  std::vector<Triangulation> graphs;
  graphs.push_back(builtin("octahedron"));
  graphs.push_back(builtin("icosahedron"));
  graphs.push_back(q_k(2).t);
  graphs.push_back(torus_grid(3, 4));  // the format carries any orientable map
  std::ostringstream os;
  write_planar_code(os, graphs);
  std::istringstream is(os.str());
  std::vector<Triangulation> back = read_planar_code(is);
  REQUIRE(back.size() == graphs.size());
  for (size_t i = 0; i < graphs.size(); ++i) {
    REQUIRE(back[i].n() == graphs[i].n());
    for (int v = 0; v < graphs[i].n(); ++v) CHECK(neighbor_vec(back[i], v) == neighbor_vec(graphs[i], v));
  }
}

TEST_CASE("planar code without header") {
  std::string body("\x04\x02\x03\x04\x00\x01\x04\x03\x00\x01\x02\x04\x00\x01\x03\x02\x00", 17);
  std::istringstream is(body);
  std::vector<Triangulation> got = read_planar_code(is);
  REQUIRE(got.size() == 1);
  CHECK(got[0].n() == 4);
}

TEST_CASE("planar code errors") {
  auto parse = [](const std::string& bytes) {
    std::istringstream is(bytes);
    return read_planar_code(is);
  };
  CHECK_KIND(parse(">>planar_c0de<<"), ErrorKind::BadHeader);
  CHECK_KIND(parse(std::string(kPlanarCodeHeader) + std::string("\x00", 1)), ErrorKind::BadHeader);
  CHECK_KIND(parse(std::string(kPlanarCodeHeader) + std::string("\x04\x02\x03", 3)),
             ErrorKind::TruncatedStream);
  CHECK_KIND(parse(std::string(kPlanarCodeHeader) +
                   std::string("\x04\x02\x03\x05\x00\x01\x04\x03\x00\x01\x02\x04\x00\x01\x03\x02\x00", 17)),
             ErrorKind::NeighborOutOfRange);
}

TEST_CASE("canonical code invariance") {
  std::mt19937 rng(31337);
  for (const char* name : {"example2", "icosahedron"}) {
    Triangulation t = builtin(name);
    CanonicalCode base = canonical_code(t);
    std::vector<int> p(t.n());
    for (int i = 0; i < t.n(); ++i) p[i] = i;
    for (int trial = 0; trial < 100; ++trial) {
      std::shuffle(p.begin(), p.end(), rng);
      CHECK(canonical_code(permuted(t, p)) == base);
    }
    CHECK(canonical_code(mirrored(t)) == base);
  }
  CHECK(canonical_code(mirrored(torus_grid(3, 4))) == canonical_code(torus_grid(3, 4)));
}

TEST_CASE("canonical code distinguishes") {
  CHECK(canonical_code(builtin("k4")) != canonical_code(builtin("octahedron")));
  CHECK(canonical_code(q_k(1).t) != canonical_code(q_k_prime(1).t));
  CHECK(canonical_code(q_k(3).t) != canonical_code(q_k_prime(3).t));
  CHECK(canonical_code(builtin("k4")).bytes.size() == 17);
  std::string hex = canonical_code(builtin("k4")).hex();
  CHECK(hex.size() == 34);
  CHECK(hex.substr(0, 2) == "04");
}

TEST_CASE("vertex connectivity") {
  CHECK(vertex_connectivity(builtin("k4"), 5) == 3);
  CHECK(vertex_connectivity(stack_vertex(builtin("k4"), 0), 5) == 3);
  CHECK(vertex_connectivity(builtin("octahedron"), 5) == 4);
  CHECK(vertex_connectivity(builtin("icosahedron"), 5) == 5);
  CHECK(vertex_connectivity(builtin("icosahedron"), 3) == 3);  // capped
  CHECK(vertex_connectivity(builtin("icosahedron"), 1) == 1);
  CHECK(vertex_connectivity(q_k(1).t, 5) == 4);
  CHECK(vertex_connectivity(q_k(2).t, 5) == 4);
  CHECK(vertex_connectivity(torus_grid(4, 4), 6) == 6);
  CHECK_KIND(vertex_connectivity(builtin("k4"), 0), ErrorKind::OutOfRange);
  CHECK_KIND(vertex_connectivity(builtin("k4"), 7), ErrorKind::OutOfRange);
}

TEST_CASE("degree sums") {
  RingedTriangulation q = q_k(1);
  std::vector<int> odd = {q.rings.a(0), q.rings.c(0), q.rings.a(2), q.rings.c(2)};
  CHECK(class_degree_sum(q.t, odd) == 20);
  std::vector<int> all(q.t.n());
  for (int i = 0; i < q.t.n(); ++i) all[i] = i;
  CHECK(class_degree_sum(q.t, all) == 2 * q.t.num_edges());
  CHECK_KIND(class_degree_sum(q.t, std::vector<int>{99}), ErrorKind::OutOfRange);
}
