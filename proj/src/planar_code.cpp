#include "ccx/planar_code.hpp"

#include <cstring>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>

namespace ccx {

namespace {

std::string at_byte(size_t pos) { return " at byte " + std::to_string(pos); }

}  // namespace

std::vector<Triangulation> read_planar_code(std::istream& in) {
  std::vector<unsigned char> buf{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  size_t pos = 0;
  const size_t hlen = std::strlen(kPlanarCodeHeader);
  if (!buf.empty() && buf[0] == '>') {
    if (buf.size() < hlen || std::memcmp(buf.data(), kPlanarCodeHeader, hlen) != 0)
      fail(ErrorKind::BadHeader, "stream starts with '>' but not with \">>planar_code<<\"");
    pos = hlen;
  }
  std::vector<Triangulation> out;
  while (pos < buf.size()) {
    size_t graph_start = pos;
    int n = buf[pos++];
    if (n == 0) fail(ErrorKind::BadHeader, "graph with zero vertices" + at_byte(graph_start));
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
      while (true) {
        if (pos >= buf.size())
          fail(ErrorKind::TruncatedStream,
               "stream ends inside adjacency list of vertex " + std::to_string(v + 1) + at_byte(pos));
        int b = buf[pos++];
        if (b == 0) break;
        if (b > n)
          fail(ErrorKind::NeighborOutOfRange,
               "neighbor " + std::to_string(b) + " exceeds n=" + std::to_string(n) + at_byte(pos - 1));
        rot[v].push_back(b - 1);
      }
    }
    out.push_back(Triangulation::from_rotation_system(rot));
  }
  return out;
}

std::vector<Triangulation> read_planar_code_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) fail(ErrorKind::TruncatedStream, "cannot open " + path);
  return read_planar_code(f);
}

void write_planar_code(std::ostream& out, const std::vector<Triangulation>& graphs, bool with_header) {
  if (with_header) out.write(kPlanarCodeHeader, static_cast<std::streamsize>(std::strlen(kPlanarCodeHeader)));
  for (const Triangulation& t : graphs) {
    if (t.n() > 255) fail(ErrorKind::OutOfRange, "planar_code limited to 255 vertices, got " + std::to_string(t.n()));
    out.put(static_cast<char>(t.n()));
    for (int v = 0; v < t.n(); ++v) {
      for (int w : t.neighbors(v)) out.put(static_cast<char>(w + 1));
      out.put(0);
    }
  }
}

}  // namespace ccx
