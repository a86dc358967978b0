#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ccx/triangulation.hpp"

namespace ccx {

// Binary embedded-graph stream: optional ASCII header ">>planar_code<<",
// then per graph one byte n (1..255) followed by, for each vertex, its
// neighbors in rotation order as 1-based bytes, each list 0-terminated.
inline constexpr const char* kPlanarCodeHeader = ">>planar_code<<";

std::vector<Triangulation> read_planar_code(std::istream& in);
std::vector<Triangulation> read_planar_code_file(const std::string& path);

void write_planar_code(std::ostream& out, const std::vector<Triangulation>& graphs,
                       bool with_header = true);

}  // namespace ccx
