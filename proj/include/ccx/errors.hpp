#pragma once

#include <stdexcept>
#include <string>

namespace ccx {

enum class ErrorKind {
  // rotation system / triangulation validation
  NotSimple,
  AsymmetricAdjacency,
  NonTriangularFace,
  TooSmall,
  Disconnected,
  // planar_code streams
  TruncatedStream,
  BadHeader,
  NeighborOutOfRange,
  // coloring operations
  SameClass,
  UnknownChain,
  NotPlanar,
  // complex
  MixedParityComponent,
  // constructions
  DegenerateIdentification,
  UnknownName,
  TorusTooSmall,
  // enumeration
  NonFlippable,
  OutOfRange,
};

const char* to_string(ErrorKind k);

class GraphError : public std::runtime_error {
 public:
  GraphError(ErrorKind kind, const std::string& msg)
      : std::runtime_error(std::string(to_string(kind)) + ": " + msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind k, const std::string& msg) {
  throw GraphError(k, msg);
}

}  // namespace ccx
