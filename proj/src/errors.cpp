#include "ccx/errors.hpp"

namespace ccx {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::AsymmetricAdjacency: return "AsymmetricAdjacency";
    case ErrorKind::NonTriangularFace: return "NonTriangularFace";
    case ErrorKind::TooSmall: return "TooSmall";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::TruncatedStream: return "TruncatedStream";
    case ErrorKind::BadHeader: return "BadHeader";
    case ErrorKind::NeighborOutOfRange: return "NeighborOutOfRange";
    case ErrorKind::SameClass: return "SameClass";
    case ErrorKind::UnknownChain: return "UnknownChain";
    case ErrorKind::NotPlanar: return "NotPlanar";
    case ErrorKind::MixedParityComponent: return "MixedParityComponent";
    case ErrorKind::DegenerateIdentification: return "DegenerateIdentification";
    case ErrorKind::UnknownName: return "UnknownName";
    case ErrorKind::TorusTooSmall: return "TorusTooSmall";
    case ErrorKind::NonFlippable: return "NonFlippable";
    case ErrorKind::OutOfRange: return "OutOfRange";
  }
  return "GraphError";
}

}  // namespace ccx
