#include "bettikit/error.hpp"

namespace bettikit {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::EmptyInput: return "EmptyInput";
    case Errc::VertexCapExceeded: return "VertexCapExceeded";
    case Errc::FaceExplosion: return "FaceExplosion";
    case Errc::IncompleteRelabeling: return "IncompleteRelabeling";
    case Errc::BadRelabeling: return "BadRelabeling";
    case Errc::NotMaximalFace: return "NotMaximalFace";
    case Errc::NotComplete: return "NotComplete";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::BadGlueSize: return "BadGlueSize";
    case Errc::KindMismatch: return "KindMismatch";
    case Errc::NonIntegral: return "NonIntegral";
    case Errc::BadDimension: return "BadDimension";
    case Errc::BadSize: return "BadSize";
    case Errc::BadFacetChoice: return "BadFacetChoice";
    case Errc::BadPruferCode: return "BadPruferCode";
    case Errc::BadInput: return "BadInput";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::ArityError: return "ArityError";
    case Errc::MixedKinds: return "MixedKinds";
  }
  return "Unknown";
}

}  // namespace bettikit
