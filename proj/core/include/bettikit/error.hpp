#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace bettikit {

enum class Errc {
  EmptyInput,
  VertexCapExceeded,
  FaceExplosion,
  IncompleteRelabeling,
  BadRelabeling,
  NotMaximalFace,
  NotComplete,
  SizeMismatch,
  BadGlueSize,
  KindMismatch,
  NonIntegral,
  BadDimension,
  BadSize,
  BadFacetChoice,
  BadPruferCode,
  BadInput,
  SyntaxError,
  ArityError,
  MixedKinds,
};

std::string_view errc_name(Errc code) noexcept;

/// Library-wide exception; every failure carries a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message),
        code_(code),
        detail_(message) {}

  Errc code() const noexcept { return code_; }
  /// The message without the code prefix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  Errc code_;
  std::string detail_;
};

}  // namespace bettikit
