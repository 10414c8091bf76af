#pragma once

#include <cstddef>

namespace bettikit {

/// Resource caps for the exponential entry points (subset sweeps and face
/// materialization). Structural operations ignore them.
struct Limits {
  std::size_t vertex_cap = 24;
  std::size_t face_limit = std::size_t{1} << 22;
};

/// Subsets are enumerated as 64-bit masks, so no cap can go beyond this.
inline constexpr std::size_t kMaxMaskVertices = 62;

}  // namespace bettikit
