#pragma once

#include <map>
#include <optional>

#include "bettikit/complex.hpp"
#include "bettikit/graph.hpp"
#include "bettikit/vertex_set.hpp"

namespace bettikit {

/// Injective map between vertex labels.
class Relabeling {
 public:
  Relabeling() = default;
  /// Throws BadRelabeling if two sources share a target.
  explicit Relabeling(std::map<Vertex, Vertex> pairs);

  static Relabeling identity(const VertexSet& domain);

  const std::map<Vertex, Vertex>& pairs() const noexcept { return pairs_; }
  VertexSet domain() const;
  VertexSet codomain() const;

  std::optional<Vertex> find(Vertex v) const;
  /// Throws IncompleteRelabeling if `v` has no image.
  Vertex operator()(Vertex v) const;
  VertexSet operator()(const VertexSet& set) const;

  friend bool operator==(const Relabeling&, const Relabeling&) = default;

 private:
  std::map<Vertex, Vertex> pairs_;
};

SimplicialComplex relabel(const SimplicialComplex& complex, const Relabeling& sigma);
Graph relabel(const Graph& graph, const Relabeling& sigma);

}  // namespace bettikit
