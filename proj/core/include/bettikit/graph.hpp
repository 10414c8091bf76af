#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "bettikit/vertex_set.hpp"

namespace bettikit {

class SimplicialComplex;

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on labeled vertices.
///
/// Labels are compacted to a dense index range 0..n-1 (in label order) and
/// adjacency is stored as one bitset row per vertex.
class Graph {
 public:
  Graph() = default;

  /// Throws BadInput for self-loops or edge endpoints outside `vertices`.
  Graph(VertexSet vertices, const std::vector<Edge>& edges);

  const VertexSet& vertices() const noexcept { return vertices_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }

  /// Dense index of `label`; throws BadInput if absent.
  std::size_t index_of(Vertex label) const;
  Vertex label_of(std::size_t index) const { return vertices_[index]; }

  bool has_edge(Vertex u, Vertex v) const;
  bool has_edge_dense(std::size_t i, std::size_t j) const {
    return (adjacency_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }

  /// Neighbourhood of dense vertex `i` as a single word. Requires n <= 64.
  std::uint64_t neighbour_mask(std::size_t i) const { return adjacency_[i * words_]; }

  /// Edges as label pairs (u < v), sorted.
  std::vector<Edge> edges() const;

  /// True iff the vertices of `subset` are pairwise adjacent (and present).
  bool is_clique(const VertexSet& subset) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.adjacency_ == b.adjacency_;
  }

 private:
  VertexSet vertices_;
  std::size_t words_ = 0;
  std::size_t num_edges_ = 0;
  std::vector<std::uint64_t> adjacency_;
};

/// G(Δ): vertices of Δ, edges the 2-element faces.
Graph one_skeleton(const SimplicialComplex& complex);

/// G|_W on W ∩ V(G).
Graph induced_subgraph(const Graph& graph, const VertexSet& subset);

/// Partition into maximal connected sets, ordered by smallest label.
/// The empty graph has no components.
std::vector<VertexSet> connected_components(const Graph& graph);

}  // namespace bettikit
