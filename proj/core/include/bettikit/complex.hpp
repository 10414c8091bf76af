#pragma once

#include <cstddef>
#include <vector>

#include "bettikit/limits.hpp"
#include "bettikit/vertex_set.hpp"

namespace bettikit {

/// Abstract simplicial complex stored by its facets (maximal faces).
///
/// Facets are kept in lexicographic order and no facet contains another.
/// The vertex set is the union of the facets, so every vertex is a face.
/// A complex without facets is the empty complex {∅}: it has no vertices
/// and no connected components, but is still a valid complex.
class SimplicialComplex {
 public:
  /// The empty complex {∅}.
  SimplicialComplex() = default;

  /// Builds the canonical complex generated by `generators`; faces contained
  /// in other generators are absorbed and empty generators ignored. No cap
  /// is applied here; see complex_from_facets for the checked entry point.
  static SimplicialComplex generated_by(std::vector<VertexSet> generators);

  const VertexSet& vertices() const noexcept { return vertices_; }
  const std::vector<VertexSet>& facets() const noexcept { return facets_; }
  std::size_t num_vertices() const noexcept { return vertices_.size(); }
  bool is_empty_complex() const noexcept { return facets_.empty(); }

  /// Dimension max |F| - 1; the empty complex has dimension -1.
  int dimension() const noexcept;

  bool contains_face(const VertexSet& face) const;
  bool is_facet(const VertexSet& face) const;
  bool is_pure() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  VertexSet vertices_;
  std::vector<VertexSet> facets_;
};

/// Checked constructor for user-supplied facet lists.
/// Throws EmptyInput for an empty list and VertexCapExceeded when the
/// vertex count exceeds `limits.vertex_cap`.
SimplicialComplex complex_from_facets(std::vector<VertexSet> facets, const Limits& limits = {});

/// Δ_W = {F ∩ W : F ∈ Δ}, on the vertex set W ∩ V(Δ).
SimplicialComplex induced_subcomplex(const SimplicialComplex& complex, const VertexSet& subset);

}  // namespace bettikit
