#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bettikit/complex.hpp"
#include "bettikit/graph.hpp"
#include "bettikit/relabeling.hpp"

namespace bettikit {

/// The data (F1, F2, σ) of a t-connected sum; t = |F1|.
///
/// σ relabels the right operand: it must cover every right vertex, send F2
/// onto F1, and meet the left vertex set exactly in F1.
struct Gluing {
  VertexSet left_face;
  VertexSet right_face;
  Relabeling sigma;
};

/// σ sending `right_face` onto `left_face` in sorted order and the remaining
/// right vertices, in sorted order, to max(left_vertices)+1, +2, ...
Relabeling canonical_relabeling(const VertexSet& left_vertices, const VertexSet& left_face,
                                const VertexSet& right_vertices, const VertexSet& right_face);

/// Gluing with the canonical relabeling.
Gluing canonical_gluing(const VertexSet& left_vertices, const VertexSet& left_face,
                        const VertexSet& right_vertices, const VertexSet& right_face);

/// (Δ1 ∪ σ(Δ2)) ∖ {F1} with facets recomputed. F1 and F2 must be facets of
/// equal positive size. Errors: BadGlueSize, SizeMismatch, NotMaximalFace,
/// BadRelabeling.
SimplicialComplex connected_sum(const SimplicialComplex& left, const SimplicialComplex& right,
                                const Gluing& gluing);

/// Graph on V1 ∪ σ(V2) with edges E1 ∪ σ(E2); nothing is removed. F1 and F2
/// must induce cliques of equal positive size. Errors: BadGlueSize,
/// SizeMismatch, NotComplete, BadRelabeling.
Graph connected_sum(const Graph& left, const Graph& right, const Gluing& gluing);

/// Left fold of the binary sum: gluings[i] joins the running sum with
/// parts[i + 1]. Errors carry the failing step index (1-based) in the message.
SimplicialComplex iterated_sum(std::span<const SimplicialComplex> parts, std::span<const Gluing> gluings);
Graph iterated_sum(std::span<const Graph> parts, std::span<const Gluing> gluings);

/// Whether G(Δ1 # Δ2) equals G(Δ1) # G(Δ2) for this gluing.
bool skeleton_commutes(const SimplicialComplex& left, const SimplicialComplex& right, const Gluing& gluing);

/// All t-cliques of `graph`, lexicographically ordered.
std::vector<VertexSet> cliques_of_size(const Graph& graph, std::size_t t);

/// All facets with exactly t vertices, lexicographically ordered.
std::vector<VertexSet> facets_of_size(const SimplicialComplex& complex, std::size_t t);

}  // namespace bettikit
