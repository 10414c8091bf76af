#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string_view>
#include <vector>

#include "bettikit/complex.hpp"
#include "bettikit/connected_sum.hpp"
#include "bettikit/graph.hpp"

namespace bettikit {

/// Seeded generator whose output sequence is fixed across platforms: the
/// engine is std::mt19937_64 and range reduction is done here, not by the
/// implementation-defined standard distributions.
class Rng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64/rejection-v1";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [0, 1) with 53 random bits.
  double unit();
  bool chance(double p) { return unit() < p; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[below(i)]);
  }

 private:
  std::mt19937_64 engine_;
};

/// Boundary of the d-simplex: all d-subsets of {0..d}.
SimplicialComplex simplex_boundary(int d);

/// Boundary of a stacked d-polytope with n vertices: start from the
/// d-simplex boundary and stack n-d-1 times. Stacking on facet F removes F
/// and adds the new vertex v (labelled d+1, d+2, ...) joined to every ridge
/// of F. Facets are picked uniformly from the current sorted facet list.
SimplicialComplex stacked_boundary(int d, int n, std::uint64_t seed);
/// Same, stacking on the given facets in order (n-d-1 of them).
SimplicialComplex stacked_boundary(int d, int n, std::span<const VertexSet> choices);

Graph complete_graph(std::size_t n);

/// The cycle 0-1-...-(n-1)-0; n >= 3.
Graph cycle_graph(std::size_t n);

enum class TreeShape { path, star, random, prufer };

struct TreeSpec {
  TreeShape shape = TreeShape::path;
  std::uint64_t seed = 0;            // random
  std::vector<Vertex> prufer_code;  // prufer
};

/// Tree on 0..n-1. Paths run 0-1-...; stars are centred at 0; random trees
/// decode a uniformly random Prüfer sequence.
Graph tree(std::size_t n, const TreeSpec& spec);
Graph tree_from_prufer(std::size_t n, std::span<const Vertex> code);

/// Erdős–Rényi G(n, p) on 0..n-1.
Graph random_graph(std::size_t n, double p, Rng& rng);

/// G(n, p) with p uniform in [0.2, 0.9], resampled (p included) until it
/// contains a t-clique. Requires 1 <= t <= n.
Graph random_graph_with_clique(std::size_t n, std::size_t t, Rng& rng);

/// A complex on 0..n-1 with random facets of up to `max_facet_size`
/// vertices; every vertex is covered.
SimplicialComplex random_complex(std::size_t n, std::size_t max_facet_size, Rng& rng);

/// Pure complex with `facet_count` random facets of `facet_size` vertices
/// drawn from 0..n-1.
SimplicialComplex random_pure_complex(std::size_t n, std::size_t facet_size, std::size_t facet_count, Rng& rng);

/// A valid gluing picking F1 and F2 uniformly from the candidate faces, a
/// uniformly random bijection F2 → F1, and random fresh labels for the rest
/// of the right vertices. Empty when either candidate list is.
std::optional<Gluing> random_gluing(const VertexSet& left_vertices, std::span<const VertexSet> left_candidates,
                                    const VertexSet& right_vertices, std::span<const VertexSet> right_candidates,
                                    Rng& rng);

}  // namespace bettikit
