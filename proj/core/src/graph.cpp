#include "bettikit/graph.hpp"

#include <algorithm>

#include "bettikit/complex.hpp"
#include "bettikit/error.hpp"

namespace bettikit {

Graph::Graph(VertexSet vertices, const std::vector<Edge>& edges)
    : vertices_(std::move(vertices)), words_((vertices_.size() + 63) / 64) {
  adjacency_.assign(vertices_.size() * words_, 0);
  for (const auto& [u, v] : edges) {
    if (u == v) throw Error(Errc::BadInput, "self-loop at vertex " + std::to_string(u));
    std::size_t i = index_of(u);
    std::size_t j = index_of(v);
    if (has_edge_dense(i, j)) continue;
    adjacency_[i * words_ + j / 64] |= std::uint64_t{1} << (j % 64);
    adjacency_[j * words_ + i / 64] |= std::uint64_t{1} << (i % 64);
    ++num_edges_;
  }
}

std::size_t Graph::index_of(Vertex label) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end() || *it != label) {
    throw Error(Errc::BadInput, "vertex " + std::to_string(label) + " is not in the graph");
  }
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (!vertices_.contains(u) || !vertices_.contains(v)) return false;
  return has_edge_dense(index_of(u), index_of(v));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (std::size_t i = 0; i < num_vertices(); ++i) {
    for (std::size_t j = i + 1; j < num_vertices(); ++j) {
      if (has_edge_dense(i, j)) out.emplace_back(vertices_[i], vertices_[j]);
    }
  }
  return out;
}

bool Graph::is_clique(const VertexSet& subset) const {
  if (!subset.is_subset_of(vertices_)) return false;
  for (std::size_t a = 0; a < subset.size(); ++a) {
    for (std::size_t b = a + 1; b < subset.size(); ++b) {
      if (!has_edge(subset[a], subset[b])) return false;
    }
  }
  return true;
}

Graph one_skeleton(const SimplicialComplex& complex) {
  std::vector<Edge> edges;
  for (const auto& f : complex.facets()) {
    for (std::size_t a = 0; a < f.size(); ++a) {
      for (std::size_t b = a + 1; b < f.size(); ++b) edges.emplace_back(f[a], f[b]);
    }
  }
  return Graph(complex.vertices(), edges);
}

Graph induced_subgraph(const Graph& graph, const VertexSet& subset) {
  VertexSet kept = subset.intersect(graph.vertices());
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < kept.size(); ++a) {
    for (std::size_t b = a + 1; b < kept.size(); ++b) {
      if (graph.has_edge(kept[a], kept[b])) edges.emplace_back(kept[a], kept[b]);
    }
  }
  return Graph(std::move(kept), edges);
}

std::vector<VertexSet> connected_components(const Graph& graph) {
  const std::size_t n = graph.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<VertexSet> out;
  std::vector<std::size_t> stack;
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    std::vector<Vertex> block;
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      block.push_back(graph.label_of(v));
      for (std::size_t w = 0; w < n; ++w) {
        if (!seen[w] && graph.has_edge_dense(v, w)) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    out.emplace_back(std::move(block));
  }
  return out;
}

}  // namespace bettikit
