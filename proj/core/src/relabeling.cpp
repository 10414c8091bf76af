#include "bettikit/relabeling.hpp"

#include <set>

#include "bettikit/error.hpp"

namespace bettikit {

Relabeling::Relabeling(std::map<Vertex, Vertex> pairs) : pairs_(std::move(pairs)) {
  std::set<Vertex> targets;
  for (const auto& [from, to] : pairs_) {
    if (!targets.insert(to).second) {
      throw Error(Errc::BadRelabeling, "two vertices map to " + std::to_string(to));
    }
  }
}

Relabeling Relabeling::identity(const VertexSet& domain) {
  std::map<Vertex, Vertex> pairs;
  for (Vertex v : domain) pairs.emplace(v, v);
  return Relabeling(std::move(pairs));
}

VertexSet Relabeling::domain() const {
  std::vector<Vertex> out;
  for (const auto& [from, to] : pairs_) out.push_back(from);
  return VertexSet(std::move(out));
}

VertexSet Relabeling::codomain() const {
  std::vector<Vertex> out;
  for (const auto& [from, to] : pairs_) out.push_back(to);
  return VertexSet(std::move(out));
}

std::optional<Vertex> Relabeling::find(Vertex v) const {
  auto it = pairs_.find(v);
  if (it == pairs_.end()) return std::nullopt;
  return it->second;
}

Vertex Relabeling::operator()(Vertex v) const {
  auto image = find(v);
  if (!image) throw Error(Errc::IncompleteRelabeling, "vertex " + std::to_string(v) + " has no image");
  return *image;
}

VertexSet Relabeling::operator()(const VertexSet& set) const {
  std::vector<Vertex> out;
  out.reserve(set.size());
  for (Vertex v : set) out.push_back((*this)(v));
  return VertexSet(std::move(out));
}

SimplicialComplex relabel(const SimplicialComplex& complex, const Relabeling& sigma) {
  std::vector<VertexSet> facets;
  facets.reserve(complex.facets().size());
  for (const auto& f : complex.facets()) facets.push_back(sigma(f));
  return SimplicialComplex::generated_by(std::move(facets));
}

Graph relabel(const Graph& graph, const Relabeling& sigma) {
  std::vector<Edge> edges;
  for (const auto& [u, v] : graph.edges()) edges.emplace_back(sigma(u), sigma(v));
  return Graph(sigma(graph.vertices()), edges);
}

}  // namespace bettikit
