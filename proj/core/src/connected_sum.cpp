#include "bettikit/connected_sum.hpp"

#include <functional>

#include "bettikit/error.hpp"

namespace bettikit {
namespace {

void check_sizes(const Gluing& gluing) {
  if (gluing.left_face.empty()) throw Error(Errc::BadGlueSize, "glue size t must be at least 1");
  if (gluing.left_face.size() != gluing.right_face.size()) {
    throw Error(Errc::SizeMismatch, "|F1| = " + std::to_string(gluing.left_face.size()) +
                                        " but |F2| = " + std::to_string(gluing.right_face.size()));
  }
}

void check_relabeling(const VertexSet& left_vertices, const VertexSet& right_vertices, const Gluing& gluing) {
  const auto& sigma = gluing.sigma;
  for (Vertex v : right_vertices) {
    if (!sigma.find(v)) throw Error(Errc::BadRelabeling, "right vertex " + std::to_string(v) + " has no image");
  }
  if (sigma(gluing.right_face) != gluing.left_face) {
    throw Error(Errc::BadRelabeling,
                "sigma(F2) = " + to_string(sigma(gluing.right_face)) + " differs from F1 = " + to_string(gluing.left_face));
  }
  VertexSet overlap = sigma(right_vertices).intersect(left_vertices);
  if (overlap != gluing.left_face) {
    throw Error(Errc::BadRelabeling,
                "relabeled right vertices meet the left ones in " + to_string(overlap) + ", not F1");
  }
}

template <typename Part>
Part fold(std::span<const Part> parts, std::span<const Gluing> gluings) {
  if (parts.empty()) throw Error(Errc::EmptyInput, "no parts to sum");
  if (gluings.size() + 1 != parts.size()) {
    throw Error(Errc::ArityError, std::to_string(parts.size()) + " parts need " + std::to_string(parts.size() - 1) +
                                      " gluings, got " + std::to_string(gluings.size()));
  }
  Part acc = parts[0];
  for (std::size_t i = 0; i < gluings.size(); ++i) {
    try {
      acc = connected_sum(acc, parts[i + 1], gluings[i]);
    } catch (const Error& e) {
      throw Error(e.code(), "step " + std::to_string(i + 1) + ": " + e.detail());
    }
  }
  return acc;
}

}  // namespace

Relabeling canonical_relabeling(const VertexSet& left_vertices, const VertexSet& left_face,
                                const VertexSet& right_vertices, const VertexSet& right_face) {
  if (left_face.size() != right_face.size()) {
    throw Error(Errc::SizeMismatch, "glue faces " + to_string(left_face) + " and " + to_string(right_face));
  }
  std::map<Vertex, Vertex> pairs;
  for (std::size_t i = 0; i < right_face.size(); ++i) pairs.emplace(right_face[i], left_face[i]);
  Vertex next = left_vertices.empty() ? 0 : left_vertices.max() + 1;
  for (Vertex v : right_vertices.minus(right_face)) pairs.emplace(v, next++);
  return Relabeling(std::move(pairs));
}

Gluing canonical_gluing(const VertexSet& left_vertices, const VertexSet& left_face, const VertexSet& right_vertices,
                        const VertexSet& right_face) {
  return {left_face, right_face, canonical_relabeling(left_vertices, left_face, right_vertices, right_face)};
}

SimplicialComplex connected_sum(const SimplicialComplex& left, const SimplicialComplex& right, const Gluing& gluing) {
  check_sizes(gluing);
  if (!left.is_facet(gluing.left_face)) {
    throw Error(Errc::NotMaximalFace, "F1 = " + to_string(gluing.left_face) + " is not a facet of the left complex");
  }
  if (!right.is_facet(gluing.right_face)) {
    throw Error(Errc::NotMaximalFace, "F2 = " + to_string(gluing.right_face) + " is not a facet of the right complex");
  }
  check_relabeling(left.vertices(), right.vertices(), gluing);

  const VertexSet& glued = gluing.left_face;
  std::vector<VertexSet> generators;
  for (const auto& f : left.facets()) {
    if (f != glued) generators.push_back(f);
  }
  for (const auto& f : right.facets()) {
    VertexSet image = gluing.sigma(f);
    if (image != glued) generators.push_back(std::move(image));
  }
  // Removing F1 keeps its boundary; ridges not covered elsewhere become facets.
  for (Vertex dropped : glued) {
    VertexSet ridge = glued.minus(VertexSet{dropped});
    if (!ridge.empty()) generators.push_back(std::move(ridge));
  }
  return SimplicialComplex::generated_by(std::move(generators));
}

Graph connected_sum(const Graph& left, const Graph& right, const Gluing& gluing) {
  check_sizes(gluing);
  if (!left.is_clique(gluing.left_face)) {
    throw Error(Errc::NotComplete, "F1 = " + to_string(gluing.left_face) + " does not induce a complete graph");
  }
  if (!right.is_clique(gluing.right_face)) {
    throw Error(Errc::NotComplete, "F2 = " + to_string(gluing.right_face) + " does not induce a complete graph");
  }
  check_relabeling(left.vertices(), right.vertices(), gluing);

  std::vector<Edge> edges = left.edges();
  for (const auto& [u, v] : right.edges()) edges.emplace_back(gluing.sigma(u), gluing.sigma(v));
  return Graph(left.vertices().unite(gluing.sigma(right.vertices())), edges);
}

SimplicialComplex iterated_sum(std::span<const SimplicialComplex> parts, std::span<const Gluing> gluings) {
  return fold(parts, gluings);
}

Graph iterated_sum(std::span<const Graph> parts, std::span<const Gluing> gluings) { return fold(parts, gluings); }

bool skeleton_commutes(const SimplicialComplex& left, const SimplicialComplex& right, const Gluing& gluing) {
  Graph of_sum = one_skeleton(connected_sum(left, right, gluing));
  Graph sum_of = connected_sum(one_skeleton(left), one_skeleton(right), gluing);
  return of_sum == sum_of;
}

std::vector<VertexSet> cliques_of_size(const Graph& graph, std::size_t t) {
  std::vector<VertexSet> out;
  if (t == 0) return out;
  const std::size_t n = graph.num_vertices();
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> extend = [&](std::size_t start) {
    if (chosen.size() == t) {
      std::vector<Vertex> labels;
      for (auto i : chosen) labels.push_back(graph.label_of(i));
      out.emplace_back(std::move(labels));
      return;
    }
    for (std::size_t v = start; v + (t - chosen.size()) <= n; ++v) {
      bool joins = true;
      for (auto u : chosen) joins = joins && graph.has_edge_dense(u, v);
      if (!joins) continue;
      chosen.push_back(v);
      extend(v + 1);
      chosen.pop_back();
    }
  };
  extend(0);
  return out;
}

std::vector<VertexSet> facets_of_size(const SimplicialComplex& complex, std::size_t t) {
  std::vector<VertexSet> out;
  for (const auto& f : complex.facets()) {
    if (f.size() == t) out.push_back(f);
  }
  return out;
}

}  // namespace bettikit
