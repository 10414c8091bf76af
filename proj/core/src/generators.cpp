#include "bettikit/generators.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "bettikit/error.hpp"

namespace bettikit {

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error(Errc::BadInput, "empty range");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t draw = engine_();
  while (draw >= limit) draw = engine_();
  return draw % bound;
}

double Rng::unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

SimplicialComplex simplex_boundary(int d) {
  if (d < 1) throw Error(Errc::BadDimension, "simplex dimension must be at least 1");
  std::vector<VertexSet> facets;
  for (int skip = 0; skip <= d; ++skip) {
    std::vector<Vertex> f;
    for (int v = 0; v <= d; ++v) {
      if (v != skip) f.push_back(static_cast<Vertex>(v));
    }
    facets.emplace_back(std::move(f));
  }
  return SimplicialComplex::generated_by(std::move(facets));
}

namespace {

void check_stacked(int d, int n) {
  if (d < 2) throw Error(Errc::BadDimension, "stacked polytopes need d >= 2");
  if (n < d + 1) throw Error(Errc::BadSize, "a stacked d-polytope has at least d+1 vertices");
}

SimplicialComplex stack_on(const SimplicialComplex& complex, const VertexSet& facet, Vertex apex) {
  std::vector<VertexSet> facets;
  for (const auto& f : complex.facets()) {
    if (f != facet) facets.push_back(f);
  }
  for (Vertex dropped : facet) facets.push_back(facet.minus(VertexSet{dropped}).unite(VertexSet{apex}));
  return SimplicialComplex::generated_by(std::move(facets));
}

}  // namespace

SimplicialComplex stacked_boundary(int d, int n, std::uint64_t seed) {
  check_stacked(d, n);
  Rng rng(seed);
  SimplicialComplex complex = simplex_boundary(d);
  for (int v = d + 1; v < n; ++v) {
    const auto& facets = complex.facets();
    VertexSet chosen = facets[rng.below(facets.size())];
    complex = stack_on(complex, chosen, static_cast<Vertex>(v));
  }
  return complex;
}

SimplicialComplex stacked_boundary(int d, int n, std::span<const VertexSet> choices) {
  check_stacked(d, n);
  if (choices.size() != static_cast<std::size_t>(n - d - 1)) {
    throw Error(Errc::BadSize, std::to_string(n - d - 1) + " stacking choices needed, got " +
                                   std::to_string(choices.size()));
  }
  SimplicialComplex complex = simplex_boundary(d);
  for (std::size_t step = 0; step < choices.size(); ++step) {
    if (!complex.is_facet(choices[step])) {
      throw Error(Errc::BadFacetChoice,
                  "step " + std::to_string(step + 1) + ": " + to_string(choices[step]) + " is not a current facet");
    }
    complex = stack_on(complex, choices[step], static_cast<Vertex>(d + 1 + static_cast<int>(step)));
  }
  return complex;
}

namespace {

VertexSet range_set(std::size_t n) {
  std::vector<Vertex> v(n);
  std::iota(v.begin(), v.end(), Vertex{0});
  return VertexSet(std::move(v));
}

}  // namespace

Graph complete_graph(std::size_t n) {
  if (n < 1) throw Error(Errc::BadSize, "K_n needs n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(range_set(n), edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw Error(Errc::BadSize, "a cycle needs n >= 3");
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return Graph(range_set(n), edges);
}

Graph tree_from_prufer(std::size_t n, std::span<const Vertex> code) {
  if (n < 2) {
    if (!code.empty()) throw Error(Errc::BadPruferCode, "trees on fewer than 2 vertices have an empty code");
    if (n == 0) throw Error(Errc::BadSize, "a tree needs at least one vertex");
    return Graph(range_set(1), {});
  }
  if (code.size() != n - 2) {
    throw Error(Errc::BadPruferCode,
                "code for " + std::to_string(n) + " vertices needs length " + std::to_string(n - 2));
  }
  std::vector<std::size_t> degree(n, 1);
  for (Vertex a : code) {
    if (a >= n) throw Error(Errc::BadPruferCode, "label " + std::to_string(a) + " out of range");
    ++degree[a];
  }
  std::vector<Edge> edges;
  for (Vertex a : code) {
    Vertex leaf = 0;
    while (degree[leaf] != 1) ++leaf;
    edges.emplace_back(leaf, a);
    --degree[leaf];
    --degree[a];
  }
  std::vector<Vertex> last;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] == 1) last.push_back(v);
  }
  edges.emplace_back(last[0], last[1]);
  return Graph(range_set(n), edges);
}

Graph tree(std::size_t n, const TreeSpec& spec) {
  if (n < 1) throw Error(Errc::BadSize, "a tree needs at least one vertex");
  std::vector<Edge> edges;
  switch (spec.shape) {
    case TreeShape::path:
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(v - 1, v);
      return Graph(range_set(n), edges);
    case TreeShape::star:
      for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
      return Graph(range_set(n), edges);
    case TreeShape::random: {
      Rng rng(spec.seed);
      std::vector<Vertex> code(n >= 2 ? n - 2 : 0);
      for (auto& a : code) a = static_cast<Vertex>(rng.below(n));
      return tree_from_prufer(n, code);
    }
    case TreeShape::prufer:
      return tree_from_prufer(n, spec.prufer_code);
  }
  throw Error(Errc::BadInput, "unknown tree shape");
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (rng.chance(p)) edges.emplace_back(u, v);
    }
  }
  return Graph(range_set(n), edges);
}

Graph random_graph_with_clique(std::size_t n, std::size_t t, Rng& rng) {
  if (t < 1 || t > n) throw Error(Errc::BadSize, "need 1 <= t <= n for a t-clique");
  for (;;) {
    const double p = 0.2 + 0.7 * rng.unit();
    Graph g = random_graph(n, p, rng);
    if (!cliques_of_size(g, t).empty()) return g;
  }
}

namespace {

VertexSet random_subset(std::size_t n, std::size_t size, Rng& rng) {
  std::vector<Vertex> pool(n);
  std::iota(pool.begin(), pool.end(), Vertex{0});
  rng.shuffle(pool);
  pool.resize(size);
  return VertexSet(std::move(pool));
}

}  // namespace

SimplicialComplex random_complex(std::size_t n, std::size_t max_facet_size, Rng& rng) {
  if (n < 1 || max_facet_size < 1) throw Error(Errc::BadSize, "random complex needs n >= 1 and facets of size >= 1");
  const std::size_t largest = std::min(n, max_facet_size);
  const std::size_t count = 1 + rng.below(2 * n);
  std::vector<VertexSet> facets;
  for (std::size_t i = 0; i < count; ++i) facets.push_back(random_subset(n, 1 + rng.below(largest), rng));
  for (Vertex v = 0; v < n; ++v) facets.push_back(VertexSet{v});
  return SimplicialComplex::generated_by(std::move(facets));
}

SimplicialComplex random_pure_complex(std::size_t n, std::size_t facet_size, std::size_t facet_count, Rng& rng) {
  if (facet_size < 1 || facet_size > n || facet_count < 1) throw Error(Errc::BadSize, "bad random pure complex shape");
  std::vector<VertexSet> facets;
  for (std::size_t i = 0; i < facet_count; ++i) facets.push_back(random_subset(n, facet_size, rng));
  return SimplicialComplex::generated_by(std::move(facets));
}

std::optional<Gluing> random_gluing(const VertexSet& left_vertices, std::span<const VertexSet> left_candidates,
                                    const VertexSet& right_vertices, std::span<const VertexSet> right_candidates,
                                    Rng& rng) {
  if (left_candidates.empty() || right_candidates.empty()) return std::nullopt;
  const VertexSet& f1 = left_candidates[rng.below(left_candidates.size())];
  const VertexSet& f2 = right_candidates[rng.below(right_candidates.size())];
  if (f1.size() != f2.size()) return std::nullopt;

  std::vector<Vertex> targets(f1.begin(), f1.end());
  rng.shuffle(targets);
  std::map<Vertex, Vertex> pairs;
  for (std::size_t i = 0; i < f2.size(); ++i) pairs.emplace(f2[i], targets[i]);

  // Fresh labels drawn from a window above the left labels, in random order.
  const VertexSet rest = right_vertices.minus(f2);
  const Vertex base = left_vertices.empty() ? 0 : left_vertices.max() + 1;
  std::vector<Vertex> fresh(2 * rest.size());
  std::iota(fresh.begin(), fresh.end(), base);
  rng.shuffle(fresh);
  for (std::size_t i = 0; i < rest.size(); ++i) pairs.emplace(rest[i], fresh[i]);
  return Gluing{f1, f2, Relabeling(std::move(pairs))};
}

}  // namespace bettikit
