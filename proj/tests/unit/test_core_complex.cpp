#include <gtest/gtest.h>

#include <map>

#include "bettikit/bettikit.hpp"
#include "oracles.hpp"

using namespace bettikit;

namespace {

SimplicialComplex tetra_boundary() { return complex_from_facets({{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}); }

}  // namespace

TEST(VertexSet, SortsAndDeduplicates) {
  VertexSet s{3, 1, 3, 2};
  EXPECT_EQ(s.members(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_EQ(to_string(s), "{1,2,3}");
  EXPECT_EQ(s.intersect({2, 3, 9}), (VertexSet{2, 3}));
  EXPECT_EQ(s.unite({0}), (VertexSet{0, 1, 2, 3}));
  EXPECT_EQ(s.minus({1}), (VertexSet{2, 3}));
  EXPECT_TRUE((VertexSet{1, 3}).is_subset_of(s));
}

TEST(Complex, FromFacetsAbsorbsSubfaces) {
  auto c = complex_from_facets({{1, 2}, {1}, {2, 3}, {1, 2}});
  EXPECT_EQ(c.facets(), (std::vector<VertexSet>{{1, 2}, {2, 3}}));
  EXPECT_EQ(c.vertices(), (VertexSet{1, 2, 3}));
  EXPECT_EQ(c.dimension(), 1);
  EXPECT_TRUE(c.is_pure());
  EXPECT_TRUE(c.contains_face({2}));
  EXPECT_FALSE(c.contains_face({1, 3}));
}

TEST(Complex, Errors) {
  try {
    complex_from_facets({});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::EmptyInput);
  }
  std::vector<VertexSet> many;
  for (Vertex v = 0; v < 30; ++v) many.push_back({v});
  try {
    complex_from_facets(many, Limits{24, 1 << 22});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::VertexCapExceeded);
  }
}

TEST(Complex, InducedSubcomplexOfTetrahedronBoundary) {
  auto c = tetra_boundary();
  EXPECT_EQ(c.dimension(), 2);
  auto w = induced_subcomplex(c, {1, 2});
  EXPECT_EQ(w.facets(), (std::vector<VertexSet>{{1, 2}}));
  auto full = induced_subcomplex(c, {1, 2, 3, 4});
  EXPECT_EQ(full, c);
  EXPECT_TRUE(induced_subcomplex(c, {}).is_empty_complex());
  EXPECT_EQ(induced_subcomplex(c, {1, 2, 3, 7}).vertices(), (VertexSet{1, 2, 3}));
}

TEST(Graph, SkeletonAndComponents) {
  auto g = one_skeleton(complex_from_facets({{1, 2}, {2, 3}, {5}}));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}, {2, 3}}));
  auto comps = connected_components(g);
  ASSERT_EQ(comps.size(), 2U);
  EXPECT_EQ(comps[0], (VertexSet{1, 2, 3}));
  EXPECT_EQ(comps[1], (VertexSet{5}));
  EXPECT_TRUE(g.is_clique({1, 2}));
  EXPECT_FALSE(g.is_clique({1, 3}));
  EXPECT_THROW(Graph({1, 2}, {{1, 1}}), Error);
  EXPECT_THROW(Graph({1, 2}, {{1, 3}}), Error);
}

TEST(Relabeling, RejectsCollisionsAndMissingVertices) {
  EXPECT_THROW(Relabeling(std::map<Vertex, Vertex>{{1, 5}, {2, 5}}), Error);
  Relabeling s(std::map<Vertex, Vertex>{{1, 10}, {2, 20}});
  EXPECT_EQ(s(VertexSet{1, 2}), (VertexSet{10, 20}));
  try {
    s(3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::IncompleteRelabeling);
  }
}

// Properties over random complexes.

class RandomComplexes : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomComplexes, SubcomplexComponentsMatchSubgraph) {
  Rng rng(GetParam());
  auto c = random_complex(1 + rng.below(7), 1 + rng.below(4), rng);
  auto g = one_skeleton(c);
  const auto& vs = c.vertices().members();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << vs.size()); ++mask) {
    std::vector<Vertex> w;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (mask >> i & 1) w.push_back(vs[i]);
    }
    VertexSet ws(w);
    auto sub = induced_subcomplex(c, ws);
    EXPECT_EQ(one_skeleton(sub), induced_subgraph(g, ws));
    EXPECT_EQ(connected_components(one_skeleton(sub)).size(), connected_components(induced_subgraph(g, ws)).size());
    EXPECT_EQ(static_cast<int>(connected_components(induced_subgraph(g, ws)).size()), oracle::components(w, g.edges()));
  }
}

TEST_P(RandomComplexes, ComponentsPartitionVertices) {
  Rng rng(GetParam());
  auto g = random_graph(1 + rng.below(12), rng.unit(), rng);
  VertexSet seen;
  std::size_t total = 0;
  for (const auto& comp : connected_components(g)) {
    EXPECT_FALSE(comp.empty());
    EXPECT_TRUE(seen.intersect(comp).empty());
    seen = seen.unite(comp);
    total += comp.size();
  }
  EXPECT_EQ(seen, g.vertices());
  EXPECT_EQ(total, g.num_vertices());
}

TEST_P(RandomComplexes, RelabelCommutesWithRestriction) {
  Rng rng(GetParam());
  auto c = random_complex(2 + rng.below(6), 1 + rng.below(4), rng);
  std::vector<Vertex> targets;
  for (Vertex v : c.vertices()) targets.push_back(100 + v * 3);
  rng.shuffle(targets);
  std::map<Vertex, Vertex> pairs;
  for (std::size_t i = 0; i < targets.size(); ++i) pairs[c.vertices()[i]] = targets[i];
  Relabeling sigma(pairs);

  VertexSet w({c.vertices()[0], c.vertices().max()});
  EXPECT_EQ(relabel(induced_subcomplex(c, w), sigma), induced_subcomplex(relabel(c, sigma), sigma(w)));
  EXPECT_EQ(relabel(one_skeleton(c), sigma), one_skeleton(relabel(c, sigma)));
  EXPECT_EQ(relabel(c, sigma).facets().size(), c.facets().size());
}

TEST_P(RandomComplexes, RestrictionComposes) {
  Rng rng(GetParam());
  auto c = random_complex(3 + rng.below(6), 1 + rng.below(4), rng);
  std::vector<Vertex> a, b;
  for (Vertex v : c.vertices()) {
    if (rng.chance(0.7)) a.push_back(v);
    if (rng.chance(0.7)) b.push_back(v);
  }
  VertexSet va(a), vb(b);
  EXPECT_EQ(induced_subcomplex(induced_subcomplex(c, va), vb), induced_subcomplex(c, va.intersect(vb)));
  const auto restricted = induced_subcomplex(c, va);
  for (const auto& f : restricted.facets()) EXPECT_TRUE(f.is_subset_of(va));
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomComplexes, ::testing::Range<std::uint64_t>(1, 41));
