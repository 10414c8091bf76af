#include <gtest/gtest.h>

#include <map>

#include "bettikit/bettikit.hpp"

using namespace bettikit;

namespace {

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::BadInput;
}

}  // namespace

TEST(ConnectedSum, TwoTetrahedraMakeABipyramid) {
  auto s = simplex_boundary(3);
  auto g = canonical_gluing(s.vertices(), {0, 1, 2}, s.vertices(), {0, 1, 2});
  EXPECT_EQ(g.sigma(3), 4U);
  auto sum = connected_sum(s, s, g);
  EXPECT_EQ(sum.vertices(), (VertexSet{0, 1, 2, 3, 4}));
  EXPECT_EQ(sum.facets().size(), 6U);
  EXPECT_FALSE(sum.contains_face({0, 1, 2}));
  EXPECT_TRUE(sum.contains_face({0, 1}));
  EXPECT_TRUE(sum.is_pure());
}

TEST(ConnectedSum, TrianglesGluedAlongAnEdgeDoNotCommute) {
  auto left = complex_from_facets({{1, 2}, {2, 3}, {1, 3}});
  auto right = complex_from_facets({{1, 3}, {3, 4}, {1, 4}});
  Gluing g{{1, 3}, {1, 3}, Relabeling::identity(right.vertices())};
  auto sum = connected_sum(left, right, g);
  EXPECT_EQ(sum.facets(), (std::vector<VertexSet>{{1, 2}, {1, 4}, {2, 3}, {3, 4}}));
  EXPECT_EQ(one_skeleton(sum).edges(), (std::vector<Edge>{{1, 2}, {1, 4}, {2, 3}, {3, 4}}));
  auto graph_sum = connected_sum(one_skeleton(left), one_skeleton(right), g);
  EXPECT_EQ(graph_sum.edges(), (std::vector<Edge>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {3, 4}}));
  EXPECT_FALSE(skeleton_commutes(left, right, g));
}

TEST(ConnectedSum, GraphsKeepTheGluedClique) {
  auto k3 = complete_graph(3);
  auto g = canonical_gluing(k3.vertices(), {0, 1}, k3.vertices(), {1, 2});
  auto sum = connected_sum(k3, k3, g);
  EXPECT_EQ(sum.num_vertices(), 4U);
  EXPECT_EQ(sum.num_edges(), 5U);
  EXPECT_TRUE(sum.has_edge(0, 1));
}

TEST(ConnectedSum, GluingErrors) {
  auto s = simplex_boundary(2);
  auto k3 = complete_graph(3);
  auto c4 = cycle_graph(4);
  EXPECT_EQ(code_of([&] { connected_sum(s, s, Gluing{{}, {}, Relabeling::identity(s.vertices())}); }),
            Errc::BadGlueSize);
  EXPECT_EQ(code_of([&] { connected_sum(s, s, Gluing{{0, 1}, {0}, Relabeling::identity(s.vertices())}); }),
            Errc::SizeMismatch);
  EXPECT_EQ(code_of([&] { connected_sum(s, s, canonical_gluing(s.vertices(), {0}, s.vertices(), {0})); }),
            Errc::NotMaximalFace);
  EXPECT_EQ(code_of([&] { connected_sum(k3, c4, canonical_gluing(k3.vertices(), {0, 1}, c4.vertices(), {0, 2})); }),
            Errc::NotComplete);
  // σ leaves vertex 2 without an image.
  Gluing partial{{0, 1}, {0, 1}, Relabeling(std::map<Vertex, Vertex>{{0, 0}, {1, 1}})};
  EXPECT_EQ(code_of([&] { connected_sum(s, s, partial); }), Errc::BadRelabeling);
  // σ(F2) != F1.
  Gluing twisted{{0, 1}, {0, 1}, Relabeling(std::map<Vertex, Vertex>{{0, 0}, {1, 5}, {2, 6}})};
  EXPECT_EQ(code_of([&] { connected_sum(s, s, twisted); }), Errc::BadRelabeling);
  // σ(V2) meets V1 outside F1.
  Gluing overlap{{0, 1}, {0, 1}, Relabeling::identity(s.vertices())};
  EXPECT_EQ(code_of([&] { connected_sum(s, s, overlap); }), Errc::BadRelabeling);
}

TEST(ConnectedSum, IteratedSumReportsStepAndArity) {
  std::vector<Graph> parts{complete_graph(3), complete_graph(3), cycle_graph(4)};
  std::vector<Gluing> gluings{canonical_gluing(parts[0].vertices(), {0, 1}, parts[1].vertices(), {0, 1})};
  EXPECT_EQ(code_of([&] { iterated_sum(std::span<const Graph>(parts), std::span<const Gluing>(gluings)); }),
            Errc::ArityError);
  gluings.push_back(canonical_gluing({0, 1, 2, 3}, {0, 1, 2}, parts[2].vertices(), {0, 1, 2}));
  try {
    iterated_sum(std::span<const Graph>(parts), std::span<const Gluing>(gluings));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::NotComplete);
    EXPECT_NE(std::string(e.what()).find("step 2"), std::string::npos);
  }
}

TEST(ConnectedSum, CliquesAndFacetsOfSize) {
  auto g = one_skeleton(simplex_boundary(3));
  EXPECT_EQ(cliques_of_size(g, 3).size(), 4U);
  EXPECT_EQ(cliques_of_size(g, 4).size(), 1U);
  EXPECT_EQ(cliques_of_size(cycle_graph(5), 3).size(), 0U);
  EXPECT_EQ(cliques_of_size(cycle_graph(5), 2).front(), (VertexSet{0, 1}));
  EXPECT_EQ(facets_of_size(complex_from_facets({{1, 2, 3}, {3, 4}}), 2), (std::vector<VertexSet>{{3, 4}}));
}

class RandomSums : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomSums, GraphSumCounts) {
  Rng rng(GetParam());
  const std::size_t t = 1 + rng.below(4);
  auto g1 = random_graph_with_clique(t + rng.below(6), t, rng);
  auto g2 = random_graph_with_clique(t + rng.below(6), t, rng);
  auto gluing = random_gluing(g1.vertices(), cliques_of_size(g1, t), g2.vertices(), cliques_of_size(g2, t), rng);
  ASSERT_TRUE(gluing.has_value());
  auto sum = connected_sum(g1, g2, *gluing);
  EXPECT_EQ(sum.num_vertices(), g1.num_vertices() + g2.num_vertices() - t);
  EXPECT_EQ(sum.num_edges(), g1.num_edges() + g2.num_edges() - t * (t - 1) / 2);
  EXPECT_EQ(induced_subgraph(sum, g1.vertices()), g1);
  EXPECT_EQ(induced_subgraph(sum, gluing->sigma(g2.vertices())), relabel(g2, gluing->sigma));
}

TEST_P(RandomSums, ComplexSumDropsTheGluedFace) {
  Rng rng(GetParam());
  const std::size_t t = 2 + rng.below(3);
  auto d1 = random_pure_complex(t + 1 + rng.below(4), t, 2 + rng.below(5), rng);
  auto d2 = random_pure_complex(t + 1 + rng.below(4), t, 2 + rng.below(5), rng);
  auto gluing = random_gluing(d1.vertices(), facets_of_size(d1, t), d2.vertices(), facets_of_size(d2, t), rng);
  ASSERT_TRUE(gluing.has_value());
  auto sum = connected_sum(d1, d2, *gluing);
  EXPECT_FALSE(sum.contains_face(gluing->left_face));
  for (const auto& ridge_vertex : gluing->left_face) {
    EXPECT_TRUE(sum.contains_face(gluing->left_face.minus({ridge_vertex})));
  }
  for (const auto& f : d1.facets()) {
    if (f != gluing->left_face) {
      EXPECT_TRUE(sum.is_facet(f));
    }
  }
  if (t >= 3) {
    EXPECT_TRUE(skeleton_commutes(d1, d2, *gluing));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomSums, ::testing::Range<std::uint64_t>(1, 61));
