#include <gtest/gtest.h>

#include <map>
#include <set>

#include "bettikit/bettikit.hpp"

using namespace bettikit;

namespace {

// Every ridge lies in exactly two facets.
bool is_pseudomanifold(const SimplicialComplex& c) {
  std::map<VertexSet, int> ridges;
  for (const auto& f : c.facets()) {
    for (Vertex v : f) ++ridges[f.minus({v})];
  }
  for (const auto& [ridge, count] : ridges) {
    if (count != 2) return false;
  }
  return !ridges.empty();
}

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

TEST(Rng, FixedSequence) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.below(1000), b.below(1000));
  Rng c(1);
  for (int i = 0; i < 1000; ++i) {
    auto x = c.below(7);
    EXPECT_LT(x, 7U);
    double u = c.unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
  EXPECT_THROW(c.below(0), Error);
}

TEST(Generators, SimplexBoundary) {
  auto s = simplex_boundary(3);
  EXPECT_EQ(s.facets().size(), 4U);
  EXPECT_EQ(s.vertices(), (VertexSet{0, 1, 2, 3}));
  EXPECT_TRUE(is_pseudomanifold(s));
  EXPECT_EQ(code_of([] { simplex_boundary(0); }), Errc::BadDimension);
}

TEST(Generators, StackedBoundaryShape) {
  for (int d = 2; d <= 6; ++d) {
    for (int n = d + 1; n <= d + 6; ++n) {
      for (std::uint64_t seed = 0; seed < 3; ++seed) {
        auto c = stacked_boundary(d, n, seed);
        EXPECT_EQ(c.num_vertices(), static_cast<std::size_t>(n));
        EXPECT_EQ(c.facets().size(), static_cast<std::size_t>(d + 1 + (n - d - 1) * (d - 1)));
        EXPECT_TRUE(c.is_pure());
        EXPECT_EQ(c.dimension(), d - 1);
        EXPECT_TRUE(is_pseudomanifold(c)) << "d=" << d << " n=" << n;
        EXPECT_EQ(c, stacked_boundary(d, n, seed));
      }
    }
  }
  EXPECT_EQ(code_of([] { stacked_boundary(1, 4, 0); }), Errc::BadDimension);
  EXPECT_EQ(code_of([] { stacked_boundary(3, 3, 0); }), Errc::BadSize);
}

TEST(Generators, StackingIsASumWithASimplexBoundary) {
  Rng rng(99);
  for (int d = 2; d <= 5; ++d) {
    const auto block = simplex_boundary(d);
    VertexSet base_face;
    for (Vertex v = 0; v < static_cast<Vertex>(d); ++v) base_face = base_face.unite({v});
    auto acc = block;
    std::vector<VertexSet> choices;
    for (int step = 0; step < 5; ++step) {
      const auto& f = acc.facets()[rng.below(acc.facets().size())];
      choices.push_back(f);
      acc = connected_sum(acc, block, canonical_gluing(acc.vertices(), f, block.vertices(), base_face));
    }
    EXPECT_EQ(stacked_boundary(d, d + 6, choices), acc) << "d=" << d;
  }
}

TEST(Generators, StackingChoiceErrors) {
  std::vector<VertexSet> none;
  EXPECT_EQ(code_of([&] { stacked_boundary(3, 5, none); }), Errc::BadSize);
  std::vector<VertexSet> bad{{0, 1}};
  EXPECT_EQ(code_of([&] { stacked_boundary(3, 5, bad); }), Errc::BadFacetChoice);
}

TEST(Generators, GraphFamilies) {
  EXPECT_EQ(complete_graph(5).num_edges(), 10U);
  EXPECT_EQ(cycle_graph(6).num_edges(), 6U);
  EXPECT_TRUE(cycle_graph(6).has_edge(5, 0));
  EXPECT_EQ(code_of([] { cycle_graph(2); }), Errc::BadSize);
  auto path = tree(4, TreeSpec{TreeShape::path, 0, {}});
  EXPECT_EQ(path.edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
  auto star = tree(4, TreeSpec{TreeShape::star, 0, {}});
  EXPECT_EQ(star.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {0, 3}}));
}

TEST(Generators, Prufer) {
  std::vector<Vertex> code{3, 3, 3};
  auto star = tree_from_prufer(5, code);
  EXPECT_EQ(star.edges(), (std::vector<Edge>{{0, 3}, {1, 3}, {2, 3}, {3, 4}}));
  std::vector<Vertex> path_code{1, 2};
  EXPECT_EQ(tree_from_prufer(4, path_code).edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
  std::vector<Vertex> short_code{1};
  EXPECT_EQ(code_of([&] { tree_from_prufer(5, short_code); }), Errc::BadPruferCode);
  std::vector<Vertex> out_of_range{9, 0, 0};
  EXPECT_EQ(code_of([&] { tree_from_prufer(5, out_of_range); }), Errc::BadPruferCode);
  EXPECT_EQ(code_of([] { tree(0, TreeSpec{TreeShape::path, 0, {}}); }), Errc::BadSize);
}

TEST(Generators, RandomTreesAreTrees) {
  for (std::size_t n = 1; n <= 15; ++n) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      auto t = tree(n, TreeSpec{TreeShape::random, seed, {}});
      EXPECT_EQ(t.num_vertices(), n);
      EXPECT_EQ(t.num_edges(), n - 1);
      EXPECT_EQ(connected_components(t).size(), 1U);
    }
  }
}

TEST(Generators, RandomGraphWithClique) {
  Rng rng(5);
  for (int i = 0; i < 50; ++i) {
    const std::size_t t = 1 + rng.below(4);
    auto g = random_graph_with_clique(t + rng.below(6), t, rng);
    EXPECT_FALSE(cliques_of_size(g, t).empty());
  }
  EXPECT_EQ(code_of([&] { random_graph_with_clique(3, 4, rng); }), Errc::BadSize);
}

TEST(Generators, RandomGluingIsValid) {
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    auto g1 = random_graph_with_clique(3 + rng.below(5), 3, rng);
    auto g2 = random_graph_with_clique(3 + rng.below(5), 3, rng);
    auto gluing = random_gluing(g1.vertices(), cliques_of_size(g1, 3), g2.vertices(), cliques_of_size(g2, 3), rng);
    ASSERT_TRUE(gluing.has_value());
    EXPECT_EQ(gluing->sigma(gluing->right_face), gluing->left_face);
    EXPECT_EQ(gluing->sigma(g2.vertices()).intersect(g1.vertices()), gluing->left_face);
    EXPECT_EQ(gluing->sigma.domain(), g2.vertices());
  }
  std::vector<VertexSet> empty;
  EXPECT_FALSE(random_gluing({0}, empty, {0}, empty, rng).has_value());
}
