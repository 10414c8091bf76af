#include <gtest/gtest.h>

#include <map>

#include "bettikit/bettikit.hpp"
#include "oracles.hpp"

using namespace bettikit;

namespace {

std::vector<std::int64_t> b_of(const Graph& g, Backend backend = Backend::sweep) {
  EnumerationOptions opts;
  opts.backend = backend;
  return b_vector_bruteforce(g, opts).values();
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

TEST(Betti, SmallGraphs) {
  const auto path3 = tree(3, TreeSpec{TreeShape::path, 0, {}});
  EXPECT_EQ(b_of(path3), (std::vector<std::int64_t>{-1, 0, 1, 0}));
  EXPECT_EQ(b_bruteforce(path3, 2), 1);
  EXPECT_EQ(c_bruteforce(path3, 2), 4);

  EXPECT_EQ(b_of(cycle_graph(5)), (std::vector<std::int64_t>{-1, 0, 5, 5, 0, 0}));
  EXPECT_EQ(b_of(cycle_graph(4)), (std::vector<std::int64_t>{-1, 0, 2, 0, 0}));
  EXPECT_EQ(c_vector_bruteforce(complete_graph(2)).values(), (std::vector<std::int64_t>{0, 2, 1}));

  std::vector<Edge> edges;
  for (Vertex u = 0; u < 5; ++u) {
    for (Vertex v = u + 1; v < 5; ++v) {
      if (!(u == 0 && v == 1)) edges.emplace_back(u, v);
    }
  }
  Graph k5_minus(VertexSet{0, 1, 2, 3, 4}, edges);
  EXPECT_EQ(b_of(k5_minus), (std::vector<std::int64_t>{-1, 0, 1, 0, 0, 0}));
  EXPECT_EQ(c_bruteforce(k5_minus, 2), 11);

  const std::vector<std::int64_t> tree4{-1, 0, 3, 2, 0};
  EXPECT_EQ(b_of(tree(4, TreeSpec{TreeShape::path, 0, {}})), tree4);
  EXPECT_EQ(b_of(tree(4, TreeSpec{TreeShape::star, 0, {}})), tree4);
}

TEST(Betti, StackedSkeleton) {
  EXPECT_EQ(b_vector_of_complex(stacked_boundary(3, 6, 1)).values(),
            (std::vector<std::int64_t>{-1, 0, 3, 2, 0, 0, 0}));
}

TEST(Betti, OutOfRangeAndConversion) {
  auto b = b_vector_bruteforce(cycle_graph(4));
  EXPECT_EQ(b[-1], 0);
  EXPECT_EQ(b[9], 0);
  EXPECT_EQ(b_bruteforce(cycle_graph(4), 7), 0);
  auto c = b.as(BettiKind::c);
  EXPECT_EQ(c.values(), (std::vector<std::int64_t>{0, 4, 8, 4, 1}));
  EXPECT_EQ(c.as(BettiKind::b), b);
}

TEST(Betti, Errors) {
  EXPECT_EQ(code_of([] { b_vector_bruteforce(complete_graph(25)); }), Errc::VertexCapExceeded);
  EXPECT_EQ(code_of([] { b_ngon(2, 1); }), Errc::BadSize);
  EXPECT_EQ(code_of([] { b_complete_sum(0, 2, 1); }), Errc::BadSize);
  EXPECT_EQ(code_of([] { b_stacked(3, 3, 1); }), Errc::BadSize);
  EXPECT_EQ(code_of([] { b_stacked(5, 1, 1); }), Errc::BadDimension);
  auto b = b_vector_bruteforce(complete_graph(3));
  auto c = c_vector_bruteforce(complete_graph(3));
  EXPECT_EQ(code_of([&] { c_sum_formula(b, c, 2, 1); }), Errc::KindMismatch);
  EXPECT_EQ(code_of([&] { b_sum_formula(b, c, 2, 1); }), Errc::KindMismatch);
  EXPECT_EQ(code_of([&] { b_sum_formula(b, b, 0, 1); }), Errc::BadGlueSize);
}

TEST(Binomial, MatchesPascalTriangle) {
  const auto tri = oracle::pascal(200);
  for (std::int64_t a = 0; a <= 200; ++a) {
    for (std::int64_t b = 0; b <= a; ++b) {
      ASSERT_EQ(binomial(a, b), tri[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) << a << "," << b;
    }
  }
  EXPECT_EQ(binomial(5, 6), 0);
  EXPECT_EQ(binomial(-1, 0), 0);
  EXPECT_EQ(binomial(4, -1), 0);
  EXPECT_EQ(binomial(100, 50).str(), "100891344545564193334812497256");
}

TEST(ClosedForms, PolygonAgreesWithOracle) {
  for (std::size_t n = 3; n <= 12; ++n) {
    auto b = oracle::b_vector(cycle_graph(n));
    for (std::size_t k = 0; k <= n; ++k) {
      EXPECT_EQ(b_ngon(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)), b[k]) << n << " " << k;
    }
    EXPECT_EQ(b_stacked(static_cast<std::int64_t>(n), 2, 2), b_ngon(static_cast<std::int64_t>(n), 2));
  }
}

TEST(ClosedForms, ShiftedBinomialFamilies) {
  for (std::int64_t n = 0; n <= 20; ++n) {
    for (std::int64_t k = 0; k <= n + 2; ++k) {
      const BigInt expected = BigInt(k - 1) * binomial(n, k);
      EXPECT_EQ(b_tree(n, k), expected);
      if (n >= 1) {
        EXPECT_EQ(b_complete_sum(n, 3, k), expected);
      }
      if (n >= 4) {
        EXPECT_EQ(b_stacked(n, 3, k), BigInt(k - 1) * binomial(n - 3, k));
      }
    }
  }
}

class RandomGraphs : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(RandomGraphs, BruteForceMatchesOracle) {
  Rng rng(GetParam());
  auto g = random_graph(1 + rng.below(11), rng.unit(), rng);
  const auto expected = oracle::b_vector(g);
  EXPECT_EQ(b_of(g), expected);
  EXPECT_EQ(b_of(g, Backend::per_k), expected);
  for (std::size_t k = 0; k < expected.size(); ++k) {
    EXPECT_EQ(c_bruteforce(g, static_cast<std::int64_t>(k)), oracle::c_k(g, k));
  }
}

TEST_P(RandomGraphs, RelabelingDoesNotChangeB) {
  Rng rng(GetParam());
  auto g = random_graph(2 + rng.below(10), rng.unit(), rng);
  std::vector<Vertex> targets;
  for (Vertex v : g.vertices()) targets.push_back(7 * v + 40);
  rng.shuffle(targets);
  std::map<Vertex, Vertex> pairs;
  for (std::size_t i = 0; i < targets.size(); ++i) pairs[g.vertices()[i]] = targets[i];
  EXPECT_EQ(b_vector_bruteforce(relabel(g, Relabeling(pairs))), b_vector_bruteforce(g));
}

TEST_P(RandomGraphs, SumRecurrencesHold) {
  Rng rng(GetParam());
  const std::size_t t = 1 + rng.below(4);
  auto g1 = random_graph_with_clique(t + rng.below(7), t, rng);
  auto g2 = random_graph_with_clique(t + rng.below(7), t, rng);
  auto gluing = random_gluing(g1.vertices(), cliques_of_size(g1, t), g2.vertices(), cliques_of_size(g2, t), rng);
  auto sum = connected_sum(g1, g2, *gluing);
  const auto b = oracle::b_vector(sum);
  const auto tt = static_cast<std::int64_t>(t);
  auto b1 = b_vector_bruteforce(g1);
  auto b2 = b_vector_bruteforce(g2);
  auto c1 = c_vector_bruteforce(g1);
  auto c2 = c_vector_bruteforce(g2);
  for (std::size_t k = 0; k < b.size(); ++k) {
    const auto kk = static_cast<std::int64_t>(k);
    EXPECT_EQ(b_sum_formula(b1, b2, tt, kk), b[k]) << "k=" << k;
    EXPECT_EQ(c_sum_formula(c1, c2, tt, kk), oracle::c_k(sum, k)) << "k=" << k;
  }
  EXPECT_EQ(b_sum_formula(b1, b2, tt, static_cast<std::int64_t>(b.size())), 0);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomGraphs, ::testing::Range<std::uint64_t>(1, 51));
