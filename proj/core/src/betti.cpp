#include "bettikit/betti.hpp"

#include <array>
#include <bit>
#include <numeric>

#include "bettikit/enumeration.hpp"
#include "bettikit/error.hpp"

namespace bettikit {
namespace {

std::int64_t small_binomial(std::size_t n, std::size_t k) {
  return binomial(static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)).convert_to<std::int64_t>();
}

void check_cap(std::size_t n, const Limits& limits) {
  const std::size_t cap = std::min(limits.vertex_cap, kMaxMaskVertices);
  if (n > cap) {
    throw Error(Errc::VertexCapExceeded,
                std::to_string(n) + " vertices exceed the brute-force cap of " + std::to_string(cap));
  }
}

std::vector<std::uint64_t> neighbour_rows(const Graph& graph) {
  std::vector<std::uint64_t> rows(graph.num_vertices());
  for (std::size_t v = 0; v < rows.size(); ++v) rows[v] = graph.neighbour_mask(v);
  return rows;
}

std::vector<std::int64_t> component_sums_sweep(std::span<const std::uint64_t> rows, unsigned threads) {
  const std::size_t n = rows.size();
  auto partials = run_in_ranges(std::uint64_t{1} << n, threads, [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::int64_t> acc(n + 1, 0);
    for (std::uint64_t mask = lo; mask < hi; ++mask) acc[std::popcount(mask)] += count_components(rows, mask);
    return acc;
  });
  std::vector<std::int64_t> total(n + 1, 0);
  for (const auto& part : partials) {
    for (std::size_t k = 0; k <= n; ++k) total[k] += part[k];
  }
  return total;
}

std::int64_t component_sum_for_k(std::span<const std::uint64_t> rows, std::int64_t k) {
  std::int64_t sum = 0;
  for_each_k_subset(static_cast<unsigned>(rows.size()), static_cast<int>(k),
                    [&](std::uint64_t mask) { sum += count_components(rows, mask); });
  return sum;
}

std::vector<std::int64_t> component_sums_per_k(std::span<const std::uint64_t> rows, unsigned threads) {
  const std::size_t n = rows.size();
  // Cardinalities are dealt round-robin to workers; each k is owned by one.
  const std::uint64_t workers = std::min<std::uint64_t>(resolve_threads(threads), n + 1);
  auto partials = run_in_ranges(workers, threads, [&](std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::int64_t> acc(n + 1, 0);
    for (std::uint64_t w = lo; w < hi; ++w) {
      for (std::size_t k = w; k <= n; k += workers) acc[k] = component_sum_for_k(rows, static_cast<std::int64_t>(k));
    }
    return acc;
  });
  std::vector<std::int64_t> total(n + 1, 0);
  for (const auto& part : partials) {
    for (std::size_t k = 0; k <= n; ++k) total[k] += part[k];
  }
  return total;
}

std::int64_t vector_size(const BettiVector& v) { return static_cast<std::int64_t>(v.n()); }

void require_kind(const BettiVector& v, BettiKind kind) {
  if (v.kind() != kind) throw Error(Errc::KindMismatch, kind == BettiKind::b ? "expected b-vector" : "expected c-vector");
}

BigInt connected_sum_convolution(const BettiVector& left, const BettiVector& right, std::int64_t t, std::int64_t k) {
  if (t < 1) throw Error(Errc::BadGlueSize, "glue size t must be at least 1");
  const std::int64_t n1 = vector_size(left);
  const std::int64_t n2 = vector_size(right);
  BigInt sum = 0;
  for (std::int64_t i = 0; i <= k; ++i) {
    sum += BigInt(left[i]) * binomial(n2 - t, k - i) + BigInt(right[i]) * binomial(n1 - t, k - i);
  }
  return sum;
}

BigInt linear_strand(std::int64_t n, std::int64_t k) {
  if (k < 0) return 0;
  return BigInt(k - 1) * binomial(n, k);
}

}  // namespace

BettiVector::BettiVector(BettiKind kind, std::vector<std::int64_t> values) : kind_(kind), values_(std::move(values)) {
  if (values_.empty()) throw Error(Errc::BadSize, "a Betti vector needs at least the k = 0 entry");
}

BettiVector BettiVector::as(BettiKind kind) const {
  if (kind == kind_) return *this;
  std::vector<std::int64_t> out(values_);
  const std::int64_t sign = kind == BettiKind::c ? 1 : -1;
  for (std::size_t k = 0; k < out.size(); ++k) out[k] += sign * small_binomial(n(), k);
  return BettiVector(kind, std::move(out));
}

int count_components(std::span<const std::uint64_t> neighbours, std::uint64_t mask) {
  std::array<std::uint8_t, 64> parent{};
  auto find = [&](std::uint8_t v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  };
  int components = std::popcount(mask);
  for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
    auto v = static_cast<std::uint8_t>(std::countr_zero(rest));
    parent[v] = v;
  }
  for (std::uint64_t rest = mask; rest; rest &= rest - 1) {
    const auto v = static_cast<std::uint8_t>(std::countr_zero(rest));
    // Each internal edge is seen once, from its lower endpoint.
    std::uint64_t above = v == 63 ? 0 : ~((std::uint64_t{2} << v) - 1);
    for (std::uint64_t nb = neighbours[v] & mask & above; nb; nb &= nb - 1) {
      auto ru = find(static_cast<std::uint8_t>(std::countr_zero(nb)));
      auto rv = find(v);
      if (ru != rv) {
        parent[ru] = rv;
        --components;
      }
    }
  }
  return components;
}

BettiVector c_vector_bruteforce(const Graph& graph, const EnumerationOptions& options) {
  check_cap(graph.num_vertices(), options.limits);
  auto rows = neighbour_rows(graph);
  auto sums = options.backend == Backend::sweep ? component_sums_sweep(rows, options.threads)
                                                : component_sums_per_k(rows, options.threads);
  return BettiVector(BettiKind::c, std::move(sums));
}

BettiVector b_vector_bruteforce(const Graph& graph, const EnumerationOptions& options) {
  return c_vector_bruteforce(graph, options).as(BettiKind::b);
}

std::int64_t c_bruteforce(const Graph& graph, std::int64_t k, const EnumerationOptions& options) {
  check_cap(graph.num_vertices(), options.limits);
  if (k < 0 || k > static_cast<std::int64_t>(graph.num_vertices())) return 0;
  if (options.backend == Backend::sweep) return c_vector_bruteforce(graph, options)[k];
  return component_sum_for_k(neighbour_rows(graph), k);
}

std::int64_t b_bruteforce(const Graph& graph, std::int64_t k, const EnumerationOptions& options) {
  const std::size_t n = graph.num_vertices();
  std::int64_t c = c_bruteforce(graph, k, options);
  if (k < 0 || k > static_cast<std::int64_t>(n)) return 0;
  return c - small_binomial(n, static_cast<std::size_t>(k));
}

BettiVector b_vector_of_complex(const SimplicialComplex& complex, const EnumerationOptions& options) {
  check_cap(complex.num_vertices(), options.limits);
  return b_vector_bruteforce(one_skeleton(complex), options);
}

BigInt c_sum_formula(const BettiVector& left, const BettiVector& right, std::int64_t t, std::int64_t k) {
  require_kind(left, BettiKind::c);
  require_kind(right, BettiKind::c);
  if (k < 0) return 0;
  const std::int64_t n1 = vector_size(left);
  const std::int64_t n2 = vector_size(right);
  return connected_sum_convolution(left, right, t, k) - binomial(n1 + n2 - t, k) + binomial(n1 + n2 - 2 * t, k);
}

BigInt b_sum_formula(const BettiVector& left, const BettiVector& right, std::int64_t t, std::int64_t k) {
  require_kind(left, BettiKind::b);
  require_kind(right, BettiKind::b);
  if (k < 0) return 0;
  const std::int64_t n1 = vector_size(left);
  const std::int64_t n2 = vector_size(right);
  return connected_sum_convolution(left, right, t, k) + binomial(n1 + n2 - 2 * t, k);
}

BigInt b_complete_sum(std::int64_t n, std::int64_t t, std::int64_t k) {
  if (n < 1) throw Error(Errc::BadSize, "need at least one copy of K_{t+1}");
  if (t < 1) throw Error(Errc::BadGlueSize, "glue size t must be at least 1");
  return linear_strand(n, k);
}

BigInt b_tree(std::int64_t n_edges, std::int64_t k) {
  if (n_edges < 0) throw Error(Errc::BadSize, "edge count must be non-negative");
  return linear_strand(n_edges, k);
}

BigInt b_ngon(std::int64_t n, std::int64_t k) {
  if (n < 3) throw Error(Errc::BadSize, "an n-gon needs n >= 3");
  if (k < 0 || k >= n) return 0;
  BigInt numerator = BigInt(n) * (k - 1) * binomial(n - 2, k);
  BigInt denominator = n - k;
  if (numerator % denominator != 0) {
    throw Error(Errc::NonIntegral, "n-gon formula not integral at n=" + std::to_string(n) + ", k=" + std::to_string(k));
  }
  return numerator / denominator;
}

BigInt b_stacked(std::int64_t n, std::int64_t d, std::int64_t k) {
  if (d < 2) throw Error(Errc::BadDimension, "stacked polytopes need d >= 2");
  if (n < d + 1) throw Error(Errc::BadSize, "a stacked d-polytope has at least d+1 vertices");
  if (d == 2) return b_ngon(n, k);
  return linear_strand(n - d, k);
}

}  // namespace bettikit
