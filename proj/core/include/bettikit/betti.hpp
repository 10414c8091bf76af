#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "bettikit/binomial.hpp"
#include "bettikit/complex.hpp"
#include "bettikit/graph.hpp"
#include "bettikit/limits.hpp"

namespace bettikit {

/// b_k = Σ_{|W|=k} (nc(G|_W) - 1);  c_k = Σ_{|W|=k} nc(G|_W) = b_k + C(n, k).
enum class BettiKind { b, c };

/// Exact sequence indexed k = 0..n. Reads outside that range give the
/// empty-sum value 0.
class BettiVector {
 public:
  BettiVector(BettiKind kind, std::vector<std::int64_t> values);

  BettiKind kind() const noexcept { return kind_; }
  /// Vertex count of the underlying graph.
  std::size_t n() const noexcept { return values_.size() - 1; }
  const std::vector<std::int64_t>& values() const noexcept { return values_; }
  std::int64_t operator[](std::int64_t k) const {
    return k < 0 || k > static_cast<std::int64_t>(n()) ? 0 : values_[static_cast<std::size_t>(k)];
  }

  BettiVector as(BettiKind kind) const;

  friend bool operator==(const BettiVector&, const BettiVector&) = default;

 private:
  BettiKind kind_;
  std::vector<std::int64_t> values_;
};

enum class Backend {
  /// One pass over all 2^n masks, bucketed by cardinality.
  sweep,
  /// Revolving-door enumeration of each cardinality separately.
  per_k,
};

struct EnumerationOptions {
  Backend backend = Backend::sweep;
  /// 0 = hardware parallelism. Results never depend on it.
  unsigned threads = 1;
  Limits limits = {};
};

/// Number of connected components of the subgraph induced by `mask`, with
/// `neighbours[v]` the adjacency row of dense vertex v.
int count_components(std::span<const std::uint64_t> neighbours, std::uint64_t mask);

BettiVector c_vector_bruteforce(const Graph& graph, const EnumerationOptions& options = {});
BettiVector b_vector_bruteforce(const Graph& graph, const EnumerationOptions& options = {});
std::int64_t c_bruteforce(const Graph& graph, std::int64_t k, const EnumerationOptions& options = {});
std::int64_t b_bruteforce(const Graph& graph, std::int64_t k, const EnumerationOptions& options = {});

/// b-vector of G(Δ); components of Δ_W and G(Δ)|_W coincide.
BettiVector b_vector_of_complex(const SimplicialComplex& complex, const EnumerationOptions& options = {});

// Closed forms. All arithmetic is exact; k outside 0..(vertex count)
// gives 0 and k = 0 gives -1 for the b-kind quantities.

/// c_k of a t-connected sum from the c-vectors of its two parts.
BigInt c_sum_formula(const BettiVector& left, const BettiVector& right, std::int64_t t, std::int64_t k);
/// b_k of a t-connected sum from the b-vectors of its two parts.
BigInt b_sum_formula(const BettiVector& left, const BettiVector& right, std::int64_t t, std::int64_t k);

/// (k-1) C(n, k): any t-connected sum of n copies of K_{t+1}.
BigInt b_complete_sum(std::int64_t n, std::int64_t t, std::int64_t k);
/// (k-1) C(n, k): any tree with n edges.
BigInt b_tree(std::int64_t n_edges, std::int64_t k);
/// n(k-1)/(n-k) C(n-2, k) for k < n, and 0 for k = n: the n-cycle.
BigInt b_ngon(std::int64_t n, std::int64_t k);
/// Boundary of a stacked d-polytope with n vertices.
BigInt b_stacked(std::int64_t n, std::int64_t d, std::int64_t k);

}  // namespace bettikit
