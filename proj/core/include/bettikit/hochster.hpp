#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "bettikit/complex.hpp"
#include "bettikit/limits.hpp"

namespace bettikit {

enum class Field { gf2, rational };

std::string_view field_name(Field field) noexcept;

/// Matrix of a simplicial boundary map ∂: C_i → C_{i-1} over GF(2).
/// Faces are bitmasks over dense vertex indices; rows are the (i-1)-faces,
/// columns the i-faces, both in increasing mask order. Each row is a bitset.
class BoundaryMatrix {
 public:
  BoundaryMatrix(std::span<const std::uint64_t> row_faces, std::span<const std::uint64_t> col_faces);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool at(std::size_t r, std::size_t c) const { return (bits_[r * words_ + c / 64] >> (c % 64)) & 1U; }

  /// Rank over GF(2) by row elimination.
  std::size_t rank() const;
  /// Product this * rhs over GF(2); requires cols() == rhs.rows().
  BoundaryMatrix multiply(const BoundaryMatrix& rhs) const;
  bool is_zero() const;

 private:
  BoundaryMatrix(std::size_t rows, std::size_t cols);
  void set(std::size_t r, std::size_t c) { bits_[r * words_ + c / 64] |= std::uint64_t{1} << (c % 64); }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// dim H̃_i for i = -1..dimension.
struct ReducedHomology {
  std::vector<std::int64_t> dims;  // dims[i + 1] = dim H̃_i

  /// Zero outside the stored range.
  std::int64_t at(int degree) const {
    auto idx = degree + 1;
    return idx < 0 || idx >= static_cast<int>(dims.size()) ? 0 : dims[static_cast<std::size_t>(idx)];
  }
  friend bool operator==(const ReducedHomology&, const ReducedHomology&) = default;
};

struct HomologyOptions {
  Field field = Field::gf2;
  Limits limits = {};
  unsigned threads = 1;
  /// Check ∂∘∂ = 0 and Euler–Poincaré on every chain complex built.
  bool verify_chain_complex = false;
  /// Reuse homology of subcomplexes whose relabeled facet lists are equal.
  bool cache = true;
};

/// Counters reported by the subset sweeps.
struct SweepStats {
  std::uint64_t subcomplexes = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t chain_checks = 0;
  std::uint64_t chain_check_failures = 0;
};

/// Throws FaceExplosion past `limits.face_limit` faces.
ReducedHomology reduced_homology_dims(const SimplicialComplex& complex, const HomologyOptions& options = {});

/// Graded Betti numbers β_{i,j}, 0 <= i <= j <= n, of the Stanley–Reisner
/// ring via Hochster's formula.
class BettiTable {
 public:
  BettiTable(std::size_t n, Field field);

  std::size_t n() const noexcept { return n_; }
  Field field() const noexcept { return field_; }
  /// Zero outside 0 <= i <= j <= n.
  std::int64_t at(std::int64_t i, std::int64_t j) const;
  void add(std::size_t i, std::size_t j, std::int64_t value) { entries_[i * (n_ + 1) + j] += value; }

  struct Entry {
    std::size_t i;
    std::size_t j;
    std::int64_t value;
  };
  /// Nonzero entries ordered by (i, j).
  std::vector<Entry> nonzero() const;

  friend bool operator==(const BettiTable&, const BettiTable&) = default;

 private:
  std::size_t n_;
  Field field_;
  std::vector<std::int64_t> entries_;
};

/// β_{i,j} = Σ_{|W|=j} dim H̃_{j-i-1}(Δ_W).
std::int64_t graded_betti(const SimplicialComplex& complex, std::int64_t i, std::int64_t j,
                          const HomologyOptions& options = {}, SweepStats* stats = nullptr);

/// The whole table from one pass over all vertex subsets.
BettiTable betti_table(const SimplicialComplex& complex, const HomologyOptions& options = {},
                       SweepStats* stats = nullptr);

/// Macaulay-style rendering: column i, row r holds β_{i,i+r}; zeros as '.'.
std::string to_macaulay_string(const BettiTable& table);

/// Structure expected of the boundary of a stacked d-polytope (d >= 3).
struct TeraiHibiReport {
  /// Nonzero β_{i,j} outside i = j-1 and i = j-d+1, apart from the two ends
  /// β_{0,0} and β_{n-d,n} of the resolution.
  std::vector<std::string> off_diagonal;
  /// Failures of β_{i-1,i} = β_{n-i-d+1,n-i}.
  std::vector<std::string> duality;
  /// Failures of β_{k-1,k} = (k-1) C(n-d, k).
  std::vector<std::string> formula;

  bool passed() const { return off_diagonal.empty() && duality.empty() && formula.empty(); }
};

TeraiHibiReport check_terai_hibi(const BettiTable& table, std::int64_t d);
TeraiHibiReport check_terai_hibi(const SimplicialComplex& complex, std::int64_t d, const HomologyOptions& options = {});

}  // namespace bettikit
