#include "bettikit/hochster.hpp"

#include <algorithm>
#include <bit>
#include <iomanip>
#include <map>
#include <sstream>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "bettikit/binomial.hpp"
#include "bettikit/enumeration.hpp"
#include "bettikit/error.hpp"

namespace bettikit {
namespace {

using Rational = boost::multiprecision::cpp_rational;
using FacesBySize = std::vector<std::vector<std::uint64_t>>;

void check_cap(std::size_t n, const Limits& limits) {
  const std::size_t cap = std::min(limits.vertex_cap, kMaxMaskVertices);
  if (n > cap) {
    throw Error(Errc::VertexCapExceeded,
                std::to_string(n) + " vertices exceed the homology cap of " + std::to_string(cap));
  }
}

std::vector<std::uint64_t> dense_facets(const SimplicialComplex& complex) {
  const auto& vertices = complex.vertices();
  std::vector<std::uint64_t> masks;
  masks.reserve(complex.facets().size());
  for (const auto& facet : complex.facets()) {
    std::uint64_t mask = 0;
    for (Vertex v : facet) {
      auto idx = std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin();
      mask |= std::uint64_t{1} << idx;
    }
    masks.push_back(mask);
  }
  return masks;
}

/// All faces, ∅ included, grouped by cardinality and sorted.
FacesBySize materialize(std::span<const std::uint64_t> facets, std::size_t face_limit) {
  std::vector<std::uint64_t> raw{0};
  auto compact = [&] {
    std::sort(raw.begin(), raw.end());
    raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
    if (raw.size() > face_limit) {
      throw Error(Errc::FaceExplosion, "more than " + std::to_string(face_limit) + " faces");
    }
  };
  for (std::uint64_t facet : facets) {
    if (std::popcount(facet) >= 63 || (std::uint64_t{1} << std::popcount(facet)) > face_limit) {
      throw Error(Errc::FaceExplosion, "a facet with " + std::to_string(std::popcount(facet)) +
                                           " vertices exceeds the face limit " + std::to_string(face_limit));
    }
    // Nonempty submasks of the facet.
    for (std::uint64_t sub = facet; sub; sub = (sub - 1) & facet) raw.push_back(sub);
    if (raw.size() > 2 * face_limit) compact();
  }
  compact();

  int top = 0;
  for (std::uint64_t f : facets) top = std::max(top, std::popcount(f));
  FacesBySize faces(static_cast<std::size_t>(top) + 1);
  for (std::uint64_t f : raw) faces[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  return faces;
}

// ---- rational backend -------------------------------------------------------

using IntMatrix = std::vector<std::vector<int>>;

IntMatrix signed_boundary(std::span<const std::uint64_t> row_faces, std::span<const std::uint64_t> col_faces) {
  IntMatrix m(row_faces.size(), std::vector<int>(col_faces.size(), 0));
  for (std::size_t c = 0; c < col_faces.size(); ++c) {
    int position = 0;
    for (std::uint64_t rest = col_faces[c]; rest; rest &= rest - 1, ++position) {
      std::uint64_t boundary = col_faces[c] & ~(rest & -rest);
      auto it = std::lower_bound(row_faces.begin(), row_faces.end(), boundary);
      m[static_cast<std::size_t>(it - row_faces.begin())][c] = position % 2 == 0 ? 1 : -1;
    }
  }
  return m;
}

std::size_t rational_rank(const IntMatrix& in) {
  if (in.empty()) return 0;
  std::vector<std::vector<Rational>> m(in.size());
  for (std::size_t r = 0; r < in.size(); ++r) m[r].assign(in[r].begin(), in[r].end());
  const std::size_t cols = m.front().size();
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      Rational factor = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < cols; ++k) m[r][k] -= factor * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

bool product_is_zero(const IntMatrix& a, const IntMatrix& b) {
  for (std::size_t r = 0; r < a.size(); ++r) {
    for (std::size_t c = 0; c < (b.empty() ? 0 : b.front().size()); ++c) {
      long long sum = 0;
      for (std::size_t k = 0; k < b.size(); ++k) sum += static_cast<long long>(a[r][k]) * b[k][c];
      if (sum != 0) return false;
    }
  }
  return true;
}

// ---- homology ---------------------------------------------------------------

struct ChainTally {
  std::uint64_t checks = 0;
  std::uint64_t failures = 0;
};

ReducedHomology homology_from_faces(const FacesBySize& faces, Field field, bool verify, ChainTally& tally) {
  // ranks[s] = rank of ∂ from faces of size s to faces of size s-1; s = 1..top.
  const std::size_t sizes = faces.size();
  std::vector<std::size_t> ranks(sizes + 1, 0);
  bool chain_ok = true;

  if (field == Field::gf2) {
    std::vector<BoundaryMatrix> maps;
    for (std::size_t s = 1; s < sizes; ++s) {
      maps.emplace_back(faces[s - 1], faces[s]);
      ranks[s] = maps.back().rank();
    }
    if (verify) {
      for (std::size_t s = 1; s < maps.size(); ++s) chain_ok = chain_ok && maps[s - 1].multiply(maps[s]).is_zero();
    }
  } else {
    std::vector<IntMatrix> maps;
    for (std::size_t s = 1; s < sizes; ++s) {
      maps.push_back(signed_boundary(faces[s - 1], faces[s]));
      ranks[s] = rational_rank(maps.back());
    }
    if (verify) {
      for (std::size_t s = 1; s < maps.size(); ++s) chain_ok = chain_ok && product_is_zero(maps[s - 1], maps[s]);
    }
  }

  ReducedHomology h;
  h.dims.resize(sizes);
  for (std::size_t s = 0; s < sizes; ++s) {
    h.dims[s] = static_cast<std::int64_t>(faces[s].size()) - static_cast<std::int64_t>(ranks[s]) -
                static_cast<std::int64_t>(ranks[s + 1]);
  }

  if (verify) {
    // Reduced Euler characteristic two ways; index s is degree s - 1.
    std::int64_t from_faces = 0;
    std::int64_t from_homology = 0;
    for (std::size_t s = 0; s < sizes; ++s) {
      const std::int64_t sign = s % 2 == 0 ? -1 : 1;
      from_faces += sign * static_cast<std::int64_t>(faces[s].size());
      from_homology += sign * h.dims[s];
    }
    ++tally.checks;
    if (!chain_ok || from_faces != from_homology) ++tally.failures;
  }
  return h;
}

/// Relabels the bits of `mask` inside `subset` to consecutive positions.
std::uint64_t gather(std::uint64_t mask, std::uint64_t subset) {
  std::uint64_t out = 0;
  int position = 0;
  for (std::uint64_t rest = subset; rest; rest &= rest - 1, ++position) {
    if (mask & rest & -rest) out |= std::uint64_t{1} << position;
  }
  return out;
}

struct KeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const noexcept {
    std::size_t h = key.size();
    for (std::uint64_t v : key) h ^= std::hash<std::uint64_t>{}(v) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

/// Homology of Δ_W for successive W, with a private cache.
class SubcomplexHomology {
 public:
  SubcomplexHomology(std::span<const std::uint64_t> facets, const HomologyOptions& options)
      : facets_(facets), options_(options) {}

  const ReducedHomology& of(std::uint64_t subset) {
    ++stats_.subcomplexes;
    key_.clear();
    for (std::uint64_t f : facets_) {
      if (std::uint64_t g = gather(f & subset, subset)) key_.push_back(g);
    }
    std::sort(key_.begin(), key_.end(), [](auto a, auto b) {
      return std::popcount(a) != std::popcount(b) ? std::popcount(a) > std::popcount(b) : a < b;
    });
    key_.erase(std::unique(key_.begin(), key_.end()), key_.end());
    std::vector<std::uint64_t> maximal;
    for (std::uint64_t f : key_) {
      if (std::none_of(maximal.begin(), maximal.end(), [&](std::uint64_t m) { return (f & ~m) == 0; })) {
        maximal.push_back(f);
      }
    }
    std::sort(maximal.begin(), maximal.end());

    if (options_.cache) {
      auto it = cache_.find(maximal);
      if (it != cache_.end()) {
        ++stats_.cache_hits;
        return it->second;
      }
    }
    ChainTally tally;
    auto h = homology_from_faces(materialize(maximal, options_.limits.face_limit), options_.field,
                                 options_.verify_chain_complex, tally);
    stats_.chain_checks += tally.checks;
    stats_.chain_check_failures += tally.failures;
    if (!options_.cache) {
      scratch_ = std::move(h);
      return scratch_;
    }
    return cache_.emplace(std::move(maximal), std::move(h)).first->second;
  }

  const SweepStats& stats() const noexcept { return stats_; }

 private:
  std::span<const std::uint64_t> facets_;
  const HomologyOptions& options_;
  std::vector<std::uint64_t> key_;
  std::unordered_map<std::vector<std::uint64_t>, ReducedHomology, KeyHash> cache_;
  ReducedHomology scratch_;
  SweepStats stats_;
};

void merge(SweepStats* into, const SweepStats& from) {
  if (!into) return;
  into->subcomplexes += from.subcomplexes;
  into->cache_hits += from.cache_hits;
  into->chain_checks += from.chain_checks;
  into->chain_check_failures += from.chain_check_failures;
}

}  // namespace

std::string_view field_name(Field field) noexcept { return field == Field::gf2 ? "GF(2)" : "QQ"; }

BoundaryMatrix::BoundaryMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {}

BoundaryMatrix::BoundaryMatrix(std::span<const std::uint64_t> row_faces, std::span<const std::uint64_t> col_faces)
    : BoundaryMatrix(row_faces.size(), col_faces.size()) {
  for (std::size_t c = 0; c < col_faces.size(); ++c) {
    for (std::uint64_t rest = col_faces[c]; rest; rest &= rest - 1) {
      std::uint64_t boundary = col_faces[c] & ~(rest & -rest);
      auto it = std::lower_bound(row_faces.begin(), row_faces.end(), boundary);
      if (it == row_faces.end() || *it != boundary) {
        throw Error(Errc::BadInput, "face list is not closed under taking boundaries");
      }
      set(static_cast<std::size_t>(it - row_faces.begin()), c);
    }
  }
}

std::size_t BoundaryMatrix::rank() const {
  std::vector<std::uint64_t> m(bits_);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    const std::size_t word = c / 64;
    const std::uint64_t bit = std::uint64_t{1} << (c % 64);
    std::size_t pivot = rank;
    while (pivot < rows_ && !(m[pivot * words_ + word] & bit)) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != rank) {
      std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(pivot * words_),
                       m.begin() + static_cast<std::ptrdiff_t>((pivot + 1) * words_),
                       m.begin() + static_cast<std::ptrdiff_t>(rank * words_));
    }
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (!(m[r * words_ + word] & bit)) continue;
      for (std::size_t w = word; w < words_; ++w) m[r * words_ + w] ^= m[rank * words_ + w];
    }
    ++rank;
  }
  return rank;
}

BoundaryMatrix BoundaryMatrix::multiply(const BoundaryMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(Errc::SizeMismatch, "boundary matrices do not compose");
  BoundaryMatrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      if (!at(r, k)) continue;
      for (std::size_t w = 0; w < out.words_; ++w) out.bits_[r * out.words_ + w] ^= rhs.bits_[k * rhs.words_ + w];
    }
  }
  return out;
}

bool BoundaryMatrix::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint64_t w) { return w == 0; });
}

ReducedHomology reduced_homology_dims(const SimplicialComplex& complex, const HomologyOptions& options) {
  check_cap(complex.num_vertices(), options.limits);
  ChainTally tally;
  auto h = homology_from_faces(materialize(dense_facets(complex), options.limits.face_limit), options.field,
                               options.verify_chain_complex, tally);
  if (tally.failures) throw Error(Errc::BadInput, "chain complex check failed");
  return h;
}

BettiTable::BettiTable(std::size_t n, Field field) : n_(n), field_(field), entries_((n + 1) * (n + 1), 0) {}

std::int64_t BettiTable::at(std::int64_t i, std::int64_t j) const {
  const auto n = static_cast<std::int64_t>(n_);
  if (i < 0 || j < i || j > n) return 0;
  return entries_[static_cast<std::size_t>(i * (n + 1) + j)];
}

std::vector<BettiTable::Entry> BettiTable::nonzero() const {
  std::vector<Entry> out;
  for (std::size_t i = 0; i <= n_; ++i) {
    for (std::size_t j = i; j <= n_; ++j) {
      if (auto v = entries_[i * (n_ + 1) + j]) out.push_back({i, j, v});
    }
  }
  return out;
}

std::int64_t graded_betti(const SimplicialComplex& complex, std::int64_t i, std::int64_t j,
                          const HomologyOptions& options, SweepStats* stats) {
  const std::size_t n = complex.num_vertices();
  check_cap(n, options.limits);
  if (i < 0 || j < i || j > static_cast<std::int64_t>(n)) return 0;
  const auto facets = dense_facets(complex);
  SubcomplexHomology homology(facets, options);
  std::int64_t sum = 0;
  const int degree = static_cast<int>(j - i - 1);
  for_each_k_subset(static_cast<unsigned>(n), static_cast<int>(j),
                    [&](std::uint64_t subset) { sum += homology.of(subset).at(degree); });
  merge(stats, homology.stats());
  return sum;
}

BettiTable betti_table(const SimplicialComplex& complex, const HomologyOptions& options, SweepStats* stats) {
  const std::size_t n = complex.num_vertices();
  check_cap(n, options.limits);
  const auto facets = dense_facets(complex);

  struct Partial {
    std::vector<std::int64_t> entries;
    SweepStats stats;
  };
  auto partials = run_in_ranges(std::uint64_t{1} << n, options.threads, [&](std::uint64_t lo, std::uint64_t hi) {
    Partial part{std::vector<std::int64_t>((n + 1) * (n + 1), 0), {}};
    SubcomplexHomology homology(facets, options);
    for (std::uint64_t subset = lo; subset < hi; ++subset) {
      const auto j = static_cast<std::int64_t>(std::popcount(subset));
      const auto& h = homology.of(subset);
      for (std::size_t s = 0; s < h.dims.size(); ++s) {
        if (!h.dims[s]) continue;
        // degree s - 1 = j - i - 1
        const std::int64_t i = j - static_cast<std::int64_t>(s);
        if (i >= 0) part.entries[static_cast<std::size_t>(i) * (n + 1) + static_cast<std::size_t>(j)] += h.dims[s];
      }
    }
    part.stats = homology.stats();
    return part;
  });

  BettiTable table(n, options.field);
  for (const auto& part : partials) {
    for (std::size_t i = 0; i <= n; ++i) {
      for (std::size_t j = i; j <= n; ++j) table.add(i, j, part.entries[i * (n + 1) + j]);
    }
    merge(stats, part.stats);
  }
  return table;
}

std::string to_macaulay_string(const BettiTable& table) {
  std::size_t last_col = 0;
  std::size_t last_row = 0;
  for (const auto& e : table.nonzero()) {
    last_col = std::max(last_col, e.i);
    last_row = std::max(last_row, e.j - e.i);
  }
  std::vector<std::vector<std::string>> cells(last_row + 2, std::vector<std::string>(last_col + 1));
  std::size_t width = 1;
  for (std::size_t i = 0; i <= last_col; ++i) {
    std::int64_t total = 0;
    for (std::size_t r = 0; r <= last_row; ++r) {
      auto v = table.at(static_cast<std::int64_t>(i), static_cast<std::int64_t>(i + r));
      total += v;
      cells[r + 1][i] = v ? std::to_string(v) : ".";
    }
    cells[0][i] = std::to_string(total);
    for (const auto& row : cells) width = std::max(width, row[i].size());
    width = std::max(width, std::to_string(i).size());
  }

  std::ostringstream out;
  const std::size_t label = std::max<std::size_t>(6, std::to_string(last_row).size() + 1);
  out << std::setw(static_cast<int>(label)) << "";
  for (std::size_t i = 0; i <= last_col; ++i) out << ' ' << std::setw(static_cast<int>(width)) << i;
  out << '\n';
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string head = r == 0 ? "total:" : std::to_string(r - 1) + ":";
    out << std::setw(static_cast<int>(label)) << head;
    for (std::size_t i = 0; i <= last_col; ++i) out << ' ' << std::setw(static_cast<int>(width)) << cells[r][i];
    out << '\n';
  }
  return out.str();
}

TeraiHibiReport check_terai_hibi(const BettiTable& table, std::int64_t d) {
  if (d < 3) throw Error(Errc::BadDimension, "the stacked-polytope structure check needs d >= 3");
  const auto n = static_cast<std::int64_t>(table.n());
  auto cell = [](std::int64_t i, std::int64_t j) {
    return "beta(" + std::to_string(i) + "," + std::to_string(j) + ")";
  };

  TeraiHibiReport report;
  for (const auto& e : table.nonzero()) {
    const auto i = static_cast<std::int64_t>(e.i);
    const auto j = static_cast<std::int64_t>(e.j);
    const bool end = (i == 0 && j == 0) || (i == n - d && j == n);
    if (!end && i != j - 1 && i != j - d + 1) {
      report.off_diagonal.push_back(cell(i, j) + " = " + std::to_string(e.value));
    }
  }
  for (std::int64_t i = 1; i <= n; ++i) {
    const auto lhs = table.at(i - 1, i);
    const auto rhs = table.at(n - i - d + 1, n - i);
    if (lhs != rhs) {
      report.duality.push_back(cell(i - 1, i) + " = " + std::to_string(lhs) + " but " + cell(n - i - d + 1, n - i) +
                               " = " + std::to_string(rhs));
    }
  }
  for (std::int64_t k = 1; k <= n; ++k) {
    BigInt expected = BigInt(k - 1) * binomial(n - d, k);
    if (BigInt(table.at(k - 1, k)) != expected) {
      report.formula.push_back(cell(k - 1, k) + " = " + std::to_string(table.at(k - 1, k)) + ", expected " +
                               expected.str());
    }
  }
  return report;
}

TeraiHibiReport check_terai_hibi(const SimplicialComplex& complex, std::int64_t d, const HomologyOptions& options) {
  if (d < 3) throw Error(Errc::BadDimension, "the stacked-polytope structure check needs d >= 3");
  return check_terai_hibi(betti_table(complex, options), d);
}

}  // namespace bettikit
