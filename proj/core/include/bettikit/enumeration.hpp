#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

namespace bettikit {

/// 0 means "use hardware parallelism".
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  return std::max(1U, std::thread::hardware_concurrency());
}

/// Splits [0, total) into at most `threads` contiguous ranges, runs
/// `work(lo, hi)` on each in its own thread and returns the per-range
/// results in range order. Callers merge them; the split never affects
/// the merged value as long as the merge is exact.
template <typename Work>
auto run_in_ranges(std::uint64_t total, unsigned threads, Work work) {
  using Result = decltype(work(std::uint64_t{}, std::uint64_t{}));
  const std::uint64_t parts = std::max<std::uint64_t>(1, std::min<std::uint64_t>(resolve_threads(threads), total));
  std::vector<Result> results(parts);
  auto bound = [&](std::uint64_t i) { return total / parts * i + std::min(i, total % parts); };
  if (parts == 1) {
    results[0] = work(0, total);
    return results;
  }
  std::vector<std::jthread> workers;
  workers.reserve(parts);
  for (std::uint64_t i = 0; i < parts; ++i) {
    workers.emplace_back([&, i] { results[i] = work(bound(i), bound(i + 1)); });
  }
  workers.clear();
  return results;
}

/// Visits every k-subset of {0..n-1}, as a bitmask, in revolving-door
/// order: consecutive subsets differ by swapping one element in and one
/// out. Requires n <= 63.
template <typename Visit>
void for_each_k_subset(unsigned n, int k, Visit visit) {
  if (k < 0 || static_cast<unsigned>(k) > n) return;
  if (k == 0) {
    visit(std::uint64_t{0});
    return;
  }
  if (static_cast<unsigned>(k) == n) {
    visit((std::uint64_t{1} << n) - 1);
    return;
  }
  if (k == 1) {
    for (unsigned v = 0; v < n; ++v) visit(std::uint64_t{1} << v);
    return;
  }

  // Knuth, TAOCP 7.2.1.3, Algorithm R; c[1..k] ascending, c[k+1] = n.
  const int t = k;
  std::vector<int> c(t + 2);
  for (int j = 1; j <= t; ++j) c[j] = j - 1;
  c[t + 1] = static_cast<int>(n);
  auto mask = [&] {
    std::uint64_t m = 0;
    for (int j = 1; j <= t; ++j) m |= std::uint64_t{1} << c[j];
    return m;
  };

  enum class Step { Emit, Decrease, Increase };
  Step step = Step::Emit;
  int j = 0;
  for (;;) {
    switch (step) {
      case Step::Emit:
        visit(mask());
        if (t % 2 == 1) {
          if (c[1] + 1 < c[2]) {
            ++c[1];
            continue;
          }
          j = 2;
          step = Step::Decrease;
        } else {
          if (c[1] > 0) {
            --c[1];
            continue;
          }
          j = 2;
          step = Step::Increase;
        }
        break;
      case Step::Decrease:
        if (c[j] >= j) {
          c[j] = c[j - 1];
          c[j - 1] = j - 2;
          step = Step::Emit;
          break;
        }
        ++j;
        step = Step::Increase;
        break;
      case Step::Increase:
        if (c[j] + 1 < c[j + 1]) {
          c[j - 1] = c[j];
          ++c[j];
          step = Step::Emit;
          break;
        }
        ++j;
        if (j > t) return;
        step = Step::Decrease;
        break;
    }
  }
}

}  // namespace bettikit
