#include "verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "bettikit/betti.hpp"
#include "bettikit/connected_sum.hpp"
#include "bettikit/error.hpp"
#include "bettikit/generators.hpp"
#include "bettikit/hochster.hpp"

namespace bettikit::cli {
namespace {

std::uint64_t trial_seed(const SuiteConfig& config, std::size_t trial) {
  return config.seed * 0x9E3779B97F4A7C15ULL + trial;
}

std::size_t draw_between(Rng& rng, std::size_t lo, std::size_t hi) { return lo + rng.below(hi - lo + 1); }

/// First k where the two sequences disagree, rendered for the report.
std::string compare(const std::function<BigInt(std::int64_t)>& expected, const BettiVector& actual,
                    std::int64_t k_max) {
  for (std::int64_t k = 0; k <= k_max; ++k) {
    BigInt want = expected(k);
    if (want != BigInt(actual[k])) {
      return "k=" + std::to_string(k) + ": formula " + want.str() + ", enumeration " + std::to_string(actual[k]);
    }
  }
  return {};
}

TrialOutcome outcome(std::string label, std::string mismatch) {
  bool ok = mismatch.empty();
  return {std::move(label), ok, std::move(mismatch)};
}

std::string label_of(std::size_t trial, const std::string& params) {
  return "trial " + std::to_string(trial) + " (" + params + ")";
}

TrialOutcome recurrence_trial(const SuiteConfig& config, std::size_t trial, BettiKind kind) {
  Rng rng(trial_seed(config, trial));
  const std::size_t max_n = std::max<std::size_t>(config.max_vertices, 1);
  const std::size_t t = std::min<std::size_t>(1 + rng.below(4), max_n);
  const std::size_t n1 = draw_between(rng, t, max_n);
  const std::size_t n2 = draw_between(rng, t, max_n);
  Graph g1 = random_graph_with_clique(n1, t, rng);
  Graph g2 = random_graph_with_clique(n2, t, rng);
  auto c1 = cliques_of_size(g1, t);
  auto c2 = cliques_of_size(g2, t);
  Gluing gluing = *random_gluing(g1.vertices(), c1, g2.vertices(), c2, rng);
  Graph sum = connected_sum(g1, g2, gluing);

  EnumerationOptions options{Backend::sweep, config.threads, {}};
  BettiVector actual = kind == BettiKind::c ? c_vector_bruteforce(sum, options) : b_vector_bruteforce(sum, options);
  BettiVector left = c_vector_bruteforce(g1, options).as(kind);
  BettiVector right = c_vector_bruteforce(g2, options).as(kind);
  auto formula = [&](std::int64_t k) {
    const auto tt = static_cast<std::int64_t>(t);
    return kind == BettiKind::c ? c_sum_formula(left, right, tt, k) : b_sum_formula(left, right, tt, k);
  };
  std::ostringstream params;
  params << "t=" << t << ", n1=" << n1 << ", n2=" << n2 << ", F1=" << gluing.left_face << ", F2=" << gluing.right_face;
  return outcome(label_of(trial, params.str()), compare(formula, actual, static_cast<std::int64_t>(sum.num_vertices()) + 1));
}

Graph random_chain(const std::vector<Graph>& parts, std::size_t t, Rng& rng) {
  Graph acc = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    auto left = cliques_of_size(acc, t);
    auto right = cliques_of_size(parts[i], t);
    acc = connected_sum(acc, parts[i], *random_gluing(acc.vertices(), left, parts[i].vertices(), right, rng));
  }
  return acc;
}

TrialOutcome invariance_trial(const SuiteConfig& config, std::size_t trial) {
  Rng rng(trial_seed(config, trial));
  const std::size_t max_n = std::max<std::size_t>(config.max_vertices, 1);
  const std::size_t t = std::min<std::size_t>(1 + rng.below(4), max_n);
  const std::size_t count = 3 + rng.below(3);
  std::vector<Graph> parts;
  for (std::size_t i = 0; i < count; ++i) {
    parts.push_back(random_graph_with_clique(draw_between(rng, t, std::min(max_n, t + 4)), t, rng));
  }
  Graph first = random_chain(parts, t, rng);
  Graph second = random_chain(parts, t, rng);
  EnumerationOptions options{Backend::sweep, config.threads, {}};
  BettiVector a = b_vector_bruteforce(first, options);
  BettiVector b = b_vector_bruteforce(second, options);
  std::string mismatch;
  if (a != b) {
    for (std::int64_t k = 0; k <= static_cast<std::int64_t>(a.n()); ++k) {
      if (a[k] != b[k]) {
        mismatch = "k=" + std::to_string(k) + ": " + std::to_string(a[k]) + " vs " + std::to_string(b[k]);
        break;
      }
    }
  }
  return outcome(label_of(trial, "t=" + std::to_string(t) + ", parts=" + std::to_string(count) +
                                     ", n=" + std::to_string(first.num_vertices())),
                 mismatch);
}

TrialOutcome tree_trial(const SuiteConfig& config, std::size_t trial) {
  const std::size_t span = std::max<std::size_t>(config.max_vertices, 2) - 1;
  const std::size_t n = 2 + trial % span;
  const TreeSpec shapes[] = {{TreeShape::path, 0, {}}, {TreeShape::star, 0, {}}, {TreeShape::random, trial_seed(config, trial), {}}};
  const char* names[] = {"path", "star", "random"};
  for (std::size_t s = 0; s < 3; ++s) {
    Graph g = tree(n, shapes[s]);
    auto mismatch = compare([&](std::int64_t k) { return b_tree(static_cast<std::int64_t>(n) - 1, k); },
                            b_vector_bruteforce(g, {Backend::sweep, config.threads, {}}), static_cast<std::int64_t>(n) + 1);
    if (!mismatch.empty()) return outcome(label_of(trial, std::string(names[s]) + ", n=" + std::to_string(n)), mismatch);
  }
  return outcome(label_of(trial, "path/star/random, n=" + std::to_string(n)), {});
}

TrialOutcome ngon_trial(const SuiteConfig& config, std::size_t trial) {
  const std::size_t span = std::max<std::size_t>(config.max_vertices, 3) - 2;
  const auto n = static_cast<std::int64_t>(3 + trial % span);
  auto mismatch = compare([&](std::int64_t k) { return b_ngon(n, k); },
                          b_vector_bruteforce(cycle_graph(static_cast<std::size_t>(n)), {Backend::sweep, config.threads, {}}),
                          n + 1);
  return outcome(label_of(trial, "n=" + std::to_string(n)), mismatch);
}

TrialOutcome stacked_trial(const SuiteConfig& config, std::size_t trial) {
  Rng rng(trial_seed(config, trial));
  const std::size_t max_n = std::max<std::size_t>(config.max_vertices, 3);
  const std::size_t d = std::min<std::size_t>(2 + rng.below(4), max_n - 1);
  const std::size_t n = draw_between(rng, d + 1, max_n);
  const std::uint64_t seed = rng.below(1U << 30);
  auto complex = stacked_boundary(static_cast<int>(d), static_cast<int>(n), seed);
  auto mismatch = compare(
      [&](std::int64_t k) { return b_stacked(static_cast<std::int64_t>(n), static_cast<std::int64_t>(d), k); },
      b_vector_of_complex(complex, {Backend::sweep, config.threads, {}}), static_cast<std::int64_t>(n) + 1);
  return outcome(label_of(trial, "d=" + std::to_string(d) + ", n=" + std::to_string(n) + ", seed=" + std::to_string(seed)),
                 mismatch);
}

std::string edge_list(const Graph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) out += (out.empty() ? "" : ",") + std::to_string(u) + std::to_string(v);
  return "{" + out + "}";
}

TrialOutcome skeleton_trial(const SuiteConfig& config, std::size_t trial) {
  if (trial == 0) {
    // Two triangles' boundaries glued along an edge: the glued edge vanishes
    // from the complex but survives in the graph sum.
    auto d1 = SimplicialComplex::generated_by({{1, 2}, {2, 3}, {1, 3}});
    auto d2 = SimplicialComplex::generated_by({{1, 3}, {3, 4}, {1, 4}});
    Gluing gluing{{1, 3}, {1, 3}, Relabeling::identity(d2.vertices())};
    const std::string of_sum = edge_list(one_skeleton(connected_sum(d1, d2, gluing)));
    const std::string sum_of = edge_list(connected_sum(one_skeleton(d1), one_skeleton(d2), gluing));
    std::string mismatch;
    if (skeleton_commutes(d1, d2, gluing)) mismatch = "t=2 example unexpectedly commutes";
    if (of_sum != "{12,14,23,34}" || sum_of != "{12,13,14,23,34}") {
      mismatch = "edge sets " + of_sum + " vs " + sum_of;
    }
    return outcome(label_of(trial, "t=2 counterexample, G(D1#D2)=" + of_sum + ", G(D1)#G(D2)=" + sum_of), mismatch);
  }
  Rng rng(trial_seed(config, trial));
  const std::size_t max_n = std::max<std::size_t>(config.max_vertices, 6);
  const std::size_t t = 3 + rng.below(3);
  const std::size_t n1 = draw_between(rng, t + 1, max_n);
  const std::size_t n2 = draw_between(rng, t + 1, max_n);
  auto d1 = random_pure_complex(n1, t, 1 + rng.below(2 * n1), rng);
  auto d2 = random_pure_complex(n2, t, 1 + rng.below(2 * n2), rng);
  auto gluing = *random_gluing(d1.vertices(), d1.facets(), d2.vertices(), d2.facets(), rng);
  bool commutes = skeleton_commutes(d1, d2, gluing);
  return outcome(label_of(trial, "t=" + std::to_string(t) + ", n1=" + std::to_string(d1.num_vertices()) +
                                     ", n2=" + std::to_string(d2.num_vertices())),
                 commutes ? "" : "skeleton of the sum differs from the sum of skeletons");
}

TrialOutcome hibi_trial(const SuiteConfig& config, std::size_t trial) {
  Rng rng(trial_seed(config, trial));
  const std::size_t max_n = std::clamp<std::size_t>(config.max_vertices, 6, 9);
  const std::size_t d = 3 + rng.below(2);
  const std::size_t n = draw_between(rng, d + 1, std::max(max_n, d + 1));
  const std::uint64_t seed = rng.below(1U << 30);
  auto complex = stacked_boundary(static_cast<int>(d), static_cast<int>(n), seed);
  HomologyOptions options;
  options.threads = config.threads;
  auto report = check_terai_hibi(complex, static_cast<std::int64_t>(d), options);
  std::string mismatch;
  for (const auto* list : {&report.off_diagonal, &report.duality, &report.formula}) {
    if (!list->empty() && mismatch.empty()) mismatch = list->front();
  }
  return outcome(label_of(trial, "d=" + std::to_string(d) + ", n=" + std::to_string(n) + ", seed=" + std::to_string(seed)),
                 mismatch);
}

using TrialFn = std::function<TrialOutcome(const SuiteConfig&, std::size_t)>;

const std::map<std::string_view, TrialFn>& suites() {
  static const std::map<std::string_view, TrialFn> table = {
      {"lemma", [](const SuiteConfig& c, std::size_t i) { return recurrence_trial(c, i, BettiKind::c); }},
      {"theorem", [](const SuiteConfig& c, std::size_t i) { return recurrence_trial(c, i, BettiKind::b); }},
      {"invariance", invariance_trial},
      {"tree", tree_trial},
      {"ngon", ngon_trial},
      {"stacked", stacked_trial},
      {"skeleton", skeleton_trial},
      {"hibi", hibi_trial},
  };
  return table;
}

}  // namespace

const std::vector<std::string_view>& suite_names() {
  static const std::vector<std::string_view> names = [] {
    std::vector<std::string_view> out;
    for (const auto& [name, fn] : suites()) out.push_back(name);
    return out;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteConfig& config) {
  auto it = suites().find(name);
  if (it == suites().end()) throw Error(Errc::BadInput, "unknown suite '" + std::string(name) + "'");
  SuiteReport report{std::string(name), {}};
  for (std::size_t i = 0; i < config.trials; ++i) report.trials.push_back(it->second(config, i));
  return report;
}

}  // namespace bettikit::cli
