#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bettikit/betti.hpp"
#include "bettikit/error.hpp"
#include "bettikit/generators.hpp"
#include "bettikit/hochster.hpp"
#include "bettikit/io.hpp"
#include "sum_expression.hpp"
#include "verify.hpp"

namespace bettikit::cli {
namespace {

using nlohmann::ordered_json;

struct Input {
  SimplicialComplex complex;
  std::optional<Graph> graph;  // set when the input is a graph expression
  Metadata metadata;
  ordered_json parameters = ordered_json::object();
};

Graph graph_of(const Input& input) { return input.graph ? *input.graph : one_skeleton(input.complex); }

SimplicialComplex complex_of_graph(const Graph& g) {
  std::vector<VertexSet> generators;
  for (const auto& [u, v] : g.edges()) generators.push_back(VertexSet{u, v});
  for (Vertex v : g.vertices()) generators.push_back(VertexSet{v});
  return SimplicialComplex::generated_by(std::move(generators));
}

Input load(const std::string& file, const std::string& expr, const Limits& limits) {
  if (file.empty() == expr.empty()) throw Error(Errc::BadInput, "give exactly one of --input or --expr");
  Input input;
  if (!file.empty()) {
    auto loaded = read_complex_file(file, limits);
    input.complex = std::move(loaded.complex);
    input.metadata = std::move(loaded.metadata);
    input.parameters["input"] = file;
    if (!input.metadata.empty()) {
      ordered_json generator = ordered_json::object();
      for (const auto& [key, value] : input.metadata) generator[key] = value;
      input.parameters["generator"] = generator;
    }
    return input;
  }
  input.parameters["expr"] = expr;
  auto value = evaluate(*parse_sum_expression(expr), limits);
  if (auto* g = std::get_if<Graph>(&value)) {
    input.complex = complex_of_graph(*g);
    input.graph = std::move(*g);
  } else {
    input.complex = std::get<SimplicialComplex>(std::move(value));
  }
  return input;
}

ordered_json provenance(const Input& input, std::string_view backend) {
  ordered_json seed = nullptr;
  for (const auto& [key, value] : input.metadata) {
    if (key == "seed") seed = std::stoull(value);
  }
  return {{"tool-version", kToolVersion}, {"seed", seed}, {"backend", backend}};
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw Error(Errc::BadInput, "cannot write '" + path + "'");
  file << text;
}

// ---- gen ---------------------------------------------------------------------

struct GenArgs {
  std::string family;
  int dim = 3;
  std::size_t vertices = 0;
  std::uint64_t seed = 0;
  std::string shape = "path";
  std::vector<Vertex> code;
  std::string output;
};

int do_gen(const GenArgs& args, std::ostream& out) {
  Metadata meta{{"generator", args.family}, {"tool-version", std::string(kToolVersion)}};
  std::ostringstream text;
  auto need_vertices = [&] {
    if (args.vertices == 0) throw Error(Errc::BadSize, "--vertices is required for " + args.family);
  };
  if (args.family == "simplex") {
    meta.emplace_back("dim", std::to_string(args.dim));
    write_complex(text, simplex_boundary(args.dim), meta);
  } else if (args.family == "stacked") {
    need_vertices();
    meta.emplace_back("dim", std::to_string(args.dim));
    meta.emplace_back("vertices", std::to_string(args.vertices));
    meta.emplace_back("seed", std::to_string(args.seed));
    meta.emplace_back("rng", std::string(Rng::kAlgorithm));
    write_complex(text, stacked_boundary(args.dim, static_cast<int>(args.vertices), args.seed), meta);
  } else if (args.family == "complete") {
    need_vertices();
    meta.emplace_back("vertices", std::to_string(args.vertices));
    write_graph(text, complete_graph(args.vertices), meta);
  } else if (args.family == "cycle") {
    need_vertices();
    meta.emplace_back("vertices", std::to_string(args.vertices));
    write_graph(text, cycle_graph(args.vertices), meta);
  } else {
    need_vertices();
    TreeSpec spec;
    meta.emplace_back("vertices", std::to_string(args.vertices));
    meta.emplace_back("shape", args.shape);
    if (args.shape == "path") {
      spec.shape = TreeShape::path;
    } else if (args.shape == "star") {
      spec.shape = TreeShape::star;
    } else if (args.shape == "random") {
      spec = {TreeShape::random, args.seed, {}};
      meta.emplace_back("seed", std::to_string(args.seed));
      meta.emplace_back("rng", std::string(Rng::kAlgorithm));
    } else {
      spec = {TreeShape::prufer, 0, args.code};
      std::string code;
      for (Vertex v : args.code) code += (code.empty() ? "" : ",") + std::to_string(v);
      meta.emplace_back("code", code);
    }
    write_graph(text, tree(args.vertices, spec), meta);
  }
  emit(out, args.output, text.str());
  return kSuccess;
}

// ---- betti -------------------------------------------------------------------

struct BettiArgs {
  std::string input;
  std::string expr;
  std::optional<std::size_t> max_k;
  std::string backend = "sweep";
  unsigned threads = 1;
  std::string format = "text";
};

int do_betti(const BettiArgs& args, const Limits& limits, std::ostream& out) {
  Input input = load(args.input, args.expr, limits);
  EnumerationOptions options{args.backend == "sweep" ? Backend::sweep : Backend::per_k, args.threads, limits};
  BettiVector b = b_vector_bruteforce(graph_of(input), options);
  const std::size_t max_k = args.max_k.value_or(b.n());

  if (args.format == "structured") {
    ordered_json values = ordered_json::array();
    for (std::size_t k = 0; k <= max_k; ++k) values.push_back(b[static_cast<std::int64_t>(k)]);
    input.parameters["max-k"] = max_k;
    ordered_json doc = {{"kind", "betti-vector"},
                        {"n", b.n()},
                        {"parameters", input.parameters},
                        {"values", values},
                        {"provenance", provenance(input, args.backend)}};
    out << doc.dump(2) << '\n';
    return kSuccess;
  }
  out << "# n = " << b.n() << '\n';
  out << std::setw(4) << "k" << "  b_k\n";
  for (std::size_t k = 0; k <= max_k; ++k) out << std::setw(4) << k << "  " << b[static_cast<std::int64_t>(k)] << '\n';
  return kSuccess;
}

// ---- hochster ----------------------------------------------------------------

struct HochsterArgs {
  std::string input;
  std::string expr;
  unsigned threads = 1;
  std::string format = "text";
};

int do_hochster(const HochsterArgs& args, const Limits& limits, std::ostream& out) {
  Input input = load(args.input, args.expr, limits);
  HomologyOptions options;
  options.limits = limits;
  options.threads = args.threads;
  BettiTable table = betti_table(input.complex, options);

  if (args.format == "structured") {
    ordered_json entries = ordered_json::array();
    for (const auto& e : table.nonzero()) entries.push_back({{"i", e.i}, {"j", e.j}, {"value", e.value}});
    input.parameters["field"] = field_name(table.field());
    ordered_json doc = {{"kind", "betti-table"},
                        {"n", table.n()},
                        {"parameters", input.parameters},
                        {"entries", entries},
                        {"provenance", provenance(input, "hochster-gf2")}};
    out << doc.dump(2) << '\n';
    return kSuccess;
  }
  out << "# graded Betti numbers over " << field_name(table.field()) << ", n = " << table.n() << '\n';
  out << to_macaulay_string(table);
  return kSuccess;
}

// ---- verify / sum --------------------------------------------------------------

int do_verify(const std::string& suite, const SuiteConfig& config, std::ostream& out) {
  SuiteReport report = run_suite(suite, config);
  std::size_t passed = 0;
  for (const auto& trial : report.trials) {
    out << (trial.passed ? "PASS " : "FAIL ") << trial.label;
    if (!trial.passed) out << ": " << trial.detail;
    out << '\n';
    passed += trial.passed ? 1 : 0;
  }
  out << report.name << ": " << passed << "/" << report.trials.size() << " trials passed\n";
  return report.passed() ? kSuccess : kVerificationFailed;
}

int do_sum(const std::string& expr, const std::string& output, const Limits& limits, std::ostream& out) {
  auto value = evaluate(*parse_sum_expression(expr), limits);
  Metadata meta{{"generator", "sum"}, {"expr", expr}, {"tool-version", std::string(kToolVersion)}};
  std::ostringstream text;
  if (auto* g = std::get_if<Graph>(&value)) {
    write_graph(text, *g, meta);
  } else {
    write_complex(text, std::get<SimplicialComplex>(value), meta);
  }
  emit(out, output, text.str());
  return kSuccess;
}

int exit_code_for(Errc code) {
  return code == Errc::VertexCapExceeded || code == Errc::FaceExplosion ? kResourceCap : kInputError;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Special graded Betti numbers of graphs and simplicial complexes", "bettikit"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kToolVersion));
  Limits limits;
  app.add_option("--vertex-cap", limits.vertex_cap, "Largest vertex count for brute-force sweeps")
      ->capture_default_str();
  app.add_option("--face-limit", limits.face_limit, "Largest face count materialized per complex")
      ->capture_default_str();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance file");
  gen_cmd->add_option("family", gen.family)->required()->check(
      CLI::IsMember({"stacked", "tree", "cycle", "simplex", "complete"}));
  gen_cmd->add_option("--dim", gen.dim, "Polytope or simplex dimension")->capture_default_str();
  gen_cmd->add_option("--vertices", gen.vertices, "Vertex count");
  gen_cmd->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
  gen_cmd->add_option("--shape", gen.shape, "Tree shape")->check(CLI::IsMember({"path", "star", "random", "prufer"}));
  gen_cmd->add_option("--code", gen.code, "Prüfer code for --shape prufer")->delimiter(',');
  gen_cmd->add_option("-o,--output", gen.output, "Output file (default stdout)");

  BettiArgs betti;
  auto* betti_cmd = app.add_subcommand("betti", "Special graded Betti numbers b_k by enumeration");
  betti_cmd->add_option("--input", betti.input, "Complex or graph file");
  betti_cmd->add_option("--expr", betti.expr, "Connected-sum expression");
  betti_cmd->add_option("--max-k", betti.max_k, "Largest k to print");
  betti_cmd->add_option("--backend", betti.backend)->check(CLI::IsMember({"sweep", "per-k"}))->capture_default_str();
  betti_cmd->add_option("--threads", betti.threads, "Worker threads, 0 = auto")->capture_default_str();
  betti_cmd->add_option("--format", betti.format)->check(CLI::IsMember({"text", "structured"}))->capture_default_str();

  HochsterArgs hochster;
  auto* hochster_cmd = app.add_subcommand("hochster", "Full graded Betti table via Hochster's formula over GF(2)");
  hochster_cmd->add_option("--input", hochster.input, "Complex file");
  hochster_cmd->add_option("--expr", hochster.expr, "Connected-sum expression");
  hochster_cmd->add_option("--threads", hochster.threads, "Worker threads, 0 = auto")->capture_default_str();
  hochster_cmd->add_option("--format", hochster.format)
      ->check(CLI::IsMember({"text", "structured"}))
      ->capture_default_str();

  std::string suite;
  SuiteConfig suite_config;
  auto* verify_cmd = app.add_subcommand("verify", "Check closed forms against enumeration on random instances");
  std::vector<std::string> names(suite_names().begin(), suite_names().end());
  verify_cmd->add_option("suite", suite)->required()->check(CLI::IsMember(names));
  verify_cmd->add_option("--trials", suite_config.trials)->capture_default_str();
  verify_cmd->add_option("--seed", suite_config.seed)->capture_default_str();
  verify_cmd->add_option("--max-vertices", suite_config.max_vertices)->capture_default_str();
  verify_cmd->add_option("--threads", suite_config.threads, "Worker threads, 0 = auto")->capture_default_str();

  std::string sum_expr;
  std::string sum_output;
  auto* sum_cmd = app.add_subcommand("sum", "Evaluate a connected-sum expression and write the result");
  sum_cmd->add_option("--expr", sum_expr)->required();
  sum_cmd->add_option("-o,--output", sum_output, "Output file (default stdout)");

  std::vector<std::string> argv_storage{"bettikit"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }

  try {
    if (*gen_cmd) return do_gen(gen, out);
    if (*betti_cmd) return do_betti(betti, limits, out);
    if (*hochster_cmd) return do_hochster(hochster, limits, out);
    if (*verify_cmd) return do_verify(suite, suite_config, out);
    if (*sum_cmd) return do_sum(sum_expr, sum_output, limits, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.code());
  }
  return kUsageError;
}

}  // namespace bettikit::cli
